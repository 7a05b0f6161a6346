// degjc: scenario runner for the degenerate Jaynes-Cummings two-qubit model.
// Settings are applied in order: scenario defaults, then --config file, then flags.

#include "degjc/config.hpp"
#include "degjc/scenarios.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

using namespace degjc::cli;

int main(int argc, char** argv) {
    CLI::App app{"Two remote qubits in the degenerate Jaynes-Cummings regime: closed forms and a Fock-space oracle"};
    app.set_version_flag("--version", std::string("degjc ") + kVersion);

    std::string scenario;
    std::optional<std::string> beta, omega, omega0, bell, omega_t_max, steps, ncut, tail_tol, tolerance, out, config;
    std::vector<std::string> fields;
    bool compare_oracle = false;

    app.add_option("scenario", scenario, "envelope | concurrence-sweep | beta-sweep | esd | separability | validate")
        ->required();
    app.add_option("--beta", beta, "coupling lambda/omega; comma list allowed");
    app.add_option("--omega", omega, "oscillator frequency; adds an absolute time column");
    app.add_option("--omega0", omega0, "qubit splitting (closed forms need 0)");
    app.add_option("--field", fields, "vacuum | coherent:alpha=RE,IM | number:n=K | thermal:nbar=F (repeatable)");
    app.add_option("--bell", bell, "phi+ | phi- | psi+ | psi- | esd-mixture");
    app.add_option("--omega-t-max", omega_t_max, "end of the omega*t grid");
    app.add_option("--steps", steps, "grid points");
    app.add_option("--ncut", ncut, "Fock cutoff (default: per-field heuristic)");
    app.add_option("--tail-tol", tail_tol, "largest accepted population beyond the cutoff");
    app.add_flag("--compare-oracle", compare_oracle, "add the numerical propagator column");
    app.add_option("--tolerance", tolerance, "error tolerance for oracle comparisons");
    app.add_option("--out", out, "output CSV path (default stdout)");
    app.add_option("--config", config, "key=value file mirroring the flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadConfig;
    }

    ScenarioConfig cfg;
    try {
        cfg.scenario = parse_scenario(scenario);
        if (config) {
            std::ifstream in(*config);
            if (!in) throw ConfigError("cannot read config file '" + *config + "'");
            for (const auto& [key, value] : parse_config_text(in)) {
                if (key == "scenario" && parse_scenario(value) != cfg.scenario)
                    throw ConfigError("config file scenario '" + value + "' conflicts with '" + scenario + "'");
                apply_setting(cfg, key, value);
            }
        }
        const std::pair<const char*, const std::optional<std::string>*> flags[] = {
            {"beta", &beta},   {"omega", &omega},           {"omega0", &omega0},       {"bell", &bell},
            {"steps", &steps}, {"omega-t-max", &omega_t_max}, {"ncut", &ncut},         {"tail-tol", &tail_tol},
            {"tolerance", &tolerance}, {"out", &out},
        };
        for (const auto& [key, value] : flags)
            if (*value) apply_setting(cfg, key, **value);
        if (!fields.empty()) {
            std::string joined;
            for (std::size_t i = 0; i < fields.size(); ++i) joined += (i ? ";" : "") + fields[i];
            apply_setting(cfg, "field", joined);
        }
        if (compare_oracle) cfg.compare_oracle = true;
    } catch (const ConfigError& e) {
        std::cerr << "degjc: configuration error: " << e.what() << '\n';
        return kExitBadConfig;
    }

    return execute(cfg, std::cout, std::cerr);
}
