// config.hpp: Scenario configuration, key=value parsing and CSV tables for the degjc tool

#pragma once

#include "degjc/model.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace degjc::cli {

inline constexpr const char* kVersion = DEGJC_VERSION;

/// Bad flag, bad config file, or a scenario that cannot run with the given settings.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { Envelope, ConcurrenceSweep, BetaSweep, Esd, Separability, Validate };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& text);

/// vacuum | coherent:alpha=RE,IM | number:n=K | thermal:nbar=F
FieldSpec parse_field(const std::string& text);

/// Initial qubit state: a Bell state, or nullopt for the ESD mixture.
using QubitInput = std::optional<BellState>;

/// phi+ | phi- | psi+ | psi- | esd-mixture
QubitInput parse_bell(const std::string& text);
std::string bell_text(const QubitInput& q);

struct ScenarioConfig {
    Scenario scenario = Scenario::ConcurrenceSweep;
    std::optional<double> omega;      // set: emit an absolute-time column t = (omega t) / omega
    double omega0 = 0.0;
    std::vector<double> betas;        // empty: scenario default
    std::vector<FieldSpec> fields;    // empty: scenario default
    std::optional<QubitInput> bell;   // unset: scenario default
    std::optional<double> omega_t_max;
    std::optional<int> steps;         // unset: scenario default
    std::optional<int> ncut;          // unset: per-field heuristic
    double tail_tol = 1e-10;
    bool compare_oracle = false;
    std::optional<double> tolerance;  // unset: per-check default
    std::string out;                  // empty: stdout

    /// Throws ConfigError on violated invariants (steps >= 2, omega_t_max > 0, tolerance > 0, ...).
    void validate() const;

    /// key=value lines for the metadata header, in a fixed order.
    std::vector<std::string> echo() const;
};

/// Applies one setting. Keys mirror the long flag names without dashes
/// (beta, omega, omega0, field, bell, omega-t-max, steps, ncut, tail-tol,
/// compare-oracle, tolerance, out, scenario). `beta` takes a comma list and
/// `field` a ';' list; a later call replaces the earlier value.
void apply_setting(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Parses flat key=value text. Blank lines and lines starting with '#' are ignored.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in);

/// 17 significant digits, so every double round-trips.
std::string format_real(double x);

/// CSV with '#'-prefixed metadata lines before the header row.
struct Table {
    std::vector<std::string> metadata;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os) const;
};

}  // namespace degjc::cli
