// scenarios.cpp

#include "degjc/scenarios.hpp"

#include "degjc/closedform.hpp"
#include "degjc/entanglement.hpp"
#include "degjc/oracle.hpp"
#include "degjc/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace degjc::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDefaultOracleTol = 1e-7;
constexpr double kDoublingTol = 1e-8;
constexpr double kSpectrumTol = 1e-8;
constexpr double kPropagationTol = 1e-8;
constexpr double kNegativityTol = 1e-9;
constexpr double kControlTol = 1e-12;

// Concurrences below 1e-15 are printed as 0; the computed values are left untouched.
std::string format_concurrence(double c) { return format_real(std::abs(c) < 1e-15 ? 0.0 : c); }

std::vector<double> linspace(double hi, int steps) {
    std::vector<double> g(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) g[static_cast<std::size_t>(k)] = hi * k / (steps - 1);
    return g;
}

std::vector<double> betas_or(const ScenarioConfig& cfg, std::vector<double> fallback) {
    return cfg.betas.empty() ? fallback : cfg.betas;
}

std::vector<FieldSpec> fields_or(const ScenarioConfig& cfg, std::vector<FieldSpec> fallback) {
    return cfg.fields.empty() ? fallback : cfg.fields;
}

std::vector<FieldSpec> figure_fields() {
    return {FieldSpec::coherent({1.0, 0.0}), FieldSpec::number(25), FieldSpec::number(1), FieldSpec::thermal(25.0),
            FieldSpec::thermal(1.0)};
}

void require_degenerate(const ScenarioConfig& cfg) {
    if (cfg.omega0 != 0.0)
        throw ConfigError("scenario " + to_string(cfg.scenario) +
                          " evaluates closed forms, which require omega0 = 0 (use concurrence-sweep "
                          "--compare-oracle or separability to explore omega0 != 0)");
}

double base_omega(const ScenarioConfig& cfg) { return cfg.omega.value_or(1.0); }

ModelParams params_for(const ScenarioConfig& cfg, double beta) {
    return ModelParams::from_beta(beta, base_omega(cfg), cfg.omega0);
}

std::vector<std::string> common_metadata(const ScenarioConfig& cfg) {
    std::vector<std::string> m;
    m.push_back(std::string("degjc ") + kVersion);
    for (const auto& line : cfg.echo()) m.push_back("config " + line);
    m.push_back("time axis: omega_t is the dimensionless phase omega*t");
    return m;
}

const char* kTruncationNote =
    "truncation policy: Fock cutoff from a displacement/tail heuristic, accepted only after a cutoff-doubling "
    "check; this policy is a numerical choice of the tool";

// Appends omega_t and, when --omega is set, the absolute time.
void time_cells(const ScenarioConfig& cfg, double wt, std::vector<std::string>& row) {
    row.push_back(format_real(wt));
    if (cfg.omega) row.push_back(format_real(wt / *cfg.omega));
}

void time_header(const ScenarioConfig& cfg, std::vector<std::string>& header) {
    header.push_back("omega_t");
    if (cfg.omega) header.push_back("t");
}

QubitPairState initial_state(const QubitInput& q) {
    return q ? make_bell(*q, QubitBasis::SigmaX) : make_esd_mixture();
}

double closed_concurrence(const QubitInput& q, const FieldSpec& field, double beta, double wt) {
    if (q) return closedform::concurrence_closed(*q, field, beta, wt);
    const QubitPairState s = closedform::evolve_pair_closed(make_esd_mixture(), field, beta, wt);
    return entanglement::concurrence(s).value;
}

int cutoff_for(const ScenarioConfig& cfg, const FieldSpec& field, double beta) {
    return cfg.ncut ? *cfg.ncut : oracle::default_ncut(field, beta, cfg.tail_tol);
}

int doubling_stride(int steps) { return std::max(1, steps / 8); }

std::string series_label(const FieldSpec& field, double beta) {
    return "field=" + field.describe() + " beta=" + format_real(beta);
}

std::string truncation_line(const std::string& label, const oracle::OracleTrace& t) {
    return "oracle " + label + " ncut=" + std::to_string(t.ncut) + " tail_mass=" + format_real(t.tail_mass) +
           " doubling_error=" + format_real(t.doubling_error);
}

// ---------------------------------------------------------------------------------------------
// validation pieces

double spectrum_error(double beta, int ncut) {
    const auto prop = oracle::SubsystemPropagator::build(ModelParams::from_beta(beta), {ncut, 1e-10});
    const Eigen::VectorXd e = prop.energies();
    double err = 0.0;
    for (int k = 0; k < 10; ++k) err = std::max(err, std::abs(e(k) - e(0) - k / 2));
    return err;
}

double propagation_error(cplx alpha, double beta, double wt) {
    const FieldSpec field = FieldSpec::coherent(alpha);
    const int ncut = oracle::default_ncut(field, beta);
    const auto prop = oracle::SubsystemPropagator::build(ModelParams::from_beta(beta), {ncut, 1e-10});
    // The oracle Hamiltonian omits the constant lambda^2/omega, which shifts both branches by exp(+i beta^2 wt).
    const cplx shift = std::polar(1.0, beta * beta * wt);
    double err = 0.0;
    for (bool up : {true, false}) {
        const Eigen::Vector2cd q = up ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
        const Eigen::VectorXcd numeric =
            oracle::propagate_state(prop, oracle::product_state(q, oracle::coherent_vector(alpha, ncut)), wt);
        const auto pc = closedform::propagate_coherent(alpha, up, beta, wt);
        const Eigen::VectorXcd analytic =
            pc.phase * shift * oracle::product_state(q, oracle::coherent_vector(pc.amplitude, ncut));
        const cplx overlap = analytic.dot(numeric);
        err = std::max({err, 1.0 - std::norm(overlap), std::abs(overlap - 1.0)});
    }
    return err;
}

double max_negativity(const FieldSpec& field, double beta, const std::vector<double>& grid, double tail_tol) {
    const oracle::TruncationSpec trunc{oracle::default_ncut(field, beta, tail_tol), tail_tol};
    const auto prop = oracle::SubsystemPropagator::build(ModelParams::from_beta(beta), trunc);
    const int n = trunc.ncut + 1;
    double worst = 0.0;
    for (double wt : grid) {
        const Eigen::MatrixXcd rho = oracle::field_field_reduced(prop, prop, BellState::PhiPlus, field, trunc, wt);
        worst = std::max(worst, entanglement::negativity(rho, n, n));
    }
    return worst;
}

}  // namespace

// -------------------------------------------------------------------------------------------------

RunResult run_envelope(const ScenarioConfig& cfg) {
    require_degenerate(cfg);
    const auto betas = betas_or(cfg, {0.75, 0.1});
    const auto grid = linspace(cfg.omega_t_max.value_or(2.0 * kTwoPi), cfg.steps.value_or(201));
    RunResult r;
    r.table.metadata = common_metadata(cfg);
    r.table.metadata.push_back("envelope = exp(-2 beta^2 |exp(i omega_t) - 1|^2)");
    time_header(cfg, r.table.header);
    r.table.header.insert(r.table.header.end(), {"beta", "envelope"});
    for (double beta : betas) {
        for (double wt : grid) {
            std::vector<std::string> row;
            time_cells(cfg, wt, row);
            row.push_back(format_real(beta));
            row.push_back(format_real(closedform::modulation_factor(beta, wt)));
            r.table.rows.push_back(std::move(row));
        }
    }
    return r;
}

RunResult run_concurrence_sweep(const ScenarioConfig& cfg) {
    const bool closed = cfg.omega0 == 0.0;
    if (!closed && !cfg.compare_oracle)
        throw ConfigError("omega0 != 0 has no closed form; pass --compare-oracle to run the numerical propagator");
    const auto betas = betas_or(cfg, {0.5, 0.1});
    const auto fields = fields_or(cfg, figure_fields());
    const QubitInput qubits = cfg.bell.value_or(QubitInput{BellState::PhiPlus});
    const int steps = cfg.steps.value_or(201);
    const auto grid = linspace(cfg.omega_t_max.value_or(kTwoPi), steps);
    const double tol = cfg.tolerance.value_or(kDefaultOracleTol);

    RunResult r;
    r.table.metadata = common_metadata(cfg);
    if (!closed) r.table.metadata.push_back("omega0 != 0: numerical exploration only, no closed-form column");
    time_header(cfg, r.table.header);
    r.table.header.insert(r.table.header.end(), {"field", "beta"});
    if (closed) r.table.header.push_back("concurrence_closed");
    if (cfg.compare_oracle) {
        r.table.header.push_back("concurrence_oracle");
        if (closed) r.table.header.push_back("abs_error");
        r.table.metadata.push_back(kTruncationNote);
    }

    double worst = 0.0;
    for (const auto& field : fields) {
        for (double beta : betas) {
            std::vector<double> oracle_values;
            if (cfg.compare_oracle) {
                const oracle::TruncationSpec trunc{cutoff_for(cfg, field, beta), cfg.tail_tol};
                const auto trace = oracle::concurrence_trace(params_for(cfg, beta), field, initial_state(qubits), grid,
                                                             trunc, kDoublingTol, doubling_stride(steps));
                r.table.metadata.push_back(truncation_line(series_label(field, beta), trace));
                oracle_values = trace.concurrence;
            }
            for (std::size_t k = 0; k < grid.size(); ++k) {
                std::vector<std::string> row;
                time_cells(cfg, grid[k], row);
                row.push_back(field.describe());
                row.push_back(format_real(beta));
                double c = 0.0;
                if (closed) {
                    c = closed_concurrence(qubits, field, beta, grid[k]);
                    row.push_back(format_concurrence(c));
                }
                if (cfg.compare_oracle) {
                    row.push_back(format_concurrence(oracle_values[k]));
                    if (closed) {
                        const double e = std::abs(oracle_values[k] - c);
                        worst = std::max(worst, e);
                        row.push_back(format_real(e));
                    }
                }
                r.table.rows.push_back(std::move(row));
            }
        }
    }
    if (cfg.compare_oracle && closed) {
        r.table.metadata.push_back("max_abs_error=" + format_real(worst) + " tolerance=" + format_real(tol));
        if (worst > tol) r.exit_code = kExitValidationFailure;
    }
    return r;
}

RunResult run_beta_sweep(const ScenarioConfig& cfg) {
    require_degenerate(cfg);
    const auto betas = betas_or(cfg, linspace(1.0, cfg.steps.value_or(201)));
    const auto fields = fields_or(cfg, figure_fields());
    RunResult r;
    r.table.metadata = common_metadata(cfg);
    r.table.metadata.push_back("concurrence evaluated at omega_t = pi");
    r.table.header = {"beta", "field", "concurrence_half_period"};
    for (const auto& field : fields) {
        for (double beta : betas) {
            r.table.rows.push_back(
                {format_real(beta), field.describe(), format_concurrence(closedform::concurrence_at_half_period(field, beta))});
        }
    }
    return r;
}

RunResult run_esd(const ScenarioConfig& cfg) {
    require_degenerate(cfg);
    const auto betas = betas_or(cfg, {0.1});
    const auto fields = fields_or(cfg, {FieldSpec::thermal(25.0), FieldSpec::thermal(2.0)});
    const int steps = cfg.steps.value_or(201);
    const auto grid = linspace(cfg.omega_t_max.value_or(kTwoPi), steps);
    const double tol = cfg.tolerance.value_or(kDefaultOracleTol);

    RunResult r;
    r.table.metadata = common_metadata(cfg);
    r.table.metadata.push_back("initial qubits: phi+ and 3/4 phi+ + 1/8 |up,down><up,down| + 1/8 |down,up><down,up|");
    time_header(cfg, r.table.header);
    r.table.header.insert(r.table.header.end(), {"beta", "nbar", "concurrence_phi_plus", "concurrence_esd_mixture"});
    if (cfg.compare_oracle) {
        r.table.header.insert(r.table.header.end(), {"concurrence_esd_oracle", "abs_error"});
        r.table.metadata.push_back(kTruncationNote);
    }

    double worst = 0.0;
    for (const auto& field : fields) {
        const auto* thermal = std::get_if<Thermal>(&field.kind());
        if (!thermal) throw ConfigError("esd scenario needs thermal fields, got " + field.describe());
        const double nbar = thermal->nbar;
        for (double beta : betas) {
            std::vector<double> oracle_values;
            if (cfg.compare_oracle) {
                const oracle::TruncationSpec trunc{cutoff_for(cfg, field, beta), cfg.tail_tol};
                const auto trace = oracle::concurrence_trace(params_for(cfg, beta), field, make_esd_mixture(), grid,
                                                             trunc, kDoublingTol, doubling_stride(steps));
                r.table.metadata.push_back(truncation_line(series_label(field, beta), trace));
                oracle_values = trace.concurrence;
            }

            int first = -1, last = -1;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double mix = closedform::esd_concurrence_closed(beta, nbar, grid[k]);
                if (mix == 0.0) {
                    if (first < 0) first = static_cast<int>(k);
                    last = static_cast<int>(k);
                }
                std::vector<std::string> row;
                time_cells(cfg, grid[k], row);
                row.push_back(format_real(beta));
                row.push_back(format_real(nbar));
                row.push_back(format_concurrence(closedform::concurrence_closed(BellState::PhiPlus, field, beta, grid[k])));
                row.push_back(format_concurrence(mix));
                if (cfg.compare_oracle) {
                    const double e = std::abs(oracle_values[k] - mix);
                    worst = std::max(worst, e);
                    row.push_back(format_concurrence(oracle_values[k]));
                    row.push_back(format_real(e));
                }
                r.table.rows.push_back(std::move(row));
            }

            const std::string label = "esd beta=" + format_real(beta) + " nbar=" + format_real(nbar);
            // Zero iff 4(1+2 nbar) beta^2 |gamma|^2 >= ln 3, i.e. cos(omega t) <= 1 - ln3 / (8 (1+2 nbar) beta^2).
            const double strength = 8.0 * (1.0 + 2.0 * nbar) * beta * beta;
            if (2.0 * strength >= std::log(3.0)) {
                const double start = std::acos(1.0 - std::log(3.0) / strength);
                r.table.metadata.push_back(label + " exact_interval=[" + format_real(start) + "," +
                                           format_real(kTwoPi - start) + "] (first period)");
            } else {
                r.table.metadata.push_back(label + " exact_interval=none");
            }
            if (first >= 0)
                r.table.metadata.push_back(label + " grid_interval=[" + format_real(grid[static_cast<std::size_t>(first)]) +
                                           "," + format_real(grid[static_cast<std::size_t>(last)]) + "]");
            else
                r.table.metadata.push_back(label + " grid_interval=none");
        }
    }
    if (cfg.compare_oracle) {
        r.table.metadata.push_back("max_abs_error=" + format_real(worst) + " tolerance=" + format_real(tol));
        if (worst > tol) r.exit_code = kExitValidationFailure;
    }
    return r;
}

RunResult run_separability(const ScenarioConfig& cfg) {
    const auto betas = betas_or(cfg, {0.75});
    const auto fields = fields_or(cfg, {FieldSpec::vacuum()});
    const BellState bell = cfg.bell.value_or(QubitInput{BellState::PhiPlus})
                               .value_or(BellState::PhiPlus);
    if (cfg.bell && !*cfg.bell) throw ConfigError("separability needs a Bell state, not the ESD mixture");
    const int steps = cfg.steps.value_or(33);
    const auto grid = linspace(cfg.omega_t_max.value_or(kTwoPi), steps);

    RunResult r;
    r.table.metadata = common_metadata(cfg);
    r.table.metadata.push_back(kTruncationNote);
    time_header(cfg, r.table.header);
    r.table.header.insert(r.table.header.end(),
                          {"field", "beta", "negativity_fields", "concurrence_qubits", "purity_qubit_a",
                           "purity_field_a", "purity_qubits", "purity_fields"});
    const bool closed_columns = cfg.omega0 == 0.0 && std::holds_alternative<Vacuum>(fields.front().kind()) &&
                                fields.size() == 1;
    if (closed_columns)
        r.table.header.insert(r.table.header.end(), {"purity_field_a_closed", "purity_qubits_closed"});

    for (const auto& field : fields) {
        if (!field.is_pure()) throw ConfigError("separability needs a pure field, got " + field.describe());
        for (double beta : betas) {
            const ModelParams params = params_for(cfg, beta);
            const oracle::TruncationSpec trunc{cutoff_for(cfg, field, beta), cfg.tail_tol};
            const oracle::TruncationSpec doubled{2 * trunc.ncut, cfg.tail_tol};
            const auto prop = oracle::SubsystemPropagator::build(params, trunc);
            const auto prop2 = oracle::SubsystemPropagator::build(params, doubled);
            const int n = trunc.ncut + 1;
            double doubling = 0.0;
            double worst_negativity = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double wt = grid[k];
                const auto state = oracle::FourPartyState::evolve(prop, prop, bell, field, trunc, wt);
                const Eigen::MatrixXcd fields_rho = state.fields();
                const double neg = entanglement::negativity(fields_rho, n, n);
                worst_negativity = std::max(worst_negativity, neg);
                const Mat4 q = state.qubits();
                const double pq = entanglement::purity(q);
                const double pfa = entanglement::purity(state.field_a());
                if (k % static_cast<std::size_t>(doubling_stride(steps)) == 0 || k + 1 == grid.size()) {
                    const auto check = oracle::FourPartyState::evolve(prop2, prop2, bell, field, doubled, wt);
                    doubling = std::max({doubling, std::abs(entanglement::purity(check.qubits()) - pq),
                                         std::abs(entanglement::purity(check.field_a()) - pfa)});
                }
                const Mat4 qh = 0.5 * (q + q.adjoint());
                std::vector<std::string> row;
                time_cells(cfg, wt, row);
                row.push_back(field.describe());
                row.push_back(format_real(beta));
                row.push_back(format_real(neg));
                row.push_back(format_concurrence(
                    entanglement::concurrence(QubitPairState(qh / qh.trace().real(), QubitBasis::SigmaX)).value));
                row.push_back(format_real(entanglement::purity(state.qubit_a())));
                row.push_back(format_real(pfa));
                row.push_back(format_real(pq));
                row.push_back(format_real(entanglement::purity(fields_rho)));
                if (closed_columns) {
                    const auto p = closedform::vacuum_branch_purities(beta, wt);
                    row.push_back(format_real(p.field));
                    row.push_back(format_real(p.qubit_pair));
                }
                r.table.rows.push_back(std::move(row));
            }
            const std::string label = series_label(field, beta);
            r.table.metadata.push_back("oracle " + label + " ncut=" + std::to_string(trunc.ncut) + " tail_mass=" +
                                       format_real(oracle::field_tail_mass(field, trunc.ncut)) +
                                       " doubling_error=" + format_real(doubling));
            r.table.metadata.push_back("max_negativity " + label + " = " + format_real(worst_negativity));
            if (doubling > kDoublingTol)
                throw oracle::TruncationError("cutoff doubling changed reduced purities by " + format_real(doubling) +
                                              " for " + label);
        }
    }
    return r;
}

std::vector<CheckResult> validation_checks(const ScenarioConfig& cfg) {
    require_degenerate(cfg);
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, double err, double default_tol) {
        const double tol = cfg.tolerance.value_or(default_tol);
        out.push_back(CheckResult{name, err, tol, err <= tol});
    };
    const bool full = cfg.betas.empty() && cfg.fields.empty();
    const auto betas = betas_or(cfg, {0.1, 0.5});
    const auto fields = fields_or(cfg, {FieldSpec::vacuum(), FieldSpec::coherent({1.0, 0.5}), FieldSpec::number(1),
                                        FieldSpec::number(5), FieldSpec::thermal(1.0), FieldSpec::thermal(2.0)});
    const int steps = cfg.steps.value_or(64);
    const auto grid = linspace(kTwoPi, steps);

    if (full) {
        for (double beta : {0.25, 0.5, 1.0})
            add("spectrum[beta=" + format_real(beta) + "]", spectrum_error(beta, cfg.ncut.value_or(40)), kSpectrumTol);

        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> amp(-1.5, 1.5), coupling(0.0, 0.8), phase(0.0, kTwoPi);
        double worst = 0.0;
        for (int i = 0; i < 16; ++i) {
            const cplx alpha(amp(rng), amp(rng));
            const double beta = coupling(rng);
            const double wt = phase(rng);
            worst = std::max(worst, propagation_error(alpha, beta, wt));
        }
        add("coherent_propagation[16 random]", worst, kPropagationTol);
    }

    for (const auto& field : fields) {
        for (double beta : betas) {
            const oracle::TruncationSpec trunc{cutoff_for(cfg, field, beta), cfg.tail_tol};
            const auto trace = oracle::concurrence_trace(ModelParams::from_beta(beta), field,
                                                         make_bell(BellState::PhiPlus, QubitBasis::SigmaX), grid, trunc,
                                                         kDoublingTol, 1);
            double err = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k)
                err = std::max(err, std::abs(trace.concurrence[k] -
                                             closedform::concurrence_closed(BellState::PhiPlus, field, beta, grid[k])));
            const std::string label = "[" + series_label(field, beta) + "]";
            add("concurrence" + label, err, kDefaultOracleTol);
            add("doubling" + label, trace.doubling_error, kDoublingTol);
            add("revival_oracle" + label, std::abs(trace.concurrence.back() - 1.0), kDefaultOracleTol);
        }
    }

    if (full) {
        const auto esd_grid = linspace(kTwoPi, 9);
        const std::pair<double, double> esd_points[] = {{0.1, 25.0}, {0.1, 2.0}, {0.5, 2.0}, {0.25, 1.0}};
        for (const auto& [beta, nbar] : esd_points) {
            const FieldSpec field = FieldSpec::thermal(nbar);
            const oracle::TruncationSpec trunc{cutoff_for(cfg, field, beta), cfg.tail_tol};
            const auto trace = oracle::concurrence_trace(ModelParams::from_beta(beta), field, make_esd_mixture(),
                                                         esd_grid, trunc, kDoublingTol, 4);
            double err = 0.0;
            double lowest = 1.0;
            for (std::size_t k = 0; k < esd_grid.size(); ++k) {
                err = std::max(err, std::abs(trace.concurrence[k] -
                                             closedform::esd_concurrence_closed(beta, nbar, esd_grid[k])));
                lowest = std::min(lowest, trace.concurrence[k]);
            }
            const std::string label = "[beta=" + format_real(beta) + " nbar=" + format_real(nbar) + "]";
            add("esd_concurrence" + label, err, kDefaultOracleTol);
            const bool predicted = 16.0 * (1.0 + 2.0 * nbar) * beta * beta >= std::log(3.0);
            const bool observed = lowest <= 1e-12;
            add("esd_dichotomy" + label, predicted == observed ? 0.0 : 1.0, 0.5);
        }

        const auto sep_grid = linspace(kTwoPi, 9);
        for (const auto& field : {FieldSpec::vacuum(), FieldSpec::number(1)})
            for (double beta : {0.3, 0.75})
                add("negativity_fields[" + series_label(field, beta) + "]",
                    max_negativity(field, beta, sep_grid, cfg.tail_tol), kNegativityTol);

        Eigen::MatrixXcd bell = make_bell(BellState::PhiPlus, QubitBasis::SigmaZ).rho();
        add("negativity_bell_control", std::abs(entanglement::negativity(bell, 2, 2) - 0.5), kControlTol);
    }
    return out;
}

RunResult run_validate(const ScenarioConfig& cfg) {
    RunResult r;
    r.table.metadata = common_metadata(cfg);
    r.table.metadata.push_back(kTruncationNote);
    r.table.header = {"name", "max_error", "tolerance", "pass"};
    bool ok = true;
    for (const auto& c : validation_checks(cfg)) {
        r.table.rows.push_back({c.name, format_real(c.max_error), format_real(c.tolerance), c.pass ? "true" : "false"});
        ok = ok && c.pass;
    }
    if (!ok) r.exit_code = kExitValidationFailure;
    return r;
}

RunResult run_scenario(const ScenarioConfig& cfg) {
    switch (cfg.scenario) {
    case Scenario::Envelope: return run_envelope(cfg);
    case Scenario::ConcurrenceSweep: return run_concurrence_sweep(cfg);
    case Scenario::BetaSweep: return run_beta_sweep(cfg);
    case Scenario::Esd: return run_esd(cfg);
    case Scenario::Separability: return run_separability(cfg);
    case Scenario::Validate: return run_validate(cfg);
    }
    throw ConfigError("unknown scenario");
}

int execute(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    RunResult result;
    try {
        cfg.validate();
        result = run_scenario(cfg);
    } catch (const ConfigError& e) {
        err << "degjc: configuration error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const InvalidInput& e) {
        err << "degjc: invalid input: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const oracle::TruncationError& e) {
        err << "degjc: truncation failure: " << e.what() << '\n';
        return kExitTruncationFailure;
    } catch (const oracle::SolverError& e) {
        err << "degjc: solver failure: " << e.what() << '\n';
        return kExitTruncationFailure;
    }

    if (cfg.out.empty()) {
        result.table.write(out);
    } else {
        std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "degjc: cannot open output file '" << cfg.out << "'\n";
            return kExitBadConfig;
        }
        result.table.write(file);
        if (!file) {
            err << "degjc: failed writing '" << cfg.out << "'\n";
            return kExitBadConfig;
        }
    }
    if (result.exit_code == kExitValidationFailure) err << "degjc: validation failure (see report)\n";
    return result.exit_code;
}

}  // namespace degjc::cli
