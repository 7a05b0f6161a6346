// scenarios.hpp: Scenario runners behind the degjc command line

#pragma once

#include "degjc/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace degjc::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidationFailure = 1,
    kExitBadConfig = 2,
    kExitTruncationFailure = 3,
};

struct RunResult {
    Table table;
    int exit_code = kExitOk;
};

/// exp(-2 beta^2 |gamma|^2) per beta; defaults beta in {0.75, 0.1} on [0, 4 pi].
RunResult run_envelope(const ScenarioConfig& cfg);

/// Closed-form concurrence per (field, beta), optionally with the oracle trace and
/// absolute error. Defaults: beta in {0.5, 0.1}, fields coherent, number 25 and 1,
/// thermal 25 and 1. Exit 1 when an oracle error exceeds the tolerance (default 1e-7).
RunResult run_concurrence_sweep(const ScenarioConfig& cfg);

/// Concurrence at omega t = pi per field on a beta grid (default 0..1 with `steps` points).
RunResult run_beta_sweep(const ScenarioConfig& cfg);

/// Pure Phi+ and ESD-mixture concurrence for thermal fields, with ESD interval endpoints in the metadata.
RunResult run_esd(const ScenarioConfig& cfg);

/// Field-field negativity and reduced-state purities of the evolved four-party state.
RunResult run_separability(const ScenarioConfig& cfg);

struct CheckResult {
    std::string name;
    double max_error;
    double tolerance;
    bool pass;
};

/// Closed form versus oracle checks. With no beta or field given this is the full
/// grid (spectrum, propagation identity, concurrence traces, revival, ESD, separability);
/// otherwise only the concurrence traces for the given betas and fields.
std::vector<CheckResult> validation_checks(const ScenarioConfig& cfg);

/// Report with one row per check; exit 1 if any check fails.
RunResult run_validate(const ScenarioConfig& cfg);

RunResult run_scenario(const ScenarioConfig& cfg);

/// Validates cfg, runs it, writes the table to cfg.out (or `out` when empty) and
/// maps failures to exit codes, printing diagnostics to `err`.
int execute(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace degjc::cli
