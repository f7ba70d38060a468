#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tfa/experiments.hpp"

namespace tfa {

/// One run: grid, lattice, seed, experiment selection, output options.
struct RunConfig {
    int grid_n = 128;
    double grid_l = 12.0;
    int lattice_a = 0;  // 0 -> default lattice for the grid
    int lattice_b = 0;
    std::uint64_t seed = 1;
    std::string out_dir = "reports";
    bool write_json = true;
    bool write_csv = false;
    int jobs = 1;
    /// Experiment ids with parameter overrides; empty selects the full suite.
    std::vector<std::pair<std::string, ParamMap>> experiments;
};

/// Key-value config file with [section] headers; unknown keys are errors.
RunConfig parse_config_file(const std::string& path);

/// Applies TFA_<SECTION>_<KEY> environment overrides onto a config.
void apply_env_overrides(RunConfig& cfg);

/// Parses a --format value (json|csv|both).
void set_formats(RunConfig& cfg, const std::string& formats);

struct RunResult {
    int exit_code = 0;  // 0 all pass, 1 failures, 2 config error
    std::vector<ExperimentReport> reports;
    std::string error;  // set when exit_code == 2
};

/// Executes the selected experiments, writes one report file per experiment
/// plus a summary, prints one line per experiment.
RunResult run(const RunConfig& cfg);

/// Text table: id, parameter schema, checked claim.
std::string list_experiments();

}  // namespace tfa
