#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tfa/grid.hpp"
#include "tfa/lattice.hpp"
#include "tfa/report.hpp"

namespace tfa {

struct ExperimentContext {
    GridSpec grid;
    Lattice lattice;
    std::uint64_t seed = 1;
};

using ParamMap = std::map<std::string, std::string>;

struct ParamSpec {
    std::string name;
    std::string default_value;
    std::string description;
};

struct ExperimentDef {
    std::string id;
    std::string claim;
    std::vector<ParamSpec> params;
    std::function<ExperimentReport(const ExperimentContext&, const ParamMap&)> body;
};

const std::vector<ExperimentDef>& experiment_registry();
const ExperimentDef* find_experiment(const std::string& id);

/// Runs one experiment: body + timing + pass evaluation. Throws
/// std::invalid_argument on unknown parameter names or bad values.
ExperimentReport run_experiment(const ExperimentDef& def, const ExperimentContext& ctx,
                                const ParamMap& params);

/// Parameter helpers ("inf" parses to infinity).
double param_double(const ParamMap& p, const ParamSpec& spec);
int param_int(const ParamMap& p, const ParamSpec& spec);
bool param_bool(const ParamMap& p, const ParamSpec& spec);
void validate_param_names(const ExperimentDef& def, const ParamMap& params);

}  // namespace tfa
