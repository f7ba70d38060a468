#include "tfa/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tfa/lattice.hpp"

namespace tfa {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string upper(std::string s) {
    for (char& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void apply_run_key(RunConfig& cfg, const std::string& section, const std::string& key,
                   const std::string& value) {
    if (section == "grid") {
        if (key == "n") cfg.grid_n = std::stoi(value);
        else if (key == "l") cfg.grid_l = std::stod(value);
        else throw std::invalid_argument("unknown config key grid." + key);
    } else if (section == "lattice") {
        if (key == "a") cfg.lattice_a = std::stoi(value);
        else if (key == "b") cfg.lattice_b = std::stoi(value);
        else throw std::invalid_argument("unknown config key lattice." + key);
    } else if (section == "run") {
        if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "out") cfg.out_dir = value;
        else if (key == "format") set_formats(cfg, value);
        else if (key == "jobs") cfg.jobs = std::stoi(value);
        else if (key == "experiments") {
            cfg.experiments.clear();
            if (value != "all") {
                for (const auto& id : split_list(value)) cfg.experiments.push_back({id, {}});
            }
        } else {
            throw std::invalid_argument("unknown config key run." + key);
        }
    } else if (section.rfind("experiment:", 0) == 0) {
        const std::string id = section.substr(11);
        for (auto& [eid, pm] : cfg.experiments) {
            if (eid == id) {
                pm[key] = value;
                return;
            }
        }
        cfg.experiments.push_back({id, {{key, value}}});
    } else {
        throw std::invalid_argument("unknown config section [" + section + "]");
    }
}

}  // namespace

void set_formats(RunConfig& cfg, const std::string& formats) {
    if (formats == "json") {
        cfg.write_json = true;
        cfg.write_csv = false;
    } else if (formats == "csv") {
        cfg.write_json = false;
        cfg.write_csv = true;
    } else if (formats == "both") {
        cfg.write_json = true;
        cfg.write_csv = true;
    } else {
        throw std::invalid_argument("format must be json, csv or both, got '" + formats + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": key outside a [section]");
        }
        apply_run_key(cfg, section, key, value);
    }
    return cfg;
}

void apply_env_overrides(RunConfig& cfg) {
    auto get = [](const std::string& name) -> const char* { return std::getenv(name.c_str()); };
    struct Entry {
        const char* env;
        std::string section, key;
    };
    const std::vector<Entry> entries = {
        {"TFA_GRID_N", "grid", "n"},     {"TFA_GRID_L", "grid", "l"},
        {"TFA_LATTICE_A", "lattice", "a"}, {"TFA_LATTICE_B", "lattice", "b"},
        {"TFA_RUN_SEED", "run", "seed"}, {"TFA_RUN_OUT", "run", "out"},
        {"TFA_RUN_FORMAT", "run", "format"}, {"TFA_RUN_JOBS", "run", "jobs"},
        {"TFA_RUN_EXPERIMENTS", "run", "experiments"},
    };
    for (const auto& e : entries) {
        if (const char* v = get(e.env)) apply_run_key(cfg, e.section, e.key, v);
    }
    // TFA_EXPERIMENT_<ID>_<KEY> for per-experiment parameters.
    for (const auto& def : experiment_registry()) {
        for (const auto& spec : def.params) {
            const std::string name = "TFA_EXPERIMENT_" + upper(def.id) + "_" + upper(spec.name);
            if (const char* v = get(name)) {
                apply_run_key(cfg, "experiment:" + def.id, spec.name, v);
            }
        }
    }
}

std::string list_experiments() {
    std::ostringstream os;
    os << "id                                parameters                       claim\n";
    os << "--------------------------------  -------------------------------  -----\n";
    for (const auto& def : experiment_registry()) {
        std::ostringstream ps;
        for (size_t i = 0; i < def.params.size(); ++i) {
            if (i) ps << " ";
            ps << def.params[i].name << "=" << def.params[i].default_value;
        }
        char idbuf[40], pbuf[40];
        std::snprintf(idbuf, sizeof idbuf, "%-32s", def.id.c_str());
        std::snprintf(pbuf, sizeof pbuf, "%-31s", ps.str().c_str());
        os << idbuf << "  " << pbuf << "  " << def.claim << "\n";
    }
    return os.str();
}

RunResult run(const RunConfig& cfg) {
    RunResult result;

    // Validate selection before doing any work.
    std::vector<std::pair<const ExperimentDef*, ParamMap>> plan;
    if (cfg.experiments.empty()) {
        for (const auto& def : experiment_registry()) plan.push_back({&def, {}});
    } else {
        for (const auto& [id, pm] : cfg.experiments) {
            const ExperimentDef* def = find_experiment(id);
            if (def == nullptr) {
                result.exit_code = 2;
                result.error = "unknown experiment id '" + id + "'";
                std::fprintf(stderr, "error: %s\n", result.error.c_str());
                return result;
            }
            for (const auto& [prev, prev_pm] : plan) {
                if (prev->id == id) {
                    result.exit_code = 2;
                    result.error = "experiment id '" + id + "' listed twice";
                    std::fprintf(stderr, "error: %s\n", result.error.c_str());
                    return result;
                }
            }
            try {
                validate_param_names(*def, pm);
            } catch (const std::exception& e) {
                result.exit_code = 2;
                result.error = e.what();
                std::fprintf(stderr, "error: %s\n", result.error.c_str());
                return result;
            }
            plan.push_back({def, pm});
        }
    }

    ExperimentContext ctx;
    try {
        ctx.grid = make_grid(cfg.grid_n, cfg.grid_l);
        ctx.lattice = (cfg.lattice_a > 0 && cfg.lattice_b > 0)
                          ? make_lattice(ctx.grid, cfg.lattice_a, cfg.lattice_b)
                          : default_lattice(ctx.grid);
        ctx.seed = cfg.seed;
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
        std::fprintf(stderr, "error: %s\n", result.error.c_str());
        return result;
    }

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) {
        result.exit_code = 2;
        result.error = "cannot create output directory '" + cfg.out_dir + "'";
        std::fprintf(stderr, "error: %s\n", result.error.c_str());
        return result;
    }

    // Bounded fan-out over experiments; each report lands in its plan slot so
    // output order and file contents do not depend on scheduling.
    result.reports.resize(plan.size());
    std::vector<std::string> failures(plan.size());
    std::mutex mu;
    size_t next = 0;
    const int jobs = std::max(1, cfg.jobs);
    auto worker = [&]() {
        for (;;) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= plan.size()) return;
                idx = next++;
            }
            try {
                result.reports[idx] = run_experiment(*plan[idx].first, ctx, plan[idx].second);
            } catch (const std::exception& e) {
                failures[idx] = e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < plan.size(); ++i) {
        if (!failures[i].empty()) {
            result.exit_code = 2;
            result.error = std::string(plan[i].first->id) + ": " + failures[i];
            std::fprintf(stderr, "error: %s\n", result.error.c_str());
            return result;
        }
    }

    bool all_pass = true;
    nlohmann::ordered_json summary;
    summary["seed"] = cfg.seed;
    summary["grid"] = {{"n", cfg.grid_n}, {"l", cfg.grid_l}};
    auto& items = summary["experiments"] = nlohmann::ordered_json::array();
    for (const auto& rep : result.reports) {
        all_pass = all_pass && rep.pass;
        items.push_back({{"experiment_id", rep.experiment_id}, {"pass", rep.pass}});
        std::printf("[%s] %s (%lld ms)\n", rep.pass ? "PASS" : "FAIL", rep.experiment_id.c_str(),
                    static_cast<long long>(rep.runtime_ms));

        const std::filesystem::path base = std::filesystem::path(cfg.out_dir) / rep.experiment_id;
        if (cfg.write_json) {
            std::ofstream out(base.string() + ".json", std::ios::binary);
            out << rep.to_json();
        }
        if (cfg.write_csv) {
            std::ofstream out(base.string() + ".csv", std::ios::binary);
            out << ExperimentReport::csv_header() << "\n";
            for (const auto& row : rep.to_csv_rows()) out << row << "\n";
        }
    }
    summary["pass"] = all_pass;
    {
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "summary.json", std::ios::binary);
        out << summary.dump(2) << "\n";
    }
    std::printf("%zu experiments, %s\n", result.reports.size(), all_pass ? "all passed" : "FAILURES");

    result.exit_code = all_pass ? 0 : 1;
    return result;
}

}  // namespace tfa
