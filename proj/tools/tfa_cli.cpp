#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <vector>

#include "tfa/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tfa: time-frequency analysis toolkit and verification harness"};

    std::string config_path;
    std::string experiment_id;
    std::vector<std::string> raw_params;
    bool list = false;
    std::string out_dir;
    std::string format;
    long long seed = -1;
    int jobs = 0;

    app.add_option("--config", config_path, "config file (key = value with [sections])");
    app.add_option("--experiment", experiment_id, "run a single experiment by id");
    app.add_option("--param", raw_params, "experiment parameter k=v (repeatable)");
    app.add_flag("--list", list, "list available experiments and exit");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out_dir, "output directory for reports");
    app.add_option("--format", format, "report format: json, csv or both");
    app.add_option("--jobs", jobs, "number of experiments to run concurrently");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        std::fputs(tfa::list_experiments().c_str(), stdout);
        return 0;
    }

    tfa::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = tfa::parse_config_file(config_path);
        tfa::apply_env_overrides(cfg);
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (!format.empty()) tfa::set_formats(cfg, format);
        if (jobs > 0) cfg.jobs = jobs;

        if (!experiment_id.empty()) {
            tfa::ParamMap pm;
            for (const auto& kv : raw_params) {
                const size_t eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::fprintf(stderr, "error: --param expects k=v, got '%s'\n", kv.c_str());
                    return 2;
                }
                pm[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            cfg.experiments = {{experiment_id, pm}};
        } else if (!raw_params.empty()) {
            std::fprintf(stderr, "error: --param requires --experiment\n");
            return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    return tfa::run(cfg).exit_code;
}
