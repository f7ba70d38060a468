// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion runs the corresponding experiments at their pinned
// tolerances and enforces the stated wall-clock budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "tfa/experiments.hpp"
#include "tfa/lattice.hpp"
#include "tfa/runner.hpp"

using namespace tfa;

namespace {

int g_failures = 0;

struct CriterionTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int index, const std::string& label, bool pass, long long ms, long long limit_ms,
            const std::string& detail) {
    const bool ok = pass && ms <= limit_ms;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%lld ms, limit %lld ms)%s%s\n", ok ? "PASS" : "FAIL",
                index, label.c_str(), ms, limit_ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

ExperimentContext default_context() {
    ExperimentContext ctx;
    ctx.grid = make_grid(128, 12.0);
    ctx.lattice = default_lattice(ctx.grid);
    ctx.seed = 1;
    return ctx;
}

// Runs a list of (id, params); returns pass of every report and collects a
// short failure description.
bool run_set(const std::vector<std::pair<std::string, ParamMap>>& items, std::string& detail) {
    const ExperimentContext ctx = default_context();
    bool all = true;
    std::ostringstream os;
    for (const auto& [id, pm] : items) {
        const ExperimentDef* def = find_experiment(id);
        if (def == nullptr) {
            all = false;
            os << id << ": unknown; ";
            continue;
        }
        ExperimentReport rep = run_experiment(*def, ctx, pm);
        if (!rep.pass) {
            all = false;
            os << id;
            for (const auto& [k, v] : pm) os << " " << k << "=" << v;
            os << " failed; ";
        }
    }
    detail = os.str();
    return all;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    // 1. Closed-form Gaussian STFT, max grid deviation < 1e-6 at N=128, L=12.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_gaussian_stft", {}}}, detail);
        report(1, "closed-form Gaussian STFT reproduced to 1e-6", pass, t.elapsed_ms(), 1000,
               detail);
    }

    // 2. Covariance identities pointwise to 1e-10, negative control fails.
    {
        CriterionTimer t;
        std::string detail;
        bool pass = run_set({{"check_covariance", {}}}, detail);
        // the broken variant must fail
        const ExperimentDef* def = find_experiment("check_covariance");
        ExperimentReport broken =
            run_experiment(*def, default_context(), {{"negative_control", "true"}});
        if (broken.pass) {
            pass = false;
            detail += "negative-control run unexpectedly passed; ";
        }
        report(2, "shift/modulation covariance identities to 1e-10", pass, t.elapsed_ms(), 5000,
               detail);
    }

    // 3. Magic-formula magnitudes to 1e-4 relative at lattice points.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_wigner_stft_identity", {}}}, detail);
        report(3, "Wigner-STFT magnitude identity to 1e-4", pass, t.elapsed_ms(), 30000, detail);
    }

    // 4. Weyl/localization link: < 1e-2 at N=128 and strictly decreasing.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_weyl_localization_link", {}}}, detail);
        report(4, "localization equals Weyl of the convolved symbol", pass, t.elapsed_ms(),
               120000, detail);
    }

    // 5. Rescaled-Gaussian exponents for four (r, s) tuples.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_gaussian_scaling", {{"r", "1"}, {"s", "1"}}},
                                   {"check_gaussian_scaling", {{"r", "2"}, {"s", "2"}}},
                                   {"check_gaussian_scaling", {{"r", "2"}, {"s", "inf"}}},
                                   {"check_gaussian_scaling", {{"r", "0.5"}, {"s", "0.5"}}}},
                                  detail);
        report(5, "dilated-Gaussian norm exponents within 7%", pass, t.elapsed_ms(), 60000,
               detail);
    }

    // 6. Schatten sufficiency: spread < 50 and < 20% drift for p x s grid.
    {
        CriterionTimer t;
        std::string detail;
        std::vector<std::pair<std::string, ParamMap>> items;
        for (const char* p : {"0.5", "1", "2", "4", "inf"}) {
            for (const char* s : {"0", "2"}) {
                items.push_back({"check_schatten_sufficiency", {{"p", p}, {"s", s}}});
            }
        }
        const bool pass = run_set(items, detail);
        report(6, "Schatten sufficiency ratios bounded and grid-stable", pass, t.elapsed_ms(),
               300000, detail);
    }

    // 7. Counterexample: divergence oracle within 5%, p=2 equality to 1e-10.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_counterexample", {{"p", "0.5"}}},
                                   {"check_counterexample", {{"p", "1"}}},
                                   {"check_counterexample", {{"p", "1.5"}}}},
                                  detail);
        report(7, "rank-one basis-sum divergence below p=2", pass, t.elapsed_ms(), 60000, detail);
    }

    // 8. Frame machinery: sandwich, member bound, diagonal bounds for p in {1,2,4}.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_frame_bessel", {{"p", "1"}}},
                                   {"check_frame_bessel", {{"p", "2"}}},
                                   {"check_frame_bessel", {{"p", "4"}}}},
                                  detail);
        report(8, "frame inequality and diagonal Schatten bounds", pass, t.elapsed_ms(), 120000,
               detail);
    }

    // 9. Coefficient-level inclusions: hard inequality at roundoff.
    {
        CriterionTimer t;
        std::string detail;
        const bool pass = run_set({{"check_inclusions_and_embedding", {}}}, detail);
        report(9, "mixed-norm inclusion monotonicity at 1e-12", pass, t.elapsed_ms(), 5000,
               detail);
    }

    // 10. Determinism: two identical seeded runs give byte-identical reports
    //     (wall-clock runtime_ms masked; it is the only nondeterministic field).
    {
        CriterionTimer t;
        bool pass = true;
        std::string detail;
        RunConfig cfg;
        cfg.seed = 2718;
        cfg.jobs = 4;
        const auto base = std::filesystem::temp_directory_path();
        const auto d1 = base / "tfa_acc_det1", d2 = base / "tfa_acc_det2";
        std::filesystem::remove_all(d1);
        std::filesystem::remove_all(d2);
        cfg.out_dir = d1.string();
        const int rc1 = run(cfg).exit_code;
        cfg.out_dir = d2.string();
        const int rc2 = run(cfg).exit_code;
        if (rc1 != 0 || rc2 != 0) {
            pass = false;
            detail = "suite run failed";
        }
        const std::regex mask("\"runtime_ms\": [0-9]+");
        for (const auto& def : experiment_registry()) {
            const std::string a = slurp(d1 / (def.id + ".json"));
            const std::string b = slurp(d2 / (def.id + ".json"));
            if (a.empty() || std::regex_replace(a, mask, "") != std::regex_replace(b, mask, "")) {
                pass = false;
                detail += def.id + " differs; ";
            }
        }
        report(10, "seeded runs byte-identical (runtime field masked)", pass, t.elapsed_ms(),
               600000, detail);
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
