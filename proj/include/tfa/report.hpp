#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tfa {

/// How a measured value is judged against its target.
enum class ToleranceKind {
    abs_err,      // |measured - target| <= tol
    rel_err,      // |measured - target| <= tol * |target|
    upper,        // measured <= target + tol
    lower,        // measured >= target - tol
    report_only,  // informational, never fails
};

std::string to_string(ToleranceKind k);

struct Measured {
    std::string label;
    double value = 0.0;
};

struct Target {
    std::string label;  // must match a measured label
    double value = 0.0;
    double tolerance = 0.0;
    ToleranceKind kind = ToleranceKind::abs_err;
};

/// Structured record of one verification experiment.
struct ExperimentReport {
    std::string experiment_id;
    std::map<std::string, std::string> parameters;
    std::vector<Measured> measured;
    std::vector<Target> targets;
    bool pass = false;
    std::uint64_t seed = 0;
    std::int64_t runtime_ms = 0;
    std::string notes;

    void add_measure(const std::string& label, double value);
    void add_target(const std::string& label, double value, double tol, ToleranceKind kind);
    /// Re-derives `pass` from measured versus targets.
    bool evaluate();

    std::string to_json() const;
    /// One CSV row per measured/target pair (header provided separately).
    std::vector<std::string> to_csv_rows() const;
    static std::string csv_header();
};

/// min/max ratio over a family; embodies bounded-constant checks.
struct RatioStatistic {
    double min_ratio = 0.0;
    double max_ratio = 0.0;

    double spread() const { return min_ratio > 0.0 ? max_ratio / min_ratio : 0.0; }
    void absorb(double r);
    bool empty() const { return max_ratio == 0.0 && min_ratio == 0.0; }
};

}  // namespace tfa
