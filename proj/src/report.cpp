#include "tfa/report.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace tfa {

std::string to_string(ToleranceKind k) {
    switch (k) {
        case ToleranceKind::abs_err: return "abs";
        case ToleranceKind::rel_err: return "rel";
        case ToleranceKind::upper: return "upper";
        case ToleranceKind::lower: return "lower";
        case ToleranceKind::report_only: return "report";
    }
    return "?";
}

void ExperimentReport::add_measure(const std::string& label, double value) {
    measured.push_back({label, value});
}

void ExperimentReport::add_target(const std::string& label, double value, double tol,
                                  ToleranceKind kind) {
    targets.push_back({label, value, tol, kind});
}

namespace {
bool satisfied(const Target& t, double measured_value) {
    switch (t.kind) {
        case ToleranceKind::abs_err:
            return std::abs(measured_value - t.value) <= t.tolerance;
        case ToleranceKind::rel_err:
            return std::abs(measured_value - t.value) <= t.tolerance * std::abs(t.value);
        case ToleranceKind::upper:
            return measured_value <= t.value + t.tolerance;
        case ToleranceKind::lower:
            return measured_value >= t.value - t.tolerance;
        case ToleranceKind::report_only:
            return true;
    }
    return false;
}
}  // namespace

bool ExperimentReport::evaluate() {
    pass = true;
    for (const Target& t : targets) {
        const Measured* m = nullptr;
        for (const Measured& mm : measured) {
            if (mm.label == t.label) {
                m = &mm;
                break;
            }
        }
        if (m == nullptr) {
            pass = false;
            continue;
        }
        if (!std::isfinite(m->value) && t.kind != ToleranceKind::report_only) {
            pass = false;
            continue;
        }
        if (!satisfied(t, m->value)) pass = false;
    }
    return pass;
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["experiment_id"] = experiment_id;
    j["parameters"] = parameters;  // std::map keeps key order stable
    auto& jm = j["measured"] = nlohmann::ordered_json::array();
    for (const auto& m : measured) {
        jm.push_back({{"label", m.label}, {"value", m.value}});
    }
    auto& jt = j["targets"] = nlohmann::ordered_json::array();
    for (const auto& t : targets) {
        jt.push_back({{"label", t.label},
                      {"value", t.value},
                      {"tolerance", t.tolerance},
                      {"kind", to_string(t.kind)}});
    }
    j["pass"] = pass;
    j["seed"] = seed;
    j["runtime_ms"] = runtime_ms;
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::csv_header() {
    return "experiment_id,label,measured,target,tolerance,kind,ok";
}

std::vector<std::string> ExperimentReport::to_csv_rows() const {
    std::vector<std::string> rows;
    for (const auto& m : measured) {
        const Target* t = nullptr;
        for (const auto& tt : targets) {
            if (tt.label == m.label) {
                t = &tt;
                break;
            }
        }
        std::ostringstream os;
        os.precision(17);
        os << experiment_id << ',' << m.label << ',' << m.value << ',';
        if (t != nullptr) {
            os << t->value << ',' << t->tolerance << ',' << to_string(t->kind) << ','
               << (satisfied(*t, m.value) ? 1 : 0);
        } else {
            os << ",,report,1";
        }
        rows.push_back(os.str());
    }
    return rows;
}

void RatioStatistic::absorb(double r) {
    if (!(r > 0.0)) return;
    if (empty()) {
        min_ratio = max_ratio = r;
    } else {
        if (r < min_ratio) min_ratio = r;
        if (r > max_ratio) max_ratio = r;
    }
}

}  // namespace tfa
