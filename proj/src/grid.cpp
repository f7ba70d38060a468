#include "tfa/grid.hpp"

#include <stdexcept>
#include <string>

namespace tfa {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec make_grid(int num_points, double period) {
    if (!is_power_of_two(num_points) || num_points < 16) {
        throw std::invalid_argument("make_grid: num_points must be a power of two >= 16, got " +
                                    std::to_string(num_points));
    }
    if (!(period > 0.0)) {
        throw std::invalid_argument("make_grid: period must be positive");
    }
    GridSpec g;
    g.num_points = num_points;
    g.period = period;
    g.spacing = period / num_points;
    return g;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
    }
}

}  // namespace tfa
