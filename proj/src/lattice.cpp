#include "tfa/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfa {

Lattice make_lattice(const GridSpec& grid, int a_step, int b_step) {
    const int N = grid.num_points;
    if (a_step <= 0 || b_step <= 0) throw std::invalid_argument("make_lattice: steps must be positive");
    if (N % a_step != 0 || N % b_step != 0) {
        throw std::invalid_argument("make_lattice: steps must divide the grid size " + std::to_string(N));
    }
    if (a_step * b_step > N) {
        throw std::invalid_argument("make_lattice: a*b exceeds N (density below critical)");
    }
    return {a_step, b_step};
}

Lattice default_lattice(const GridSpec& grid) {
    const int N = grid.num_points;
    const int target_ab = N / 4;  // redundancy 4

    // Pick divisors a, b of N with a*b = N/4 whose physical steps stay closest
    // to alpha ~ 0.375, beta ~ 2/3 (the N = 128, L = 12 reference lattice).
    const double alpha_ref = 0.375;
    std::vector<int> divisors;
    for (int d = 1; d <= N; ++d)
        if (N % d == 0) divisors.push_back(d);

    int best_a = 0, best_b = 0;
    double best_score = 1e300;
    for (int a : divisors) {
        if (target_ab % a != 0) continue;
        const int b = target_ab / a;
        if (N % b != 0) continue;
        const double score = std::abs(a * grid.spacing - alpha_ref);
        if (score < best_score) {
            best_score = score;
            best_a = a;
            best_b = b;
        }
    }
    if (best_a == 0) throw std::runtime_error("default_lattice: no divisor pair at redundancy 4");
    return {best_a, best_b};
}

}  // namespace tfa
