#include "tfa/symbol.hpp"

#include <cmath>
#include <numbers>

namespace tfa {

namespace {
constexpr double kPi = std::numbers::pi;
}

SymbolField zero_symbol(const GridSpec& grid) {
    return {grid, Eigen::MatrixXcd::Zero(grid.num_points, grid.num_points)};
}

SymbolField constant_symbol(const GridSpec& grid, cplx value) {
    return {grid, Eigen::MatrixXcd::Constant(grid.num_points, grid.num_points, value)};
}

SymbolField gaussian_symbol_window(const GridSpec& grid) {
    const int N = grid.num_points;
    Eigen::MatrixXcd v(N, N);
    for (int m = 0; m < N; ++m) {
        const double x = grid.time_node(m);
        for (int n = 0; n < N; ++n) {
            const double w = grid.freq_node(n);
            v(m, n) = 0.5 * std::exp(-kPi * (x * x + w * w));
        }
    }
    return {grid, std::move(v)};
}

cplx symbol_inner(const SymbolField& a, const SymbolField& b) {
    require_same_grid(a.grid, b.grid, "symbol_inner");
    const double cell = a.grid.spacing * a.grid.freq_spacing();
    return cell * (b.values.conjugate().cwiseProduct(a.values)).sum();
}

double symbol_l2_norm(const SymbolField& a) {
    const double cell = a.grid.spacing * a.grid.freq_spacing();
    return std::sqrt(cell * a.values.squaredNorm());
}

}  // namespace tfa
