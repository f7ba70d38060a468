#include "tfa/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tfa {

namespace {
constexpr double kPi = std::numbers::pi;
}

SampledSignal zero_signal(const GridSpec& grid) {
    return {grid, Eigen::VectorXcd::Zero(grid.num_points)};
}

SampledSignal gaussian_window(const GridSpec& grid) {
    const double amp = std::pow(2.0, 0.25);
    Eigen::VectorXcd s(grid.num_points);
    for (int j = 0; j < grid.num_points; ++j) {
        const double t = grid.time_node(j);
        s[j] = amp * std::exp(-kPi * t * t);
    }
    return {grid, std::move(s)};
}

SampledSignal dilated_gaussian(const GridSpec& grid, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilated_gaussian: lambda must be positive");
    const double half = grid.period / 2.0;
    const double boundary = std::exp(-kPi * lambda * half * half);
    if (boundary > 1e-12) {
        throw std::invalid_argument(
            "dilated_gaussian: insufficient decay inside the grid window (boundary value " +
            std::to_string(boundary) + ")");
    }
    Eigen::VectorXcd s(grid.num_points);
    for (int j = 0; j < grid.num_points; ++j) {
        const double t = grid.time_node(j);
        s[j] = std::exp(-kPi * lambda * t * t);
    }
    return {grid, std::move(s)};
}

SampledSignal hermite_function_unchecked(const GridSpec& grid, int n) {
    if (n < 0) throw std::invalid_argument("hermite_function: order must be nonnegative");
    const int N = grid.num_points;

    // h_{k+1}(x) = 2 sqrt(pi/(k+1)) x h_k(x) - sqrt(k/(k+1)) h_{k-1}(x),
    // h_0 = 2^{1/4} exp(-pi x^2). Renormalize on the grid each step to keep
    // the recurrence stable at high order.
    Eigen::VectorXd x(N);
    for (int j = 0; j < N; ++j) x[j] = grid.time_node(j);

    Eigen::VectorXd prev = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd cur(N);
    const double amp = std::pow(2.0, 0.25);
    for (int j = 0; j < N; ++j) cur[j] = amp * std::exp(-kPi * x[j] * x[j]);

    auto grid_norm = [&](const Eigen::VectorXd& v) { return std::sqrt(grid.spacing * v.squaredNorm()); };
    double c = grid_norm(cur);
    if (c > 0.0) cur /= c;

    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd next =
            2.0 * std::sqrt(kPi / (k + 1)) * x.cwiseProduct(cur) - std::sqrt(double(k) / (k + 1)) * prev;
        const double nn = grid_norm(next);
        if (!(nn > 0.0)) throw std::runtime_error("hermite_function: recurrence collapsed");
        next /= nn;
        prev = cur;
        cur = next;
    }
    return {grid, cur.cast<cplx>()};
}

SampledSignal hermite_function(const GridSpec& grid, int n) {
    if (n > grid.num_points / 4) {
        throw std::invalid_argument("hermite_function: order " + std::to_string(n) +
                                    " exceeds resolution guard N/4");
    }
    return hermite_function_unchecked(grid, n);
}

cplx l2_inner(const SampledSignal& f, const SampledSignal& g) {
    require_same_grid(f.grid, g.grid, "l2_inner");
    return f.grid.spacing * g.samples.dot(f.samples);  // Eigen dot conjugates its callee
}

double l2_norm(const SampledSignal& f) {
    return std::sqrt(f.grid.spacing * f.samples.squaredNorm());
}

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
    require_same_grid(a.grid, b.grid, "signal sum");
    return {a.grid, a.samples + b.samples};
}

SampledSignal operator*(cplx scale, const SampledSignal& f) {
    return {f.grid, scale * f.samples};
}

}  // namespace tfa
