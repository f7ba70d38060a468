#include "tfa/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfa {

namespace {
constexpr double kPi = std::numbers::pi;
}

double Rng::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(engine_);
}

double Rng::normal() {
    std::normal_distribution<double> d(0.0, 1.0);
    return d(engine_);
}

int Rng::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(engine_);
}

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (char c : tag) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    return h;
}

SampledSignal random_signal(const GridSpec& grid, Rng& rng) {
    Eigen::VectorXcd s(grid.num_points);
    for (int j = 0; j < grid.num_points; ++j) s[j] = rng.complex_normal();
    return {grid, std::move(s)};
}

SampledSignal random_schwartz_signal(const GridSpec& grid, Rng& rng, int modes) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(grid.num_points);
    for (int n = 0; n < modes; ++n) {
        acc += rng.complex_normal() * hermite_function(grid, n).samples;
    }
    SampledSignal f{grid, std::move(acc)};
    const double nrm = l2_norm(f);
    if (nrm > 0.0) f.samples /= nrm;
    return f;
}

SymbolField random_bandlimited_symbol(const GridSpec& grid, Rng& rng, const SymbolBand& band) {
    const int N = grid.num_points;
    struct Mode {
        double xi, tau;
        cplx amp;
    };
    std::vector<Mode> modes(band.modes);
    for (auto& mo : modes) {
        mo.xi = rng.uniform(-band.freq_x, band.freq_x);
        mo.tau = rng.uniform(-band.freq_w, band.freq_w);
        const double weight = std::exp(-0.5 * ((mo.xi * mo.xi) / (band.freq_x * band.freq_x) +
                                               (mo.tau * mo.tau) / (band.freq_w * band.freq_w)));
        mo.amp = weight * rng.complex_normal();
    }
    Eigen::MatrixXcd v(N, N);
    for (int m = 0; m < N; ++m) {
        const double x = grid.time_node(m);
        for (int n = 0; n < N; ++n) {
            const double w = grid.freq_node(n);
            cplx acc(0.0, 0.0);
            for (const auto& mo : modes) {
                acc += mo.amp * std::polar(1.0, 2.0 * kPi * (mo.xi * x + mo.tau * w));
            }
            const double env = std::exp(-kPi * ((x * x) / (band.env_x * band.env_x) +
                                                (w * w) / (band.env_w * band.env_w)));
            v(m, n) = env * acc;
        }
    }
    return {grid, std::move(v)};
}

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const cplx d = R(k, k);
        const double ad = std::abs(d);
        if (ad > 0.0) Q.col(k) *= d / ad;
    }
    return Q;
}

OperatorMatrix random_operator_with_spectrum(const GridSpec& grid, const Eigen::VectorXd& spectrum,
                                             Rng& rng) {
    const int N = grid.num_points;
    if (spectrum.size() != N) throw std::invalid_argument("random_operator_with_spectrum: size mismatch");
    const Eigen::MatrixXcd U = random_unitary(N, rng);
    const Eigen::MatrixXcd V = random_unitary(N, rng);
    Eigen::MatrixXcd M = U * spectrum.asDiagonal() * V.adjoint() / grid.spacing;
    return {grid, std::move(M)};
}

Eigen::MatrixXcd hermite_onb(const GridSpec& grid, int count) {
    const int N = grid.num_points;
    if (count > N) throw std::invalid_argument("hermite_onb: more vectors than dimensions");
    Eigen::MatrixXcd Q(N, count);
    for (int n = 0; n < count; ++n) Q.col(n) = hermite_function_unchecked(grid, n).samples;

    const double dx = grid.spacing;
    for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < count; ++k) {
            for (int j = 0; j < k; ++j) {
                const cplx proj = dx * Q.col(j).dot(Q.col(k));
                Q.col(k) -= proj * Q.col(j);
            }
            const double nrm = std::sqrt(dx * Q.col(k).squaredNorm());
            if (!(nrm > 1e-300)) throw std::runtime_error("hermite_onb: vectors degenerate");
            Q.col(k) /= nrm;
        }
    }
    return Q;
}

}  // namespace tfa
