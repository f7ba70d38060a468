#include "tfa/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tfa/fft.hpp"

namespace tfa {

namespace {
constexpr double kPi = std::numbers::pi;

inline int wrap(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}

// Centered lag in [-N/2, N/2).
inline int centered_lag(int d, int n) {
    if (d >= n / 2) return d - n;
    if (d < -n / 2) return d + n;
    return d;
}
}  // namespace

OperatorMatrix zero_operator(const GridSpec& grid) {
    return {grid, Eigen::MatrixXcd::Zero(grid.num_points, grid.num_points)};
}

SampledSignal apply(const OperatorMatrix& T, const SampledSignal& f) {
    require_same_grid(T.grid, f.grid, "operator apply");
    return {T.grid, T.grid.spacing * (T.m * f.samples)};
}

OperatorMatrix compose(const OperatorMatrix& A, const OperatorMatrix& B) {
    require_same_grid(A.grid, B.grid, "operator compose");
    return {A.grid, A.grid.spacing * (A.m * B.m)};
}

OperatorMatrix adjoint(const OperatorMatrix& T) { return {T.grid, T.m.adjoint()}; }

OperatorMatrix operator-(const OperatorMatrix& A, const OperatorMatrix& B) {
    require_same_grid(A.grid, B.grid, "operator difference");
    return {A.grid, A.m - B.m};
}

OperatorMatrix localization_matrix(const SymbolField& a, const SampledSignal& phi1,
                                   const SampledSignal& phi2) {
    require_same_grid(a.grid, phi1.grid, "localization_matrix");
    require_same_grid(a.grid, phi2.grid, "localization_matrix");
    if (phi1.samples.isZero(0.0) || phi2.samples.isZero(0.0)) {
        throw std::invalid_argument("localization_matrix: zero window");
    }
    const int N = a.grid.num_points;

    // M(i,j) = sum_m phi2[(i-m+N/2)%N] conj(phi1[(j-m+N/2)%N]) G(m, (i-j)%N)
    // with G(m, l) = (1/N) sum_n a(m,n) e^{2pi i (n-N/2) l / N}: the n-sum of
    // the synthesis/analysis plane waves collapses to a lag transform per row.
    Eigen::MatrixXcd G(N, N);
    std::vector<cplx> work(N);
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) work[n] = a.values(m, n);
        fft_inverse(work.data(), N);
        for (int l = 0; l < N; ++l) {
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            G(m, l) = sgn / double(N) * work[l];
        }
    }

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
    std::vector<cplx> p2(N), p1c(N);
    for (int m = 0; m < N; ++m) {
        for (int i = 0; i < N; ++i) p2[i] = phi2.samples[wrap(i - m + N / 2, N)];
        for (int j = 0; j < N; ++j) p1c[j] = std::conj(phi1.samples[wrap(j - m + N / 2, N)]);
        for (int i = 0; i < N; ++i) {
            const cplx w2 = p2[i];
            if (w2 == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < N; ++j) {
                M(i, j) += w2 * p1c[j] * G(m, wrap(i - j, N));
            }
        }
    }
    return {a.grid, std::move(M)};
}

Eigen::MatrixXcd upsample_position_axis(const SymbolField& sigma) {
    const int N = sigma.grid.num_points;
    Eigen::MatrixXcd up(2 * N, N);
    std::vector<cplx> hat(N), big(2 * N);
    for (int n = 0; n < N; ++n) {
        for (int m = 0; m < N; ++m) hat[m] = sigma.values(m, n);
        fft_forward(hat.data(), N);
        std::fill(big.begin(), big.end(), cplx(0.0, 0.0));
        for (int k = 0; k < N / 2; ++k) big[k] = hat[k];
        for (int k = N / 2 + 1; k < N; ++k) big[k + N] = hat[k];
        big[N / 2] = 0.5 * hat[N / 2];  // split Nyquist keeps real inputs real
        big[2 * N - N / 2] = 0.5 * hat[N / 2];
        fft_inverse(big.data(), 2 * N);
        for (int r = 0; r < 2 * N; ++r) up(r, n) = big[r] / double(N);
    }
    return up;
}

namespace {

// rho(r, l) = sum_n sigma_up(r, n) e^{2pi i (n - N/2) l / N}; N-periodic in l.
Eigen::MatrixXcd lag_transform(const Eigen::MatrixXcd& up, int N) {
    Eigen::MatrixXcd rho(2 * N, N);
    std::vector<cplx> work(N);
    for (int r = 0; r < 2 * N; ++r) {
        for (int n = 0; n < N; ++n) work[n] = up(r, n);
        fft_inverse(work.data(), N);
        for (int l = 0; l < N; ++l) {
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            rho(r, l) = sgn * work[l];
        }
    }
    return rho;
}

}  // namespace

OperatorMatrix weyl_matrix(const SymbolField& sigma) {
    const int N = sigma.grid.num_points;
    const double L = sigma.grid.period;

    const Eigen::MatrixXcd up = upsample_position_axis(sigma);
    const Eigen::MatrixXcd rho = lag_transform(up, N);

    Eigen::MatrixXcd M(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const int lag = centered_lag(i - j, N);
            const int r = wrap(2 * i - lag, 2 * N);
            M(i, j) = rho(r, wrap(i - j, N)) / L;
        }
    }
    return {sigma.grid, std::move(M)};
}

OperatorMatrix rank_one(const SampledSignal& h) {
    if (h.samples.isZero(0.0)) throw std::invalid_argument("rank_one: zero vector");
    return {h.grid, Eigen::MatrixXcd(h.samples * h.samples.adjoint())};
}

cplx operator_bilinear(const OperatorMatrix& T, const SampledSignal& f, const SampledSignal& g) {
    return l2_inner(apply(T, f), g);
}

cplx weyl_weak_pairing(const SymbolField& sigma, const SampledSignal& g, const SampledSignal& f) {
    require_same_grid(sigma.grid, f.grid, "weyl_weak_pairing");
    const int N = sigma.grid.num_points;
    const double dx = sigma.grid.spacing;
    const double L = sigma.grid.period;
    const Eigen::MatrixXcd up = upsample_position_axis(sigma);

    // (dx/L) sum_{r,n} sigma_up(r,n) conj(w(r,n)) with
    // w(r, n) = dx * sum over pairs (i,j) assigned to midpoint r of
    //           g[i] conj(f[j]) e^{-2pi i (n-N/2)(i-j)/N}.
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(2 * N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const int lag = centered_lag(i - j, N);
            const int r = wrap(2 * i - lag, 2 * N);
            const cplx prod = dx * g.samples[i] * std::conj(f.samples[j]);
            for (int n = 0; n < N; ++n) {
                const double phase = -2.0 * kPi * double(n - N / 2) * (i - j) / N;
                w(r, n) += prod * std::polar(1.0, phase);
            }
        }
    }
    cplx acc(0.0, 0.0);
    for (int r = 0; r < 2 * N; ++r)
        for (int n = 0; n < N; ++n) acc += up(r, n) * std::conj(w(r, n));
    return dx / L * acc;
}

}  // namespace tfa
