#include "tfa/stft.hpp"

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
}  // namespace

SampledSignal tf_shift(const SampledSignal& f, int k, int n) {
    const int N = f.grid.num_points;
    Eigen::VectorXcd out(N);
    for (int j = 0; j < N; ++j) {
        // phase 2pi (n/L) t_j = 2pi n (j - N/2) / N
        const double phase = 2.0 * kPi * n * (j - N / 2) / N;
        out[j] = std::polar(1.0, phase) * f.samples[wrap(j - k, N)];
    }
    return {f.grid, std::move(out)};
}

StftMatrix stft(const SampledSignal& f, const SampledSignal& g) {
    require_same_grid(f.grid, g.grid, "stft");
    if (g.samples.isZero(0.0)) throw std::invalid_argument("stft: window is identically zero");

    const int N = f.grid.num_points;
    const double dx = f.grid.spacing;
    // The centered plane wave splits as e^{-2pi i (n-N/2)(j-N/2)/N}
    // = (-1)^n (-1)^j e^{-2pi i nj/N} since N is a multiple of 4.
    Eigen::MatrixXcd V(N, N);
    std::vector<cplx> work(N);
    for (int m = 0; m < N; ++m) {
        const int shift = m - N / 2;  // row m holds translation by time_node(m)
        for (int j = 0; j < N; ++j) {
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            work[j] = sgn * f.samples[j] * std::conj(g.samples[wrap(j - shift, N)]);
        }
        fft_forward(work.data(), N);
        for (int n = 0; n < N; ++n) {
            const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
            V(m, n) = dx * sgn * work[n];
        }
    }
    return {f.grid, std::move(V)};
}

}  // namespace tfa
