#include "tfa/wigner.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "tfa/fft.hpp"

namespace tfa {

namespace {
inline int wrap(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}
}  // namespace

WignerMatrix cross_wigner(const SampledSignal& f1, const SampledSignal& f2) {
    require_same_grid(f1.grid, f2.grid, "cross_wigner");
    const int N = f1.grid.num_points;
    const double dx = f1.grid.spacing;

    // values(m, n) = 2 dx sum_k f1[(m+k) % N] conj(f2[(m-k) % N]) e^{-2pi i k (n - N/2)/N};
    // the phase splits as (-1)^k e^{-2pi i k n / N}. The lag sum is restricted
    // to |t| = |2 k dx| <= L/2: longer chords on the periodic axis reproduce
    // the signal around the antipodal point and would plant a full-amplitude
    // ghost at (x +- L/2, band edge). The window is symmetric, so W(f, f)
    // stays real and the k = 0 term (marginals, integral) is untouched.
    Eigen::MatrixXcd W(N, N);
    std::vector<cplx> work(N);
    for (int m = 0; m < N; ++m) {
        for (int k = 0; k < N; ++k) {
            const int lag = k < N / 2 ? k : k - N;  // centered in [-N/2, N/2)
            if (std::abs(lag) > N / 4) {
                work[k] = cplx(0.0, 0.0);
                continue;
            }
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            work[k] = sgn * f1.samples[wrap(m + k, N)] * std::conj(f2.samples[wrap(m - k, N)]);
        }
        fft_forward(work.data(), N);
        for (int n = 0; n < N; ++n) W(m, n) = 2.0 * dx * work[n];
    }
    return {f1.grid, std::move(W)};
}

std::pair<double, double> rotate_zeta(const std::pair<double, double>& zeta) {
    return {zeta.second, -zeta.first};
}

SymbolField resample_to_symbol_grid(const WignerMatrix& w) {
    const int N = w.grid.num_points;
    const double total = w.values.squaredNorm();
    if (total > 0.0) {
        // Outer eighth of the half-step band on each side.
        double edge = 0.0;
        const int cut = (7 * N) / 16;
        for (int n = 0; n < N; ++n) {
            if (std::abs(n - N / 2) >= cut) edge += w.values.col(n).squaredNorm();
        }
        if (edge > 1e-8 * total) {
            throw std::runtime_error(
                "resample_to_symbol_grid: frequency content too close to the half-band edge "
                "(relative edge energy " +
                std::to_string(edge / total) + ")");
        }
    }

    // halffreq_node(2q - N/2) = (q - N/2)/L = freq_node(q) for q in [N/4, 3N/4).
    SymbolField out = zero_symbol(w.grid);
    for (int q = N / 4; q < 3 * N / 4; ++q) {
        out.values.col(q) = w.values.col(2 * q - N / 2);
    }
    return out;
}

cplx wigner_integral(const WignerMatrix& w) {
    const double cell = w.grid.spacing / (2.0 * w.grid.period);
    return cell * w.values.sum();
}

}  // namespace tfa
