#include "tfa/phase_space.hpp"

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

cplx stft2d_at(const SymbolField& F, const SymbolField& G, std::pair<int, int> z,
               std::pair<int, int> zeta) {
    require_same_grid(F.grid, G.grid, "stft2d_at");
    if (G.values.isZero(0.0)) throw std::invalid_argument("stft2d_at: window is identically zero");
    const int N = F.grid.num_points;
    const auto [mz, nz] = z;
    const auto [fz1, fz2] = zeta;

    cplx acc(0.0, 0.0);
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) {
            const double phase =
                -2.0 * kPi * (double(fz1) * (m - N / 2) + double(fz2) * (n - N / 2)) / N;
            acc += F.values(m, n) * std::conj(G.values(wrap(m - mz, N), wrap(n - nz, N))) *
                   std::polar(1.0, phase);
        }
    }
    return F.grid.spacing * F.grid.freq_spacing() * acc;
}

SymbolField symbol_convolve(const SymbolField& a, const SymbolField& b) {
    require_same_grid(a.grid, b.grid, "symbol_convolve");
    const int N = a.grid.num_points;

    // Re-index b so that its origin node (N/2, N/2) becomes array offset zero;
    // the cyclic convolution then matches node-position semantics.
    Eigen::MatrixXcd bs(N, N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) bs(m, n) = b.values(wrap(m + N / 2, N), wrap(n + N / 2, N));

    Eigen::MatrixXcd fa = a.values;
    fft2_forward(fa);
    fft2_forward(bs);
    fa = fa.cwiseProduct(bs);
    fft2_inverse(fa);
    const double scale = a.grid.spacing * a.grid.freq_spacing() / (double(N) * double(N));
    return {a.grid, scale * fa};
}

SymbolField ps_translate(const SymbolField& F, int k, int n) {
    const int N = F.grid.num_points;
    Eigen::MatrixXcd out(N, N);
    for (int m = 0; m < N; ++m)
        for (int q = 0; q < N; ++q) out(m, q) = F.values(wrap(m - k, N), wrap(q - n, N));
    return {F.grid, std::move(out)};
}

SymbolField ps_modulate(const SymbolField& F, int n1, int k2) {
    const int N = F.grid.num_points;
    Eigen::MatrixXcd out(N, N);
    for (int m = 0; m < N; ++m) {
        for (int q = 0; q < N; ++q) {
            const double phase = 2.0 * kPi * (double(n1) * (m - N / 2) + double(k2) * (q - N / 2)) / N;
            out(m, q) = std::polar(1.0, phase) * F.values(m, q);
        }
    }
    return {F.grid, std::move(out)};
}

}  // namespace tfa
