#include "tfa/gabor.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <vector>

#include "tfa/fft.hpp"

namespace tfa {

namespace {
inline int wrap(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
}
}  // namespace

GaborSystem make_gabor_system(const SampledSignal& window, const Lattice& lattice) {
    if (window.samples.isZero(0.0)) throw std::invalid_argument("make_gabor_system: zero window");
    if (window.grid.num_points % lattice.a_step != 0 || window.grid.num_points % lattice.b_step != 0) {
        throw std::invalid_argument("make_gabor_system: lattice does not divide the grid");
    }
    return {window, lattice, std::nullopt};
}

CoefficientArray gabor_coefficients(const SampledSignal& f, const GaborSystem& sys) {
    require_same_grid(f.grid, sys.window.grid, "gabor_coefficients");
    const GridSpec& g = f.grid;
    const int N = g.num_points;
    const int a = sys.lattice.a_step, b = sys.lattice.b_step;
    const int K = N / a, Nn = N / b;

    // c[k][n] equals the STFT matrix at row (a k + N/2) % N, column (b n + N/2) % N;
    // reuse the per-row FFT pipeline instead of lattice-many inner products.
    StftMatrix V = stft(f, sys.window);
    CoefficientArray c =
        CoefficientArray::make2(K, Nn, sys.lattice.alpha(g), sys.lattice.beta(g));
    for (int k = 0; k < K; ++k) {
        const int row = wrap(a * k + N / 2, N);
        for (int n = 0; n < Nn; ++n) {
            c.at2(k, n) = V.values(row, wrap(b * n + N / 2, N));
        }
    }
    return c;
}

FrameBounds frame_bounds(const GaborSystem& sys) {
    const GridSpec& g = sys.window.grid;
    const int N = g.num_points;
    const int a = sys.lattice.a_step, b = sys.lattice.b_step;

    // Frame operator in the dx-weighted model: eigenvalues of dx * S where
    // S[i][j] = sum_l pi(l)g[i] conj(pi(l)g[j]).
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
    for (int k = 0; k < N / a; ++k) {
        for (int n = 0; n < N / b; ++n) {
            SampledSignal atom = tf_shift(sys.window, a * k, b * n);
            S.noalias() += atom.samples * atom.samples.adjoint();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.spacing * S,
                                                        Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw std::runtime_error("frame_bounds: eigensolver failed");
    FrameBounds fb;
    fb.lower = eig.eigenvalues().minCoeff();
    fb.upper = eig.eigenvalues().maxCoeff();
    sys.bounds = fb;
    return fb;
}

GaborSystem2D make_gabor_system_2d(const SymbolField& window, const Lattice& lattice) {
    if (window.values.isZero(0.0)) throw std::invalid_argument("make_gabor_system_2d: zero window");
    if (window.grid.num_points % lattice.a_step != 0 ||
        window.grid.num_points % lattice.b_step != 0) {
        throw std::invalid_argument("make_gabor_system_2d: lattice does not divide the grid");
    }
    return {window, lattice};
}

CoefficientArray gabor_coefficients_2d(const SymbolField& F, const GaborSystem2D& sys) {
    require_same_grid(F.grid, sys.window.grid, "gabor_coefficients_2d");
    const GridSpec& g = F.grid;
    const int N = g.num_points;
    const int a = sys.lattice.a_step, b = sys.lattice.b_step;

    // The w axis carries the swapped steps (b nodes per translation, a bins
    // per modulation): node spacing there is 1/L, so this keeps both physical
    // steps fixed under grid refinement, a dx and b/L on each axis.
    const int K1 = N / a, K2 = N / b, N1 = N / b, N2 = N / a;
    CoefficientArray c = CoefficientArray::make4(
        {K1, K2, N1, N2},
        {sys.lattice.alpha(g), b * g.freq_spacing(), sys.lattice.beta(g), a * g.spacing});

    const double cell = g.spacing * g.freq_spacing();
    Eigen::MatrixXcd H(N, N);
    for (int k1 = 0; k1 < K1; ++k1) {
        for (int k2 = 0; k2 < K2; ++k2) {
            const int mz = a * k1, nz = b * k2;
            for (int m = 0; m < N; ++m)
                for (int n = 0; n < N; ++n)
                    H(m, n) =
                        F.values(m, n) * std::conj(sys.window.values(wrap(m - mz, N), wrap(n - nz, N)));
            // Forward 2-D FFT; bin (b n1, a n2) carries the plane wave referenced
            // to uncentered indices, corrected by the (-1)^{b n1 + a n2} factor.
            fft2_forward(H);
            for (int n1 = 0; n1 < N1; ++n1) {
                for (int n2 = 0; n2 < N2; ++n2) {
                    const double sgn = ((b * n1 + a * n2) % 2 == 0) ? 1.0 : -1.0;
                    c.at4(k1, k2, n1, n2) = cell * sgn * H(wrap(b * n1, N), wrap(a * n2, N));
                }
            }
        }
    }
    return c;
}

}  // namespace tfa
