#pragma once

#include <optional>

#include "tfa/lattice.hpp"
#include "tfa/mixed_norm.hpp"
#include "tfa/signal.hpp"
#include "tfa/stft.hpp"
#include "tfa/symbol.hpp"

namespace tfa {

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
    /// Lower bound above the degeneracy threshold 1e-12.
    bool is_frame() const { return lower > 1e-12; }
};

/// Gabor system on the signal grid: window + lattice, frame bounds cached
/// once computed.
struct GaborSystem {
    SampledSignal window;
    Lattice lattice;
    mutable std::optional<FrameBounds> bounds;
};

GaborSystem make_gabor_system(const SampledSignal& window, const Lattice& lattice);

/// c[k][n] = < f, M_{b n / L} T_{a k dx} window >, k = 0..N/a-1, n = 0..N/b-1.
CoefficientArray gabor_coefficients(const SampledSignal& f, const GaborSystem& sys);

/// Extremal eigenvalues of the frame operator S = sum_l |pi(l) g><pi(l) g|.
FrameBounds frame_bounds(const GaborSystem& sys);

/// Gabor system on the symbol plane: per-axis natural steps, translations
/// (a dx, a/L), modulations (b/L, b dx), the tensor of two 1-D systems.
struct GaborSystem2D {
    SymbolField window;
    Lattice lattice;
};

GaborSystem2D make_gabor_system_2d(const SymbolField& window, const Lattice& lattice);

/// 4-D coefficients c[k1][k2][n1][n2] = stft2d_at(F, window, (a k1, a k2), (b n1, b n2)),
/// computed with one 2-D FFT per translation.
CoefficientArray gabor_coefficients_2d(const SymbolField& F, const GaborSystem2D& sys);

}  // namespace tfa
