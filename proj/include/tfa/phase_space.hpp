#pragma once

#include <utility>

#include "tfa/symbol.hpp"

namespace tfa {

/// Single-point 2-D STFT of a phase-space function F with window G:
/// z = (mz, nz) are node-shift counts on the (x, w) axes, zeta = (f1, f2)
/// integer frequency multiples of (1/L, dx) on the dual axes.
cplx stft2d_at(const SymbolField& F, const SymbolField& G, std::pair<int, int> z,
               std::pair<int, int> zeta);

/// Periodic phase-space convolution with dx*dw cell weights; node-centered,
/// so a unit impulse of mass one at the origin node is the identity.
SymbolField symbol_convolve(const SymbolField& a, const SymbolField& b);

/// T_{(k dx, n/L)} F: translate a phase-space function by node counts.
SymbolField ps_translate(const SymbolField& F, int k, int n);

/// M_{(n1/L, k2 dx)} F: multiply by the plane wave e^{2pi i (zeta1 x + zeta2 w)}.
SymbolField ps_modulate(const SymbolField& F, int n1, int k2);

}  // namespace tfa
