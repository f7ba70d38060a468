#pragma once

#include <Eigen/Dense>
#include <utility>

#include "tfa/grid.hpp"
#include "tfa/signal.hpp"
#include "tfa/symbol.hpp"

namespace tfa {

/// Discrete cross-Wigner values(m, n) ~ W(f1, f2)(time_node(m), halffreq_node(n)).
/// The frequency axis runs on the half-step grid with spacing 1/(2L).
struct WignerMatrix {
    GridSpec grid;
    Eigen::MatrixXcd values;
};

/// W(f1,f2)(x,w) = int f1(x + t/2) conj(f2(x - t/2)) e^{-2pi i w t} dt
/// discretized with the substitution t = 2 k dx, one FFT per row.
WignerMatrix cross_wigner(const SampledSignal& f1, const SampledSignal& f2);

/// (z1, z2) -> (z2, -z1).
std::pair<double, double> rotate_zeta(const std::pair<double, double>& zeta);

/// Moves a Wigner output onto the standard symbol grid: even half-step
/// frequency nodes are kept (they sit on the 1/L grid), the uncovered outer
/// band is zero-filled. Rejects inputs whose energy near the half-band edge
/// exceeds 1e-8 of the total.
SymbolField resample_to_symbol_grid(const WignerMatrix& w);

/// dx/(2L)-weighted sum of all Wigner entries, the discrete phase-space integral.
cplx wigner_integral(const WignerMatrix& w);

}  // namespace tfa
