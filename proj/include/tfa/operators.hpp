#pragma once

#include <Eigen/Dense>

#include "tfa/signal.hpp"
#include "tfa/symbol.hpp"

namespace tfa {

/// Dense operator on the sampled-signal space with the dx-weighted action
/// (Tf)[i] = sum_j M(i,j) f[j] dx, matching l2_inner.
struct OperatorMatrix {
    GridSpec grid;
    Eigen::MatrixXcd m;
};

OperatorMatrix zero_operator(const GridSpec& grid);

SampledSignal apply(const OperatorMatrix& T, const SampledSignal& f);
OperatorMatrix compose(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix adjoint(const OperatorMatrix& T);
OperatorMatrix operator-(const OperatorMatrix& A, const OperatorMatrix& B);

/// Localization operator: analysis with phi1, multiplication by the symbol
/// over the full phase-space grid, synthesis with phi2.
OperatorMatrix localization_matrix(const SymbolField& a, const SampledSignal& phi1,
                                   const SampledSignal& phi2);

/// Weyl quantization through the kernel
///   K(x, y) = int sigma((x+y)/2, w) e^{2pi i (x-y) w} dw,
/// with the symbol interpolated onto midpoint (half-step) positions and
/// midpoints resolved along the short arc of the periodic axis.
OperatorMatrix weyl_matrix(const SymbolField& sigma);

/// Tf = <f, h> h.
OperatorMatrix rank_one(const SampledSignal& h);

/// <T f, g> for the dx-weighted model.
cplx operator_bilinear(const OperatorMatrix& T, const SampledSignal& f, const SampledSignal& g);

/// Phase-space pairing <sigma, W(g, f)> evaluated on the midpoint-refined
/// Wigner transform; weyl_matrix satisfies
/// <L_sigma f, g> = weyl_weak_pairing(sigma, g, f) identically.
cplx weyl_weak_pairing(const SymbolField& sigma, const SampledSignal& g, const SampledSignal& f);

/// Trigonometric x-axis upsample by two: row r holds the value at
/// x = (r - N) dx / 2; even rows reproduce the input exactly.
Eigen::MatrixXcd upsample_position_axis(const SymbolField& sigma);

}  // namespace tfa
