#pragma once

#include "tfa/gabor.hpp"
#include "tfa/weights.hpp"

namespace tfa {

/// Discrete modulation-space quasi-norm of a signal: weighted mixed norm of
/// its Gabor coefficients over the system's lattice. Requires a frame
/// (lower bound above threshold); bounds are computed and cached on demand.
double mod_norm_signal(const SampledSignal& f, double p, double q, const Weight& m,
                       const GaborSystem& sys);

/// Same for a phase-space symbol through the 2-D system: 4-D coefficients,
/// position block (k1,k2) inside, modulation block (n1,n2) outside.
double mod_norm_symbol(const SymbolField& a, double p, double q, const Weight& m,
                       const GaborSystem2D& sys);

}  // namespace tfa
