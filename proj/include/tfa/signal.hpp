#pragma once

#include <Eigen/Dense>
#include <complex>

#include "tfa/grid.hpp"

namespace tfa {

using cplx = std::complex<double>;

/// Complex samples of a function on a centered periodic grid.
struct SampledSignal {
    GridSpec grid;
    Eigen::VectorXcd samples;

    int size() const { return static_cast<int>(samples.size()); }
};

SampledSignal zero_signal(const GridSpec& grid);

/// Normalized Gaussian window 2^{1/4} exp(-pi x^2); unit L^2 norm.
SampledSignal gaussian_window(const GridSpec& grid);

/// Dilated Gaussian exp(-pi lambda x^2), no normalizing prefactor.
/// Rejects lambda so small that the tail at the boundary exceeds 1e-12.
SampledSignal dilated_gaussian(const GridSpec& grid, double lambda);

/// n-th L^2-normalized Hermite function by the three-term recurrence with
/// on-grid renormalization. Requires n <= N/4 so the grid resolves it.
SampledSignal hermite_function(const GridSpec& grid, int n);

/// Recurrence samples without the resolution guard; used for building
/// exactly orthonormal discrete families by re-orthogonalization.
SampledSignal hermite_function_unchecked(const GridSpec& grid, int n);

/// Discrete surrogate of the L^2 inner product: dx * sum f conj(g).
/// Conjugate-linear in the second slot.
cplx l2_inner(const SampledSignal& f, const SampledSignal& g);

double l2_norm(const SampledSignal& f);

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator*(cplx scale, const SampledSignal& f);

}  // namespace tfa
