#pragma once

#include <array>
#include <complex>
#include <vector>

#include "tfa/weights.hpp"

namespace tfa {

using cplx = std::complex<double>;

/// Lattice coefficient array. Two layouts:
///   dims == 2: entry (k, n) at data[k + shape[0] * n]; axis 0 is the
///              position (translation) index, axis 1 the modulation index.
///   dims == 4: entry (k1, k2, n1, n2) at
///              data[k1 + K1*(k2 + K2*(n1 + N1*n2))]; axes 0,1 position,
///              axes 2,3 modulation.
/// step[i] is the physical lattice step of axis i, used when weights are
/// evaluated at the centered (signed) lattice indices.
struct CoefficientArray {
    int dims = 2;
    std::array<int, 4> shape{};
    std::array<double, 4> step{};
    std::vector<cplx> data;

    static CoefficientArray make2(int k_count, int n_count, double k_step, double n_step);
    static CoefficientArray make4(std::array<int, 4> shape, std::array<double, 4> step);

    cplx& at2(int k, int n) { return data[k + size_t(shape[0]) * n]; }
    const cplx& at2(int k, int n) const { return data[k + size_t(shape[0]) * n]; }
    cplx& at4(int k1, int k2, int n1, int n2) {
        return data[k1 + size_t(shape[0]) * (k2 + size_t(shape[1]) * (n1 + size_t(shape[2]) * n2))];
    }
};

/// Signed lattice index in [-count/2, count/2).
inline int centered_index(int i, int count) { return i < count / 2 ? i : i - count; }

/// Weighted mixed quasi-norm || c ||_{l^{p,q}_m}
///   = ( sum_n ( sum_k |c_{k,n}|^p m(k,n)^p )^{q/p} )^{1/q},
/// sums over the position block inside, the modulation block outside,
/// with sup replacing the sum at infinite exponents. p, q in (0, inf].
double mixed_norm(const CoefficientArray& c, double p, double q, const Weight& m);

CoefficientArray coeff_add(const CoefficientArray& a, const CoefficientArray& b);

}  // namespace tfa
