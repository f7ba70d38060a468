#pragma once

// Independent numerical oracles for the test suite: quadrature of continuum
// integrals and brute-force evaluations that avoid the FFT pipelines.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

/// Composite Simpson rule on [lo, hi] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n = 1 << 14) {
    const double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

inline std::complex<double> simpson_c(const std::function<std::complex<double>(double)>& f,
                                      double lo, double hi, int n = 1 << 14) {
    const double h = (hi - lo) / n;
    std::complex<double> acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace oracle
