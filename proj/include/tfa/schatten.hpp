#pragma once

#include <Eigen/Dense>

#include "tfa/operators.hpp"

namespace tfa {

/// Nonincreasing nonnegative singular values of an operator.
struct SingularSpectrum {
    Eigen::VectorXd values;

    double top() const { return values.size() > 0 ? values[0] : 0.0; }
    /// Count of values above 1e-12 * s1.
    int numerical_rank() const;
};

/// Singular values of dx * M, the operator singular values in the
/// dx-weighted model, sorted descending.
SingularSpectrum singular_values(const OperatorMatrix& T);

/// (sum_n s_n^p)^{1/p}; p = inf gives s_1. Quasi-norm for p < 1.
double schatten_norm(const SingularSpectrum& s, double p);
double schatten_norm(const OperatorMatrix& T, double p);

}  // namespace tfa
