#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace tfa {

using cplx = std::complex<double>;

/// In-place DFT, forward sign convention sum_j x[j] e^{-2pi i jk/n}.
void fft_forward(cplx* data, int n);

/// In-place unnormalized inverse DFT, sum_j x[j] e^{+2pi i jk/n}.
void fft_inverse(cplx* data, int n);

void fft_forward(std::vector<cplx>& v);
void fft_inverse(std::vector<cplx>& v);

/// Row-column 2-D transforms, in place, unnormalized.
void fft2_forward(Eigen::MatrixXcd& m);
void fft2_inverse(Eigen::MatrixXcd& m);

}  // namespace tfa
