#include "tfa/schatten.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace tfa {

int SingularSpectrum::numerical_rank() const {
    if (values.size() == 0) return 0;
    const double cut = 1e-12 * values[0];
    int r = 0;
    while (r < values.size() && values[r] > cut) ++r;
    return r;
}

SingularSpectrum singular_values(const OperatorMatrix& T) {
    if (!T.m.allFinite()) throw std::invalid_argument("singular_values: non-finite entries");
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(T.grid.spacing * T.m);
    if (svd.info() != Eigen::Success) throw std::runtime_error("singular_values: SVD failed");
    return {svd.singularValues()};
}

double schatten_norm(const SingularSpectrum& s, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten_norm: p must be positive");
    if (std::isinf(p)) return s.top();
    double acc = 0.0;
    for (int i = 0; i < s.values.size(); ++i) {
        const double v = s.values[i];
        if (v > 0.0) acc += std::pow(v, p);
    }
    return acc == 0.0 ? 0.0 : std::pow(acc, 1.0 / p);
}

double schatten_norm(const OperatorMatrix& T, double p) {
    return schatten_norm(singular_values(T), p);
}

}  // namespace tfa
