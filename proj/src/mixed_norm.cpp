#include "tfa/mixed_norm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfa {

CoefficientArray CoefficientArray::make2(int k_count, int n_count, double k_step, double n_step) {
    CoefficientArray c;
    c.dims = 2;
    c.shape = {k_count, n_count, 1, 1};
    c.step = {k_step, n_step, 0.0, 0.0};
    c.data.assign(size_t(k_count) * n_count, cplx(0.0, 0.0));
    return c;
}

CoefficientArray CoefficientArray::make4(std::array<int, 4> shape, std::array<double, 4> step) {
    CoefficientArray c;
    c.dims = 4;
    c.shape = shape;
    c.step = step;
    c.data.assign(size_t(shape[0]) * shape[1] * shape[2] * shape[3], cplx(0.0, 0.0));
    return c;
}

namespace {

constexpr double kUnderflowFloor = 1e-300;

// Accumulates either sum of x^p or sup of x along one block.
struct BlockReduce {
    double p;
    bool is_sup;
    double acc = 0.0;

    void add(double x) {
        if (x < kUnderflowFloor) x = 0.0;
        if (is_sup) {
            if (x > acc) acc = x;
        } else {
            acc += (x == 0.0) ? 0.0 : std::pow(x, p);
        }
    }
    // Returns the block's l^p value.
    double value() const { return is_sup ? acc : (acc == 0.0 ? 0.0 : std::pow(acc, 1.0 / p)); }
};

}  // namespace

double mixed_norm(const CoefficientArray& c, double p, double q, const Weight& m) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("mixed_norm: exponents must be positive");
    const bool p_inf = std::isinf(p);
    const bool q_inf = std::isinf(q);

    BlockReduce outer{q, q_inf};
    if (c.dims == 2) {
        const int K = c.shape[0], Nn = c.shape[1];
        for (int n = 0; n < Nn; ++n) {
            const double wn = c.step[1] * centered_index(n, Nn);
            BlockReduce inner{p, p_inf};
            for (int k = 0; k < K; ++k) {
                const double xk = c.step[0] * centered_index(k, K);
                const double pos[1] = {xk};
                const double mod[1] = {wn};
                inner.add(std::abs(c.at2(k, n)) * m.eval(pos, mod));
            }
            outer.add(inner.value());
        }
    } else {
        const int K1 = c.shape[0], K2 = c.shape[1], N1 = c.shape[2], N2 = c.shape[3];
        for (int n2 = 0; n2 < N2; ++n2) {
            for (int n1 = 0; n1 < N1; ++n1) {
                const double mod[2] = {c.step[2] * centered_index(n1, N1),
                                       c.step[3] * centered_index(n2, N2)};
                BlockReduce inner{p, p_inf};
                for (int k2 = 0; k2 < K2; ++k2) {
                    for (int k1 = 0; k1 < K1; ++k1) {
                        const double pos[2] = {c.step[0] * centered_index(k1, K1),
                                               c.step[1] * centered_index(k2, K2)};
                        const size_t idx =
                            k1 + size_t(K1) * (k2 + size_t(K2) * (n1 + size_t(N1) * n2));
                        inner.add(std::abs(c.data[idx]) * m.eval(pos, mod));
                    }
                }
                outer.add(inner.value());
            }
        }
    }
    return outer.value();
}

CoefficientArray coeff_add(const CoefficientArray& a, const CoefficientArray& b) {
    if (a.dims != b.dims || a.shape != b.shape) {
        throw std::invalid_argument("coeff_add: shape mismatch");
    }
    CoefficientArray out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

}  // namespace tfa
