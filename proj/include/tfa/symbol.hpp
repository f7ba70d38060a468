#pragma once

#include <Eigen/Dense>

#include "tfa/grid.hpp"
#include "tfa/signal.hpp"

namespace tfa {

/// Complex samples of a phase-space function a(x, w) on the N x N grid:
/// values(m, n) ~ a(time_node(m), freq_node(n)).
struct SymbolField {
    GridSpec grid;
    Eigen::MatrixXcd values;

    int size() const { return static_cast<int>(values.rows()); }
};

SymbolField zero_symbol(const GridSpec& grid);
SymbolField constant_symbol(const GridSpec& grid, cplx value);

/// Two-dimensional Gaussian window (1/2) exp(-pi (x^2 + w^2)).
SymbolField gaussian_symbol_window(const GridSpec& grid);

/// dx * dw-weighted phase-space inner product, conjugate-linear in b.
cplx symbol_inner(const SymbolField& a, const SymbolField& b);

double symbol_l2_norm(const SymbolField& a);

}  // namespace tfa
