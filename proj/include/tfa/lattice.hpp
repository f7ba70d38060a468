#pragma once

#include "tfa/grid.hpp"

namespace tfa {

/// Time-frequency lattice with integer steps (a, b): translations by a*dx,
/// modulations by b/L. Both steps must divide N so shifts stay grid-aligned;
/// a*b <= N (a*b < N, i.e. alpha*beta < 1, is required for frames, a*b = N
/// is admitted for critical-density diagnostics).
struct Lattice {
    int a_step = 0;
    int b_step = 0;

    double alpha(const GridSpec& g) const { return a_step * g.spacing; }
    double beta(const GridSpec& g) const { return b_step / g.period; }
    int num_time_shifts(const GridSpec& g) const { return g.num_points / a_step; }
    int num_freq_shifts(const GridSpec& g) const { return g.num_points / b_step; }
    double redundancy(const GridSpec& g) const {
        return double(g.num_points) / (double(a_step) * b_step);
    }
};

Lattice make_lattice(const GridSpec& grid, int a_step, int b_step);

/// Divisor lattice with redundancy 4 whose physical steps track
/// (alpha, beta) = (0.375, 2/3) at L = 12; steps scale with the grid so the
/// physical lattice is resolution-independent.
Lattice default_lattice(const GridSpec& grid);

}  // namespace tfa
