#pragma once

#include <Eigen/Dense>

#include "tfa/grid.hpp"
#include "tfa/signal.hpp"

namespace tfa {

/// Discrete STFT values(m, n) ~ V_g f(time_node(m), freq_node(n)).
struct StftMatrix {
    GridSpec grid;
    Eigen::MatrixXcd values;
};

/// Time-frequency shift M_{n/L} T_{k dx} f: modulation after translation.
/// k and n are shift counts interpreted modulo N.
SampledSignal tf_shift(const SampledSignal& f, int k, int n);

/// values(m, n) = dx * sum_j f[j] conj(g_per(t_j - x_m)) e^{-2pi i w_n t_j},
/// one length-N FFT per row, plane waves referenced to node positions.
StftMatrix stft(const SampledSignal& f, const SampledSignal& g);

}  // namespace tfa
