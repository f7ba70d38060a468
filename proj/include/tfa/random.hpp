#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "tfa/operators.hpp"
#include "tfa/schatten.hpp"
#include "tfa/signal.hpp"
#include "tfa/symbol.hpp"

namespace tfa {

/// Deterministic generator; every experiment derives its stream from the
/// run seed and its own id so results are reproducible under any schedule.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    double normal();
    int uniform_int(int lo, int hi);  // inclusive bounds
    cplx complex_normal();

private:
    std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t base, const std::string& tag);

/// Plain random complex vector, entries standard complex normal.
SampledSignal random_signal(const GridSpec& grid, Rng& rng);

/// Random Schwartz-type signal: combination of the first `modes` Hermite
/// functions with complex normal coefficients, unit-normalized.
SampledSignal random_schwartz_signal(const GridSpec& grid, Rng& rng, int modes = 6);

struct SymbolBand {
    double freq_x = 1.2;   // largest |xi| of the x-direction waves
    double freq_w = 1.2;   // largest |tau| of the w-direction waves
    double env_x = 2.5;    // Gaussian envelope width in x
    double env_w = 1.5;    // Gaussian envelope width in w
    int modes = 12;
};

/// Random band-limited symbol: Gaussian-weighted random waves under a
/// Gaussian envelope. Defined by physical parameters, so the same draw can
/// be sampled consistently on grids of different resolution.
SymbolField random_bandlimited_symbol(const GridSpec& grid, Rng& rng,
                                      const SymbolBand& band = SymbolBand{});

/// Haar-distributed random unitary (QR of a complex Ginibre matrix with
/// phase-fixed diagonal).
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

/// Operator with prescribed singular values: dx * M = U diag(s) V^*.
OperatorMatrix random_operator_with_spectrum(const GridSpec& grid, const Eigen::VectorXd& spectrum,
                                             Rng& rng);

/// Exactly orthonormal discrete family: modified Gram-Schmidt (two passes)
/// over sampled Hermite functions; columns are unit vectors in the
/// dx-weighted inner product.
Eigen::MatrixXcd hermite_onb(const GridSpec& grid, int count);

}  // namespace tfa
