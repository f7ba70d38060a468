#pragma once

#include <span>

namespace tfa {

/// Polynomial weights v_s(z) = (1 + |z|^2)^{s/2} and their tensor variants.
/// A weight acts on a lattice/grid point split into a position block and a
/// modulation block (one coordinate each for signals, two for symbols).
struct Weight {
    enum class Kind {
        flat,       // m == 1
        vs_full,    // v_s over all coordinates
        vs_mod,     // 1 (x) v_s: v_s on the modulation block
        vs_pos,     // v_s (x) 1: v_s on the position block
    };

    double s = 0.0;
    Kind kind = Kind::flat;

    static Weight flat() { return {0.0, Kind::flat}; }
    static Weight vs(double s) { return {s, Kind::vs_full}; }
    static Weight one_otimes_vs(double s) { return {s, Kind::vs_mod}; }
    static Weight vs_otimes_one(double s) { return {s, Kind::vs_pos}; }

    double eval(std::span<const double> position, std::span<const double> modulation) const;
};

/// v_s at a bare point, any dimension.
double vs_value(double s, std::span<const double> point);

}  // namespace tfa
