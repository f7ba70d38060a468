#include "tfa/weights.hpp"

#include <cmath>

namespace tfa {

double vs_value(double s, std::span<const double> point) {
    double r2 = 0.0;
    for (double c : point) r2 += c * c;
    return std::pow(1.0 + r2, s / 2.0);
}

double Weight::eval(std::span<const double> position, std::span<const double> modulation) const {
    switch (kind) {
        case Kind::flat:
            return 1.0;
        case Kind::vs_mod:
            return vs_value(s, modulation);
        case Kind::vs_pos:
            return vs_value(s, position);
        case Kind::vs_full: {
            double r2 = 0.0;
            for (double c : position) r2 += c * c;
            for (double c : modulation) r2 += c * c;
            return std::pow(1.0 + r2, s / 2.0);
        }
    }
    return 1.0;
}

}  // namespace tfa
