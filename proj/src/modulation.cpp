#include "tfa/modulation.hpp"

#include <stdexcept>

namespace tfa {

double mod_norm_signal(const SampledSignal& f, double p, double q, const Weight& m,
                       const GaborSystem& sys) {
    if (!sys.bounds.has_value()) frame_bounds(sys);
    if (!sys.bounds->is_frame()) {
        throw std::runtime_error("mod_norm_signal: system is not a frame at this resolution");
    }
    return mixed_norm(gabor_coefficients(f, sys), p, q, m);
}

double mod_norm_symbol(const SymbolField& a, double p, double q, const Weight& m,
                       const GaborSystem2D& sys) {
    return mixed_norm(gabor_coefficients_2d(a, sys), p, q, m);
}

}  // namespace tfa
