#include "wgcert/simd/phase_kernels.hpp"

#include <cmath>
#include <numbers>

namespace wgcert::simd {

PhaseSum sum_unit_phases_scalar(std::span<const double> turns)
{
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    PhaseSum s;
    for (double p : turns) {
        p -= std::nearbyint(p);
        const double angle = kTwoPi * p;
        s.re += std::cos(angle);
        s.im += std::sin(angle);
    }
    return s;
}

} // namespace wgcert::simd
