#include "qnetcap/numerics.hpp"

#include <cmath>
#include <numbers>

namespace qnetcap {

// Below the switch point we can afford exp(-t)*I_nu(t) directly; above it the
// standard large-argument asymptotic series (four terms) is already at
// double precision, while cyl_bessel_i itself would overflow near t ~ 700.
namespace {
constexpr double kAsymptoticSwitch = 500.0;
}

double i0e(double t) {
    if (!(t >= 0)) throw DomainError("i0e: requires t >= 0");
    if (t < kAsymptoticSwitch) return std::exp(-t) * std::cyl_bessel_i(0.0, t);
    const double it = 1.0 / t;
    // 1 + 1/(8t) + 9/(128 t^2) + 225/(3072 t^3) + 11025/(98304 t^4)
    const double s =
        1.0 + it * (0.125 +
                    it * (0.0703125 +
                          it * (0.0732421875 + it * 0.112152099609375)));
    return s / std::sqrt(2.0 * std::numbers::pi * t);
}

double i1e(double t) {
    if (!(t >= 0)) throw DomainError("i1e: requires t >= 0");
    if (t < kAsymptoticSwitch) return std::exp(-t) * std::cyl_bessel_i(1.0, t);
    const double it = 1.0 / t;
    // 1 - 3/(8t) - 15/(128 t^2) - 315/(3072 t^3) - 14175/(98304 t^4)
    const double s =
        1.0 - it * (0.375 +
                    it * (0.1171875 +
                          it * (0.1025390625 + it * 0.144195556640625)));
    return s / std::sqrt(2.0 * std::numbers::pi * t);
}

} // namespace qnetcap
