#pragma once

#include <cmath>
#include <limits>

#include "qnetcap/errors.hpp"

namespace qnetcap {

// Fraction of signal power surviving a lossy channel, validated to [0, 1].
// eta denotes the best attainable value, tau an instantaneous one.
struct Transmissivity {
    Transmissivity(double v) : value(v) {   // intentionally implicit
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("transmissivity outside [0, 1]: " +
                              std::to_string(v));
    }
    operator double() const { return value; }
    double value;
};

// Mean thermal photons per mode injected by the environment.
struct ThermalOccupation {
    ThermalOccupation(double n) : n_bar(n) {   // intentionally implicit
        if (!(n >= 0.0))
            throw DomainError("thermal occupation must be >= 0, got " +
                              std::to_string(n));
    }
    operator double() const { return n_bar; }
    // Environment photon number n_bar / (1 - tau); defined only for tau < 1.
    double environment_occupation(double tau) const {
        if (!(tau < 1.0))
            throw DomainError("environment occupation undefined at tau = 1");
        return n_bar / (1.0 - tau);
    }
    double n_bar;
};

enum class CapacityKind { ExactAchievable, TightUpperBound };

// A point-to-point rate in bits per channel use.  Perfect transmission makes
// several bounds diverge; such results carry `unbounded` and refuse to be
// consumed as plain numbers.
struct CapacityBound {
    double value = 0.0;
    CapacityKind kind = CapacityKind::ExactAchievable;
    bool unbounded = false;

    double finite() const {
        if (unbounded)
            throw DomainError("capacity is unbounded (perfect transmission); "
                              "caller must handle this case explicitly");
        return value;
    }
    static CapacityBound infinite(CapacityKind k) {
        return {std::numeric_limits<double>::infinity(), k, true};
    }
};

// Weibull statistics of the instantaneous transmissivity of a wandering beam:
// tau(r) = eta_max * exp(-(r/r0)^gamma) with r ~ Rayleigh(sigma).
struct FadingDensity {
    FadingDensity(double eta, double shape, double scale, double sigma_);
    double eta_max;        // best transmissivity, attained at r = 0
    double weibull_shape;  // gamma > 0
    double weibull_scale;  // r0 > 0, meters
    double sigma;          // wandering standard deviation, meters (0 = none)
};

// h(x) = (x + 1) log2(x + 1) - x log2 x, the entropic term of the thermal
// bound; h(0) = 0.
double bosonic_entropy(double x);

// Capacity of the pure-loss channel, -log2(1 - eta).
CapacityBound plob(Transmissivity eta);

// Upper bound for the thermal-loss channel; zero when tau <= n_bar, reduces
// to plob at n_bar = 0.
CapacityBound thermal_loss_bound(Transmissivity tau, ThermalOccupation n_bar);

// Difference plob(tau) - thermal_loss_bound(tau, n_bar), evaluated stably.
// Nonnegative, and equal to plob(n_bar) at tau = n_bar.  Requires tau < 1.
double thermal_gap(double tau, double n_bar);

// Capacity of a lossy fading channel: the density-averaged pure-loss bound,
// evaluated as a wandering correction factor to plob(eta_max).
CapacityBound fading_capacity(const FadingDensity& density);

// Upper bound for the thermal-lossy fading channel: the density average of
// thermal_loss_bound over tau in (n_bar, eta_max].
CapacityBound thermal_fading_capacity(const FadingDensity& density,
                                      ThermalOccupation n_bar);

// 10^(-loss_rate * length), the standard fiber loss law.
Transmissivity fiber_transmissivity(double length_km, double loss_rate_per_km);

// Raw density F_sigma(tau) and its cumulative distribution W(tau).
double fading_pdf(const FadingDensity& density, double tau);
double fading_cdf(const FadingDensity& density, double tau);

// Mean instantaneous transmissivity E[tau] under the density.
double expected_transmissivity(const FadingDensity& density);

// Quadrature of the raw density over (0, eta_max] with analytic tail bounds;
// should be 1 within 1e-6 for any valid density.  Kept separate from the
// capacity paths, which never integrate the raw (possibly singular) density.
double fading_density_mass(const FadingDensity& density);

} // namespace qnetcap
