#include "qnetcap/capacity.hpp"

#include <cmath>
#include <numbers>

#include "qnetcap/numerics.hpp"

namespace qnetcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

inline double log2_1p(double x) { return std::log1p(x) / kLn2; }

inline double plob_value(double eta) {
    return -std::log1p(-eta) / kLn2;
}

// Kernel exponent of the Weibull wandering statistics: the beam-center
// distance r enters all averages through t = (r/r0)^2 ~ Exp(beta).
inline double kernel_beta(const FadingDensity& d) {
    return d.weibull_scale * d.weibull_scale / (2.0 * d.sigma * d.sigma);
}

// Derivative in tau of thermal_gap; positive on n_bar < tau < 1.
inline double thermal_gap_dtau(double tau, double nb) {
    const double om = 1.0 - tau;
    return nb / (om * om) * log2_1p(om * (tau - nb) / nb) +
           nb / (om * tau * kLn2);
}

// Density average of the pure-loss bound in the exponential coordinate
// t = (r/r0)^2: integral of beta e^{-beta t} B(eta e^{-t^{g/2}}).  Used when
// eta = 1, where the correction-factor form degenerates.  The transmissivity
// deficit is formed as (1-eta) - eta*expm1(-s) so the log stays accurate (and
// finite) arbitrarily close to t = 0 even at eta = 1.
double t_domain_pure_loss(const FadingDensity& d) {
    const double beta = kernel_beta(d);
    const double eta = d.eta_max;
    const double half_g = 0.5 * d.weibull_shape;
    // both exp(-beta*t) and the pure-loss factor vanish past these points
    const double t_hi =
        std::min(745.0 / beta, std::pow(746.0, 1.0 / half_g));
    auto f = [&](double t) {
        const double s = std::pow(t, half_g);
        const double deficit = (1.0 - eta) - eta * std::expm1(-s);
        return beta * std::exp(-beta * t) * (-std::log(deficit) / kLn2);
    };
    return integrate(f, 0.0, t_hi, 1e-10).checked();
}

// Same average for the thermal bound, restricted to tau > n_bar.
double t_domain_thermal(const FadingDensity& d, double nb) {
    const double beta = kernel_beta(d);
    const double g = d.weibull_shape;
    const double t_n = std::pow(std::log(d.eta_max / nb), 2.0 / g);
    const double t_hi = std::min(t_n, 745.0 / beta);
    auto f = [&](double t) {
        const double tau = d.eta_max * std::exp(-std::pow(t, 0.5 * g));
        return beta * std::exp(-beta * t) *
               thermal_loss_bound(std::min(tau, 1.0), nb).value;
    };
    return integrate(f, 0.0, t_hi, 1e-10).checked();
}

} // namespace

FadingDensity::FadingDensity(double eta, double shape, double scale,
                             double sigma_)
    : eta_max(eta), weibull_shape(shape), weibull_scale(scale), sigma(sigma_) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("fading density: eta_max outside [0, 1]");
    if (!(shape > 0.0))
        throw DomainError("fading density: weibull_shape must be > 0");
    if (!(scale > 0.0))
        throw DomainError("fading density: weibull_scale must be > 0");
    if (!(sigma_ >= 0.0))
        throw DomainError("fading density: sigma must be >= 0");
}

double bosonic_entropy(double x) {
    if (!(x >= 0.0)) throw DomainError("bosonic_entropy: requires x >= 0");
    if (x == 0.0) return 0.0;
    return x * log2_1p(1.0 / x) + log2_1p(x);
}

CapacityBound plob(Transmissivity eta) {
    if (eta.value == 1.0)
        return CapacityBound::infinite(CapacityKind::ExactAchievable);
    return {plob_value(eta.value), CapacityKind::ExactAchievable, false};
}

CapacityBound thermal_loss_bound(Transmissivity tau_, ThermalOccupation nb_) {
    const double tau = tau_.value;
    const double nb = nb_.n_bar;
    if (nb == 0.0) return plob(tau_);
    CapacityBound out{0.0, CapacityKind::TightUpperBound, false};
    if (tau <= nb) return out;
    if (tau == 1.0) {
        // continuous limit from below; finite because nb > 0 (and nb < 1 here)
        out.value = nb / kLn2 - std::log2(std::numbers::e * nb);
        return out;
    }
    const double ne = nb / (1.0 - tau);
    double value;
    if (tau > 0.99) {
        // the generic rearrangement loses precision once ne blows up
        const double eps = 1.0 - tau;
        value = -ne * log2_1p(-eps) - std::log2(nb) -
                (ne + 1.0) * log2_1p(eps / nb);
    } else {
        value = ne * std::log2(nb / tau) - (ne + 1.0) * log2_1p(nb - tau);
    }
    out.value = std::max(value, 0.0);
    return out;
}

double thermal_gap(double tau, double nb) {
    if (!(tau > 0.0 && tau < 1.0))
        throw DomainError("thermal_gap: requires 0 < tau < 1");
    if (!(nb >= 0.0)) throw DomainError("thermal_gap: requires n_bar >= 0");
    if (nb == 0.0) return 0.0;
    const double ne = nb / (1.0 - tau);
    // equals ne*log2(tau) + bosonic_entropy(ne), rearranged so that both
    // terms stay O(1) relative to the result
    return ne * log2_1p((1.0 - tau) * (tau - nb) / nb) + log2_1p(ne);
}

CapacityBound fading_capacity(const FadingDensity& d) {
    if (d.eta_max == 0.0) return {0.0, CapacityKind::ExactAchievable, false};
    if (d.sigma == 0.0) return plob(d.eta_max);
    if (d.eta_max == 1.0)
        return {t_domain_pure_loss(d), CapacityKind::ExactAchievable, false};
    const double eta = d.eta_max;
    const double beta = kernel_beta(d);
    const double g = d.weibull_shape;
    // wandering correction in x = ln(eta/tau); the kernel decays like
    // exp(-beta x^{2/g}) and the 1/(e^x - eta) factor like e^{-x}
    double x_cut = 50.0;
    if (beta * std::pow(x_cut, 2.0 / g) > 745.0)
        x_cut = std::pow(745.0 / beta, 0.5 * g);
    auto f = [&](double x) {
        return std::exp(-beta * std::pow(x, 2.0 / g)) / (std::exp(x) - eta);
    };
    const double correction =
        eta / kLn2 * integrate(f, 0.0, x_cut, 1e-10).checked();
    const double value = plob_value(eta) - correction;
    return {std::max(value, 0.0), CapacityKind::ExactAchievable, false};
}

CapacityBound thermal_fading_capacity(const FadingDensity& d,
                                      ThermalOccupation nb_) {
    const double nb = nb_.n_bar;
    if (nb == 0.0) return fading_capacity(d);
    CapacityBound out{0.0, CapacityKind::TightUpperBound, false};
    const double eta = d.eta_max;
    if (nb >= eta) return out;
    if (d.sigma == 0.0) {
        out.value = thermal_loss_bound(eta, nb).value;
        return out;
    }
    if (eta == 1.0) {
        out.value = t_domain_thermal(d, nb);
        return out;
    }
    // Evaluate the thermal correction T = E[B - L; tau > nb] + E[B; tau <= nb]
    // exactly, integrating the gap M = B - L by parts so the quadrature only
    // ever sees the smooth kernel-weighted derivative of M:
    //   T = M(eta) - W(nb) B(nb) - int_0^{x_n} W(x) M'(tau(x)) tau(x) dx
    //       + E[B; tau <= nb],                       tau(x) = eta e^{-x}
    const double beta = kernel_beta(d);
    const double g = d.weibull_shape;
    const double x_n = std::log(eta / nb);
    const double w_n = std::exp(-beta * std::pow(x_n, 2.0 / g));
    const double gap_eta = thermal_gap(eta, nb);
    double x_cut = x_n;
    if (beta * std::pow(x_n, 2.0 / g) > 745.0)
        x_cut = std::pow(745.0 / beta, 0.5 * g);
    auto f = [&](double x) {
        const double tau = eta * std::exp(-x);
        return std::exp(-beta * std::pow(x, 2.0 / g)) *
               thermal_gap_dtau(tau, nb) * tau;
    };
    double correction =
        gap_eta - w_n * plob_value(nb) -
        integrate(f, 0.0, x_cut, 1e-10).checked();
    if (w_n * plob_value(nb) > 1e-13 * std::max(gap_eta, 1.0)) {
        // sub-threshold mass is rarely significant; when it is, average the
        // pure-loss bound over tau <= nb in the exponential coordinate
        const double t_n = std::pow(x_n, 2.0 / g);
        const double t_hi =
            std::min(745.0 / beta, std::pow(746.0, 2.0 / g));
        if (t_hi > t_n) {
            auto tail = [&](double t) {
                const double tau = eta * std::exp(-std::pow(t, 0.5 * g));
                return beta * std::exp(-beta * t) * plob_value(tau);
            };
            correction += integrate(tail, t_n, t_hi, 1e-10).checked();
        }
    }
    const double bf = fading_capacity(d).value;
    out.value = std::max(bf - correction, 0.0);
    return out;
}

Transmissivity fiber_transmissivity(double length_km, double loss_rate_per_km) {
    if (!(length_km >= 0.0))
        throw DomainError("fiber_transmissivity: length must be >= 0");
    if (!(loss_rate_per_km > 0.0))
        throw DomainError("fiber_transmissivity: loss rate must be > 0");
    return std::pow(10.0, -loss_rate_per_km * length_km);
}

double fading_pdf(const FadingDensity& d, double tau) {
    if (d.sigma == 0.0)
        throw DomainError("fading_pdf: degenerate density (sigma = 0)");
    if (!(tau > 0.0 && tau < d.eta_max)) return 0.0;
    const double beta = kernel_beta(d);
    const double g = d.weibull_shape;
    const double x = std::log(d.eta_max / tau);
    return 2.0 * beta / (g * tau) * std::pow(x, 2.0 / g - 1.0) *
           std::exp(-beta * std::pow(x, 2.0 / g));
}

double fading_cdf(const FadingDensity& d, double tau) {
    if (tau <= 0.0) return 0.0;
    if (tau >= d.eta_max) return 1.0;
    if (d.sigma == 0.0) return 0.0;   // point mass at eta_max
    const double beta = kernel_beta(d);
    const double x = std::log(d.eta_max / tau);
    return std::exp(-beta * std::pow(x, 2.0 / d.weibull_shape));
}

double expected_transmissivity(const FadingDensity& d) {
    if (d.sigma == 0.0) return d.eta_max;
    if (d.eta_max == 0.0) return 0.0;
    const double beta = kernel_beta(d);
    const double half_g = 0.5 * d.weibull_shape;
    const double t_hi =
        std::min(745.0 / beta, std::pow(746.0, 1.0 / half_g));
    auto f = [&](double t) {
        return beta * std::exp(-beta * t) * d.eta_max *
               std::exp(-std::pow(t, half_g));
    };
    return integrate(f, 0.0, t_hi, 1e-10).checked();
}

double fading_density_mass(const FadingDensity& d) {
    if (d.sigma == 0.0)
        throw DomainError("fading_density_mass: degenerate density");
    const double beta = kernel_beta(d);
    const double g = d.weibull_shape;
    const double eta = d.eta_max;
    // analytic tails in x = ln(eta/tau): mass above tau(x_min) and the full
    // CDF below tau(x_max)
    const double x_min = std::pow(1e-9 / beta, 0.5 * g);
    double x_max = std::pow(20.8 / beta, 0.5 * g);
    if (x_max > 700.0) x_max = 700.0;
    if (x_max < 1e-12)
        throw DomainError(
            "fading_density_mass: density too concentrated for raw quadrature");
    double mass = -std::expm1(-beta * std::pow(x_min, 2.0 / g));   // upper tail
    mass += std::exp(-beta * std::pow(x_max, 2.0 / g));            // lower tail
    auto pdf = [&](double tau) { return fading_pdf(d, tau); };
    double x_lo = x_min;
    while (x_lo < x_max) {
        const double x_hi = std::min(x_lo * 4.0, x_max);
        const double tau_hi = eta * std::exp(-x_lo);
        const double tau_lo = eta * std::exp(-x_hi);
        if (tau_lo < tau_hi)
            mass += integrate(pdf, tau_lo, tau_hi, 1e-9, 1e-10).value;
        x_lo = x_hi;
    }
    return mass;
}

} // namespace qnetcap
