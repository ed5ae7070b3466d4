#include "qnetcap/freespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnetcap/numerics.hpp"

namespace qnetcap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// Altitude breakpoints for slant-path quadrature.  The atmosphere varies on
// a ~100 m scale height near the ground while slant paths run hundreds of
// kilometres; splitting at fixed altitude decades keeps the boundary layer
// visible to the quadrature panels.
constexpr double kAltitudeBands[] = {30.0,   100.0,  300.0, 1e3, 3e3, 1e4,
                                     3e4,    1e5,    3e5,   1e6, 3e6};

template <class G>
double banded_altitude_integral(G&& g, double h_lo, double h_hi) {
    double total = 0.0;
    double lo = h_lo;
    for (double edge : kAltitudeBands) {
        if (edge <= lo) continue;
        if (edge >= h_hi) break;
        total += integrate(g, lo, edge, 1e-9).checked();
        lo = edge;
    }
    if (lo < h_hi) total += integrate(g, lo, h_hi, 1e-9).checked();
    return total;
}

// Stable slant geometry about a sea-level station: altitude after
// propagating z at zenith angle theta, and its inverse.
double altitude_after(double z, double cos_theta) {
    const double r = kEarthRadius;
    return z * (z + 2.0 * r * cos_theta) /
           (std::sqrt(r * r + z * z + 2.0 * z * r * cos_theta) + r);
}

double propagation_to(double h, double cos_theta) {
    const double r = kEarthRadius;
    const double root =
        std::sqrt(h * h + 2.0 * h * r + r * r * cos_theta * cos_theta);
    return h * (h + 2.0 * r) / (root + r * cos_theta);
}

// d(zeta)/dh along a slant path, with zeta the distance from the station.
double slant_jacobian(double h, double cos_theta) {
    const double r = kEarthRadius;
    return (h + r) /
           std::sqrt(h * h + 2.0 * h * r + r * r * cos_theta * cos_theta);
}

} // namespace

double BeamSetup::rayleigh_range() const {
    return kPi * waist0 * waist0 / wavelength;
}

void BeamSetup::check() const {
    if (!(wavelength > 0.0))
        throw DomainError("beam setup: wavelength must be > 0");
    if (!(waist0 > 0.0))
        throw DomainError("beam setup: initial spot size must be > 0");
    if (!(aperture > 0.0))
        throw DomainError("beam setup: receiver aperture must be > 0");
    if (!(curvature0 > 0.0))
        throw DomainError("beam setup: curvature must be > 0 (inf = collimated)");
    if (!(eta_eff > 0.0 && eta_eff <= 1.0))
        throw DomainError("beam setup: detector efficiency outside (0, 1]");
    if (!(n_ex >= 0.0))
        throw DomainError("beam setup: excess noise must be >= 0");
    if (!(pointing_error >= 0.0))
        throw DomainError("beam setup: pointing error must be >= 0");
    if (!(pulse_duration > 0.0))
        throw DomainError("beam setup: pulse duration must be > 0");
    if (!(fov > 0.0))
        throw DomainError("beam setup: field of view must be > 0");
    if (!(filter_nm > 0.0))
        throw DomainError("beam setup: filter width must be > 0");
}

Trajectory Trajectory::ground(double altitude_m, double length_m) {
    if (!(altitude_m >= 0.0))
        throw DomainError("trajectory: ground altitude must be >= 0");
    if (!(length_m >= 0.0))
        throw DomainError("trajectory: length must be >= 0");
    Trajectory t;
    t.kind = TrajectoryKind::Ground;
    t.altitude = altitude_m;
    t.z = length_m;
    return t;
}

namespace {
Trajectory make_satellite(TrajectoryKind kind, double h_sat, double zenith) {
    if (!(h_sat > 0.0))
        throw DomainError("trajectory: satellite altitude must be > 0");
    if (!(std::abs(zenith) <= 1.0))
        throw DomainError(
            "trajectory: zenith angle limited to |theta| <= 1 rad");
    Trajectory t;
    t.kind = kind;
    t.altitude = h_sat;
    t.zenith = zenith;
    t.z = propagation_to(h_sat, std::cos(zenith));
    return t;
}
} // namespace

Trajectory Trajectory::uplink(double satellite_altitude_m, double zenith_rad) {
    return make_satellite(TrajectoryKind::Uplink, satellite_altitude_m,
                          zenith_rad);
}

Trajectory Trajectory::downlink(double satellite_altitude_m,
                                double zenith_rad) {
    return make_satellite(TrajectoryKind::Downlink, satellite_altitude_m,
                          zenith_rad);
}

Trajectory Trajectory::intersatellite(double h1_m, double h2_m,
                                      double separation_m) {
    if (!(h1_m >= 0.0 && h2_m >= 0.0))
        throw DomainError("trajectory: orbit altitudes must be >= 0");
    if (!(separation_m >= 0.0))
        throw DomainError("trajectory: separation must be >= 0");
    Trajectory t;
    t.kind = TrajectoryKind::Intersatellite;
    t.altitude = h1_m;
    t.altitude2 = h2_m;
    t.z = separation_m;
    return t;
}

double Trajectory::altitude_at(double zeta) const {
    switch (kind) {
    case TrajectoryKind::Ground:
        return altitude;
    case TrajectoryKind::Uplink:
        return altitude_after(zeta, std::cos(zenith));
    case TrajectoryKind::Downlink:
        return altitude_after(z - zeta, std::cos(zenith));
    case TrajectoryKind::Intersatellite:
        break;
    }
    // straight chord between the two orbits; only used for diagnostics
    const double f = z > 0.0 ? zeta / z : 0.0;
    return altitude + f * (altitude2 - altitude);
}

const char* to_string(SkyCondition c) {
    switch (c) {
    case SkyCondition::ClearNight: return "clear-night";
    case SkyCondition::CloudyDay: return "cloudy-day";
    case SkyCondition::ClearDay: return "clear-day";
    }
    return "clear-night";
}

SkyCondition parse_sky_condition(const std::string& name) {
    if (name == "clear-night") return SkyCondition::ClearNight;
    if (name == "cloudy-day") return SkyCondition::CloudyDay;
    if (name == "clear-day") return SkyCondition::ClearDay;
    throw ConfigError("unknown sky condition '" + name +
                      "' (expected clear-night, cloudy-day or clear-day)");
}

double AtmosphereModel::alpha(double h) const {
    return alpha0 * std::exp(-h / h_tilde);
}

double AtmosphereModel::cn2(double h) const {
    if (cn2_override) return cn2_override(h);
    if (h < 0.0) h = 0.0;
    const double w = hv_wind / 27.0;
    const double hk = 1e-5 * h;
    const double hk10 = std::pow(hk, 10.0);
    return 0.00594 * w * w * hk10 * std::exp(-h / 1000.0) +
           2.7e-16 * std::exp(-h / 1500.0) + hv_a * std::exp(-h / 100.0);
}

double AtmosphereModel::irradiance(SkyCondition c) const {
    switch (c) {
    case SkyCondition::ClearNight: return 1.9e13;
    case SkyCondition::CloudyDay: return 1.9e18;
    case SkyCondition::ClearDay: return 1.9e18;
    }
    return 1.9e13;
}

double AtmosphereModel::albedo(SkyCondition c) const {
    return c == SkyCondition::ClearNight ? 7.36e-7 : 0.3;
}

DiffractionResult diffraction(const BeamSetup& setup, double z) {
    setup.check();
    if (!(z >= 0.0)) throw DomainError("diffraction: requires z >= 0");
    const double zr = setup.rayleigh_range();
    const double curvature_term =
        std::isinf(setup.curvature0) ? 1.0 : 1.0 - z / setup.curvature0;
    DiffractionResult out;
    out.w_d = setup.waist0 * std::hypot(curvature_term, z / zr);
    const double x = 2.0 * setup.aperture * setup.aperture / (out.w_d * out.w_d);
    out.eta_d = -std::expm1(-x);
    out.far_field = z > 10.0 * zr;
    return out;
}

Transmissivity extinction(const AtmosphereModel& atmo, const Trajectory& traj) {
    switch (traj.kind) {
    case TrajectoryKind::Intersatellite:
        return 1.0;
    case TrajectoryKind::Ground:
        return std::exp(-atmo.alpha(traj.altitude) * traj.z);
    case TrajectoryKind::Uplink:
    case TrajectoryKind::Downlink:
        break;
    }
    const double cos_theta = std::cos(traj.zenith);
    auto depth = [&](double h) {
        return atmo.alpha(h) * slant_jacobian(h, cos_theta);
    };
    const double tau = banded_altitude_integral(depth, 0.0, traj.altitude);
    return std::exp(-tau);
}

TurbulenceResult turbulence(const BeamSetup& setup, const AtmosphereModel& atmo,
                            const Trajectory& traj) {
    setup.check();
    if (traj.kind == TrajectoryKind::Intersatellite)
        throw DomainError("turbulence: intersatellite paths see no atmosphere");
    const auto diff = diffraction(setup, traj.z);
    const double k = 2.0 * kPi / setup.wavelength;
    const double z = traj.z;

    // spherical-wave coherence length: path integral of Cn^2 weighted by
    // (1 - zeta/z)^{5/3}, zeta measured from the transmitter
    double coherence_integral = 0.0;
    double rytov_integral = 0.0;   // plane-wave kernel (z - zeta)^{5/6}
    if (traj.kind == TrajectoryKind::Ground) {
        const double cn2 = atmo.cn2(traj.altitude);
        coherence_integral = cn2 * z * (3.0 / 8.0);
        rytov_integral = cn2 * std::pow(z, 11.0 / 6.0) * (6.0 / 11.0);
    } else {
        const double cos_theta = std::cos(traj.zenith);
        const bool up = traj.kind == TrajectoryKind::Uplink;
        auto coherence_kernel = [&](double h) {
            const double zeta_station = propagation_to(h, cos_theta);
            const double from_tx = up ? zeta_station : z - zeta_station;
            const double w = std::max(1.0 - from_tx / z, 0.0);
            return atmo.cn2(h) * std::pow(w, 5.0 / 3.0) *
                   slant_jacobian(h, cos_theta);
        };
        auto rytov_kernel = [&](double h) {
            const double zeta_station = propagation_to(h, cos_theta);
            const double from_tx = up ? zeta_station : z - zeta_station;
            const double w = std::max(z - from_tx, 0.0);
            return atmo.cn2(h) * std::pow(w, 5.0 / 6.0) *
                   slant_jacobian(h, cos_theta);
        };
        coherence_integral =
            banded_altitude_integral(coherence_kernel, 0.0, traj.altitude);
        rytov_integral =
            banded_altitude_integral(rytov_kernel, 0.0, traj.altitude);
    }

    TurbulenceResult out;
    out.sigma_Ry2 = 2.25 * std::pow(k, 7.0 / 6.0) * rytov_integral;
    if (coherence_integral <= 0.0) {
        out.w_st = diff.w_d;
        out.eta_st = diff.eta_d;
        return out;
    }
    out.rho0 = std::pow(1.46 * k * k * coherence_integral, -3.0 / 5.0);
    out.phi = 0.33 * std::cbrt(out.rho0 / setup.waist0);

    // turbulent widening of the spot, split between short-term spread and
    // centroid wander; the split (and its validity limits) only matter when
    // the spread is a material fraction of the diffraction spot
    const double spread = 2.0 * std::pow(setup.wavelength * z /
                                         (kPi * out.rho0), 2.0);
    const double wd2 = diff.w_d * diff.w_d;
    out.turbulence_major = spread > 0.1 * wd2;
    double phi_eff = out.phi;
    if (out.turbulence_major) {
        if (out.phi > 0.5)
            throw WeakTurbulenceViolated(
                "turbulence: short-term spreading parameter phi = " +
                std::to_string(out.phi) + " exceeds 0.5");
    } else {
        phi_eff = std::min(out.phi, 1.0);
    }
    const double residual = 1.0 - phi_eff;
    out.w_st = std::sqrt(wd2 + spread * residual * residual);
    out.sigma_t2 = spread * (1.0 - residual * residual);
    out.eta_st = -std::expm1(-2.0 * setup.aperture * setup.aperture /
                             (out.w_st * out.w_st));
    return out;
}

double wandering_variance(const BeamSetup& setup, const Trajectory& traj,
                          const TurbulenceResult& turb) {
    const double sp = setup.pointing_error * traj.z;
    const double sigma_p2 = sp * sp;
    switch (traj.kind) {
    case TrajectoryKind::Ground: return turb.sigma_t2 + sigma_p2;
    case TrajectoryKind::Uplink: return turb.sigma_t2;
    case TrajectoryKind::Downlink: return sigma_p2;
    case TrajectoryKind::Intersatellite: return sigma_p2;
    }
    return sigma_p2;
}

WeibullParams weibull_params(double eta_st, double eta_st_far, double a_R) {
    if (!(eta_st > 0.0 && eta_st <= 1.0))
        throw DomainError("weibull_params: eta_st outside (0, 1]");
    if (!(eta_st_far > 0.0))
        throw DomainError("weibull_params: far-field exponent must be > 0");
    if (!(a_R > 0.0))
        throw DomainError("weibull_params: aperture must be > 0");

    const double x = eta_st_far;
    double u;             // 1 - e^{-2x} I0(2x), so f0 = 1/u
    double f1;            // e^{-2x} I1(2x)
    double num_minus_u;   // 2(1 - e^{-x}) - u
    if (x < 3e-3) {
        // series keep the x^2-deep cancellation in ln(2 eta_st f0) exact
        u = x * (2.0 + x * (-3.0 + x * (10.0 / 3.0 +
            x * (-35.0 / 12.0 + x * (21.0 / 10.0)))));
        f1 = x * (1.0 + x * (-2.0 + x * (2.5 + x * (-7.0 / 3.0))));
        num_minus_u = x * x * (2.0 + x * (-3.0 + x * (17.0 / 6.0 +
            x * (-25.0 / 12.0))));
    } else {
        u = 1.0 - i0e(2.0 * x);
        f1 = i1e(2.0 * x);
        num_minus_u = -2.0 * std::expm1(-x) - u;
    }
    const double num = -2.0 * std::expm1(-x);   // 2 eta_st for matched inputs
    const double ln_arg =
        std::log1p(num_minus_u / u) + std::log1p((2.0 * eta_st - num) / num);
    if (!(ln_arg > 0.0))
        throw DomainError(
            "weibull_params: degenerate fading (2 eta_st f0 <= 1)");

    WeibullParams out;
    out.gamma_shape = 4.0 * x * f1 / (u * ln_arg);
    out.r0 = a_R * std::exp(-std::log(ln_arg) / out.gamma_shape);
    return out;
}

double background_flux(const BeamSetup& setup, const AtmosphereModel& atmo,
                       const Trajectory& traj, SkyCondition condition) {
    if (traj.kind == TrajectoryKind::Intersatellite) return 0.0;
    const double gamma_r = setup.pulse_duration * setup.filter_nm * setup.fov *
                           setup.aperture * setup.aperture;
    if (traj.kind == TrajectoryKind::Uplink)
        return atmo.albedo(condition) * AtmosphereModel::kSunIrradiance *
               gamma_r;
    return atmo.irradiance(condition) * gamma_r;
}

ThermalOccupation background_photons(const BeamSetup& setup,
                                     const AtmosphereModel& atmo,
                                     const Trajectory& traj,
                                     SkyCondition condition) {
    const double n_bg =
        setup.eta_eff * background_flux(setup, atmo, traj, condition);
    return n_bg + (setup.n_ex_trusted ? 0.0 : setup.n_ex);
}

double SatelliteGeometry::altitude_of(double z) const {
    return altitude_after(z, std::cos(zenith));
}

double SatelliteGeometry::propagation_of(double h) const {
    return propagation_to(h, std::cos(zenith));
}

SatelliteGeometry ground_satellite_geometry(double h_sat, double zenith) {
    if (!(h_sat >= 0.0))
        throw DomainError("geometry: satellite altitude must be >= 0");
    if (!(std::abs(zenith) <= kPi / 2.0))
        throw DomainError("geometry: |zenith| must be <= pi/2");
    SatelliteGeometry g;
    g.h_sat = h_sat;
    g.zenith = zenith;
    g.z_slant = propagation_to(h_sat, std::cos(zenith));
    return g;
}

double line_of_sight_limit(double h1, double h2) {
    if (!(h1 >= 0.0 && h2 >= 0.0))
        throw DomainError("line of sight: altitudes must be >= 0");
    const double r = kEarthRadius;
    return h1 * (h1 + 2.0 * r) / (h1 + r) + h2 * (h2 + 2.0 * r) / (h2 + r);
}

FadingDensity intersatellite_fading(const BeamSetup& setup, double z) {
    setup.check();
    if (!(z >= 0.0))
        throw DomainError("intersatellite fading: requires z >= 0");
    const auto diff = diffraction(setup, z);
    const double eta = setup.eta_eff * diff.eta_d.value;
    const double sigma_p = setup.pointing_error * z;
    const double x = 2.0 * setup.aperture * setup.aperture / (diff.w_d * diff.w_d);
    const auto wb = weibull_params(diff.eta_d.value, x, setup.aperture);
    return FadingDensity(eta, wb.gamma_shape, wb.r0, sigma_p);
}

CapacityBound intersatellite_capacity(const BeamSetup& setup, double z) {
    const FadingDensity d = intersatellite_fading(setup, z);
    if (d.sigma == 0.0) return plob(d.eta_max);
    return fading_capacity(d);
}

CapacityBound ChannelModel::capacity() const {
    return thermal_fading_capacity(fading, n_bar);
}

double ChannelModel::expected_transmissivity() const {
    return ::qnetcap::expected_transmissivity(fading);
}

ChannelModel build_channel(const BeamSetup& setup, const AtmosphereModel& atmo,
                           const Trajectory& traj, SkyCondition condition) {
    setup.check();
    ChannelModel ch;
    ch.medium = Medium::FreeSpace;
    ch.trajectory = traj;

    const auto diff = diffraction(setup, traj.z);
    ch.diagnostics.eta_d = diff.eta_d.value;
    ch.diagnostics.w_d = diff.w_d;
    ch.diagnostics.far_field = diff.far_field;
    ch.diagnostics.n_bar_B = background_flux(setup, atmo, traj, condition);
    ch.n_bar = background_photons(setup, atmo, traj, condition);

    if (traj.kind == TrajectoryKind::Intersatellite) {
        const double sp = setup.pointing_error * traj.z;
        ch.diagnostics.sigma_p2 = sp * sp;
        ch.diagnostics.w_st = diff.w_d;
        const double x =
            2.0 * setup.aperture * setup.aperture / (diff.w_d * diff.w_d);
        const auto wb = weibull_params(diff.eta_d.value, x, setup.aperture);
        ch.fading = FadingDensity(setup.eta_eff * diff.eta_d.value,
                                  wb.gamma_shape, wb.r0, sp);
        const double sight =
            line_of_sight_limit(traj.altitude, traj.altitude2);
        if (traj.z > sight)
            ch.warnings.push_back(
                "separation " + std::to_string(traj.z) +
                " m exceeds the line-of-sight limit " +
                std::to_string(sight) + " m");
        return ch;
    }

    ch.diagnostics.eta_atm = extinction(atmo, traj).value;
    const auto turb = turbulence(setup, atmo, traj);
    ch.diagnostics.eta_st = turb.eta_st.value;
    ch.diagnostics.rho0 = turb.rho0;
    ch.diagnostics.phi = turb.phi;
    ch.diagnostics.sigma_t2 = turb.sigma_t2;
    ch.diagnostics.sigma_Ry2 = turb.sigma_Ry2;
    ch.diagnostics.w_st = turb.w_st;
    const double sp = setup.pointing_error * traj.z;
    ch.diagnostics.sigma_p2 = sp * sp;

    if (turb.turbulence_major && turb.phi > 0.1)
        ch.warnings.push_back(
            "short-term spreading parameter phi = " +
            std::to_string(turb.phi) + " is not small against 1");
    if (turb.sigma_Ry2 > 1.0)
        ch.warnings.push_back(
            "Rytov variance " + std::to_string(turb.sigma_Ry2) +
            " exceeds the weak-fluctuation range");

    const double eta =
        setup.eta_eff * ch.diagnostics.eta_atm * turb.eta_st.value;
    const double eta_st_far =
        2.0 * setup.aperture * setup.aperture / (turb.w_st * turb.w_st);
    const auto weibull =
        weibull_params(turb.eta_st.value, eta_st_far, setup.aperture);
    const double sigma2 = wandering_variance(setup, traj, turb);
    ch.fading = FadingDensity(eta, weibull.gamma_shape, weibull.r0,
                              std::sqrt(sigma2));
    return ch;
}

ChannelModel build_fiber_channel(double length_km, double loss_rate_per_km) {
    ChannelModel ch;
    ch.medium = Medium::Fiber;
    ch.trajectory = Trajectory::ground(0.0, length_km * 1000.0);
    const double eta = fiber_transmissivity(length_km, loss_rate_per_km).value;
    ch.fading = FadingDensity(eta, 2.0, 1.0, 0.0);
    return ch;
}

} // namespace qnetcap
