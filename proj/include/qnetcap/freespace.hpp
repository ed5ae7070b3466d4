#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qnetcap/capacity.hpp"
#include "qnetcap/errors.hpp"

namespace qnetcap {

inline constexpr double kEarthRadius = 6.371e6;   // m

// Transmitter/receiver hardware on one free-space link.
struct BeamSetup {
    double wavelength = 800e-9;        // m
    double waist0 = 0.0;               // initial spot size w0 (m)
    double curvature0 =
        std::numeric_limits<double>::infinity();   // R0 (m); inf = collimated
    double aperture = 0.0;             // receiver radius a_R (m)
    double eta_eff = 1.0;              // detector efficiency, in (0, 1]
    double n_ex = 0.0;                 // excess thermal photons per mode
    bool n_ex_trusted = false;         // excess noise attributed to the sender
    double pointing_error = 0.0;       // eps_p (rad): sigma_p = eps_p * z
    double pulse_duration = 10e-9;     // s
    double fov = 1e-10;                // receiver field of view (sr)
    double filter_nm = 1.0;            // spectral filter width (nm)

    double rayleigh_range() const;     // pi w0^2 / lambda
    void check() const;                // throws DomainError on bad fields
};

enum class TrajectoryKind { Ground, Uplink, Downlink, Intersatellite };

// A propagation path.  Ground paths run horizontally at a fixed altitude;
// uplink/downlink paths connect a sea-level station with a satellite along
// the slant line at the given zenith angle; intersatellite paths are straight
// vacuum chords between two orbit altitudes.
struct Trajectory {
    TrajectoryKind kind = TrajectoryKind::Ground;
    double z = 0.0;          // propagation length (m)
    double altitude = 0.0;   // ground altitude, satellite altitude, or h1
    double altitude2 = 0.0;  // second satellite altitude (intersatellite)
    double zenith = 0.0;     // rad (uplink/downlink only)

    static Trajectory ground(double altitude_m, double length_m);
    static Trajectory uplink(double satellite_altitude_m, double zenith_rad);
    static Trajectory downlink(double satellite_altitude_m, double zenith_rad);
    static Trajectory intersatellite(double h1_m, double h2_m,
                                     double separation_m);

    // Altitude of the path point a distance zeta from the transmitter.
    double altitude_at(double zeta) const;
};

enum class SkyCondition { ClearNight, CloudyDay, ClearDay };

const char* to_string(SkyCondition c);
SkyCondition parse_sky_condition(const std::string& name);

// Atmospheric extinction and turbulence profile.
struct AtmosphereModel {
    double alpha0 = 5e-6;      // sea-level extinction (1/m)
    double h_tilde = 6600.0;   // extinction scale height (m)
    double hv_wind = 21.0;     // Hufnagel-Valley wind speed (m/s)
    double hv_a = 1.7e-14;     // Hufnagel-Valley surface term (m^{-2/3})
    std::function<double(double)> cn2_override;   // optional replacement

    double alpha(double h) const;   // extinction coefficient at altitude h
    double cn2(double h) const;     // refractive-index structure constant

    // Sky photon irradiance (photons / m^2 s nm sr) and Earth/Moon albedo
    // factor for uplink background light.
    double irradiance(SkyCondition c) const;
    double albedo(SkyCondition c) const;
    static constexpr double kSunIrradiance = 4.61e18;
};

struct DiffractionResult {
    double w_d = 0.0;          // diffraction-widened spot size (m)
    Transmissivity eta_d{1.0};
    bool far_field = false;    // z > 10 * rayleigh range
};

DiffractionResult diffraction(const BeamSetup& setup, double z);

// Beer-Lambert transmissivity through the atmosphere along the trajectory.
Transmissivity extinction(const AtmosphereModel& atmo, const Trajectory& traj);

struct TurbulenceResult {
    double rho0 = std::numeric_limits<double>::infinity();   // m
    double phi = std::numeric_limits<double>::infinity();    // 0.33(rho0/w0)^{1/3}
    double w_st = 0.0;        // short-term spot size (m)
    double sigma_t2 = 0.0;    // turbulent centroid wandering variance (m^2)
    double sigma_Ry2 = 0.0;   // Rytov variance
    Transmissivity eta_st{1.0};
    bool turbulence_major = false;   // spread term significant vs w_d^2
};

// Turbulence diagnostics for a non-intersatellite path.  Throws
// WeakTurbulenceViolated when the turbulent spread dominates and the
// short-term separation parameter phi exceeds 0.5.
TurbulenceResult turbulence(const BeamSetup& setup, const AtmosphereModel& atmo,
                            const Trajectory& traj);

// Total beam-wandering variance seen by the receiver, per trajectory kind:
// ground combines turbulence and pointing, uplink is turbulence-dominated,
// downlink and intersatellite are pointing-dominated.
double wandering_variance(const BeamSetup& setup, const Trajectory& traj,
                          const TurbulenceResult& turb);

struct WeibullParams {
    double gamma_shape = 2.0;
    double r0 = 0.0;
};

// Shape/scale of the aperture-clipping fading law from the short-term
// transmissivity eta_st and its far-field exponent x = 2 a_R^2 / w_st^2.
WeibullParams weibull_params(double eta_st, double eta_st_far, double a_R);

// Background photons collected by the receiver, before detection (H * Gamma_R
// for downlink/ground, kappa * H_sun * Gamma_R for uplink, 0 in space).
double background_flux(const BeamSetup& setup, const AtmosphereModel& atmo,
                       const Trajectory& traj, SkyCondition condition);

// Total thermal occupation entering the capacity bound:
// eta_eff * n_bar_B plus the excess noise unless it is trusted.
ThermalOccupation background_photons(const BeamSetup& setup,
                                     const AtmosphereModel& atmo,
                                     const Trajectory& traj,
                                     SkyCondition condition);

// Slant geometry between a sea-level station and a satellite at altitude
// h_sat observed at the given zenith angle.
struct SatelliteGeometry {
    double h_sat = 0.0;
    double zenith = 0.0;
    double z_slant = 0.0;
    double altitude_of(double z) const;      // station distance z -> altitude
    double propagation_of(double h) const;   // altitude -> station distance
};

SatelliteGeometry ground_satellite_geometry(double h_sat, double zenith);

// Maximum separation of two satellites before the Earth blocks the chord.
double line_of_sight_limit(double h1, double h2);

// Vacuum link between two satellites: diffraction widening plus Gaussian
// pointing wander, no atmosphere.  The fading law and its capacity bound.
FadingDensity intersatellite_fading(const BeamSetup& setup, double z);
CapacityBound intersatellite_capacity(const BeamSetup& setup, double z);

enum class Medium { Fiber, FreeSpace };

struct ChannelDiagnostics {
    double eta_d = 1.0;
    double eta_atm = 1.0;
    double eta_st = 1.0;
    double rho0 = std::numeric_limits<double>::infinity();
    double phi = std::numeric_limits<double>::infinity();
    double sigma_t2 = 0.0;
    double sigma_p2 = 0.0;
    double sigma_Ry2 = 0.0;
    double w_d = 0.0;
    double w_st = 0.0;
    double n_bar_B = 0.0;
    bool far_field = false;
};

// One network edge: the fading law, thermal occupation and the full
// diagnostic trail of how they were obtained.
struct ChannelModel {
    Medium medium = Medium::FreeSpace;
    Trajectory trajectory;
    FadingDensity fading{0.0, 2.0, 1.0, 0.0};
    ThermalOccupation n_bar{0.0};
    ChannelDiagnostics diagnostics;
    std::vector<std::string> warnings;

    CapacityBound capacity() const;
    double expected_transmissivity() const;
};

ChannelModel build_channel(const BeamSetup& setup, const AtmosphereModel& atmo,
                           const Trajectory& traj, SkyCondition condition);

ChannelModel build_fiber_channel(double length_km,
                                 double loss_rate_per_km = 0.02);

} // namespace qnetcap
