#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qnetcap/capacity.hpp"
#include "qnetcap/freespace.hpp"
#include "oracles.hpp"

using namespace qnetcap;

namespace {

BeamSetup table2_setup() {
    BeamSetup s;
    s.wavelength = 800e-9;
    s.waist0 = 0.05;
    s.aperture = 0.05;
    s.eta_eff = 0.5;
    s.n_ex = 0.05;
    s.n_ex_trusted = true;
    s.pointing_error = 0.0;
    s.pulse_duration = 1e-8;
    s.fov = 1e-10;
    s.filter_nm = 1.0;
    return s;
}

AtmosphereModel table2_atmosphere() {
    AtmosphereModel a;
    a.hv_a = 2.75e-14;   // daytime surface turbulence for the ground scenario
    return a;
}

BeamSetup setup1() {
    BeamSetup s;
    s.wavelength = 800e-9;
    s.waist0 = 0.40;
    s.aperture = 1.0;
    s.eta_eff = 0.4;
    s.n_ex = 0.0;
    s.pointing_error = 1e-6;
    s.pulse_duration = 1e-8;
    s.fov = 1e-10;
    s.filter_nm = 1e-4;
    return s;
}

} // namespace

TEST_CASE("slant geometry inverts itself and hits the zenith limit") {
    auto g = ground_satellite_geometry(530e3, 0.0);
    CHECK(g.z_slant == doctest::Approx(530e3).epsilon(1e-12));

    for (double h : {10e3, 200e3, 530e3, 1500e3}) {
        for (double th : {0.0, 0.3, 0.7, 1.0, 1.4}) {
            auto geom = ground_satellite_geometry(h, th);
            const double z = geom.z_slant;
            CHECK(geom.altitude_of(z) == doctest::Approx(h).epsilon(1e-9));
            CHECK(geom.propagation_of(geom.altitude_of(0.37 * z)) ==
                  doctest::Approx(0.37 * z).epsilon(1e-9));
        }
    }

    // against the raw textbook expression at a mid-range point
    const double h = 530e3, th = 1.0, r = kEarthRadius;
    const double direct =
        std::sqrt(h * h + 2 * h * r + r * r * std::cos(th) * std::cos(th)) -
        r * std::cos(th);
    CHECK(ground_satellite_geometry(h, th).z_slant ==
          doctest::Approx(direct).epsilon(1e-12));

    CHECK_THROWS_AS(ground_satellite_geometry(5e5, 1.6), DomainError);
    CHECK_THROWS_AS(Trajectory::uplink(5e5, 1.2), DomainError);
    CHECK_THROWS_AS(Trajectory::ground(-1.0, 10.0), DomainError);
}

TEST_CASE("line-of-sight limit anchors and monotonicity") {
    CHECK(std::abs(line_of_sight_limit(1.5e6, 1.5e6) - 5428e3) < 1e3);
    CHECK(line_of_sight_limit(0.0, 0.0) == 0.0);
    CHECK(line_of_sight_limit(1.5e6, 0.0) ==
          doctest::Approx(0.5 * line_of_sight_limit(1.5e6, 1.5e6)));
    CHECK(line_of_sight_limit(3e5, 8e5) ==
          doctest::Approx(line_of_sight_limit(8e5, 3e5)));
    double prev = 0.0;
    for (double h : {1e4, 1e5, 5e5, 2e6}) {
        const double cur = line_of_sight_limit(h, 4e5);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("diffraction widening anchors") {
    auto s = setup1();
    auto at0 = diffraction(s, 0.0);
    CHECK(at0.w_d == doctest::Approx(s.waist0).epsilon(1e-15));
    CHECK(at0.eta_d.value ==
          doctest::Approx(-std::expm1(-2.0 / (0.4 * 0.4))).epsilon(1e-15));
    CHECK_FALSE(at0.far_field);

    const double zr = s.rayleigh_range();
    CHECK(zr == doctest::Approx(std::numbers::pi * 0.16 / 800e-9));
    CHECK(diffraction(s, zr).w_d ==
          doctest::Approx(std::numbers::sqrt2 * s.waist0).epsilon(1e-12));

    CHECK(diffraction(s, 10.0 * zr + 1.0).far_field);
    CHECK_FALSE(diffraction(s, 10.0 * zr - 1.0).far_field);

    // deep in the far field the exponential clipping linearizes
    auto far = diffraction(s, 3e7);
    const double approx = 2.0 * s.aperture * s.aperture / (far.w_d * far.w_d);
    CHECK(far.eta_d.value == doctest::Approx(approx).epsilon(1e-2));

    // a focused beam (finite curvature) narrows before it widens
    BeamSetup focused = s;
    focused.curvature0 = 2.0 * zr;
    CHECK(diffraction(focused, zr).w_d < diffraction(s, zr).w_d);
    CHECK(diffraction(focused, 0.0).w_d == doctest::Approx(s.waist0));
}

TEST_CASE("extinction closed forms and symmetry") {
    AtmosphereModel atmo;
    const double ground_direct =
        std::exp(-5e-6 * std::exp(-30.0 / 6600.0) * 1000.0);
    CHECK(extinction(atmo, Trajectory::ground(30, 1000)).value ==
          doctest::Approx(ground_direct).epsilon(1e-12));
    CHECK(ground_direct == doctest::Approx(0.99503).epsilon(1e-4));

    // vertical paths integrate the exponential profile exactly
    for (double h : {5e3, 2e4, 3e5}) {
        const double analytic =
            std::exp(-5e-6 * 6600.0 * -std::expm1(-h / 6600.0));
        CHECK(extinction(atmo, Trajectory::uplink(h, 0.0)).value ==
              doctest::Approx(analytic).epsilon(1e-9));
    }

    // direction does not matter; slant paths lose more than vertical ones
    auto up = extinction(atmo, Trajectory::uplink(530e3, 0.9));
    auto down = extinction(atmo, Trajectory::downlink(530e3, 0.9));
    CHECK(up.value == doctest::Approx(down.value).epsilon(1e-10));
    CHECK(up.value < extinction(atmo, Trajectory::uplink(530e3, 0.0)).value);

    CHECK(extinction(atmo, Trajectory::intersatellite(4e5, 4e5, 2e6)).value ==
          1.0);
}

TEST_CASE("turbulence vanishes in clean air and keeps the spot budget") {
    auto s = table2_setup();
    AtmosphereModel clean;
    clean.cn2_override = [](double) { return 0.0; };
    auto t = turbulence(s, clean, Trajectory::ground(30, 1000));
    CHECK(std::isinf(t.rho0));
    CHECK(t.sigma_t2 == 0.0);
    CHECK(t.w_st == diffraction(s, 1000).w_d);
    CHECK(t.sigma_Ry2 == 0.0);

    // w_st^2 + sigma_t^2 == w_d^2 + spread for every evaluated path
    auto atmo = table2_atmosphere();
    for (double z : {200.0, 500.0, 1000.0}) {
        auto tr = turbulence(s, atmo, Trajectory::ground(30, z));
        const double wd = diffraction(s, z).w_d;
        const double spread =
            2.0 * std::pow(s.wavelength * z / (std::numbers::pi * tr.rho0), 2);
        CHECK(tr.w_st * tr.w_st + tr.sigma_t2 ==
              doctest::Approx(wd * wd + spread).epsilon(1e-12));
        CHECK(tr.w_st >= wd);
    }
}

TEST_CASE("weak-turbulence window matches the published ground limit") {
    auto t = turbulence(table2_setup(), table2_atmosphere(),
                        Trajectory::ground(30, 1066));
    CHECK(t.sigma_Ry2 > 0.8);
    CHECK(t.sigma_Ry2 < 1.2);

    // the same path one decade longer is far beyond the weak regime
    auto far = turbulence(table2_setup(), table2_atmosphere(),
                          Trajectory::ground(30, 10660));
    CHECK(far.sigma_Ry2 > 10.0);
}

TEST_CASE("strong short-term spreading raises the graded error") {
    BeamSetup s;
    s.wavelength = 800e-9;
    s.waist0 = 0.01;
    s.aperture = 0.05;
    AtmosphereModel a;
    a.cn2_override = [](double) { return 6.33e-16; };
    // rho0 ~ 4 waist radii -> phi just above 0.5 with a dominant spread term
    CHECK_THROWS_AS(turbulence(s, a, Trajectory::ground(30, 1e4)),
                    WeakTurbulenceViolated);
    // milder turbulence on the same geometry only warns downstream
    a.cn2_override = [](double) { return 2e-14; };
    auto t = turbulence(s, a, Trajectory::ground(30, 1e4));
    CHECK(t.turbulence_major);
    CHECK(t.phi > 0.1);
    CHECK(t.phi < 0.5);
}

TEST_CASE("up- and downlink turbulence asymmetry") {
    auto s = setup1();
    AtmosphereModel atmo;
    auto down = turbulence(s, atmo, Trajectory::downlink(530e3, 0.0));
    auto up = turbulence(s, atmo, Trajectory::uplink(530e3, 0.0));
    CHECK(down.sigma_t2 < 1e-2 * up.sigma_t2);
    CHECK(down.sigma_Ry2 < up.sigma_Ry2);
    CHECK(down.eta_st.value > up.eta_st.value);
    CHECK(up.turbulence_major);
    CHECK_FALSE(down.turbulence_major);
}

TEST_CASE("wandering variance dispatches on the trajectory kind") {
    BeamSetup s = setup1();
    TurbulenceResult turb;
    turb.sigma_t2 = 0.7;
    CHECK(wandering_variance(s, Trajectory::ground(0, 1e6), turb) ==
          doctest::Approx(0.7 + 1.0));
    CHECK(wandering_variance(s, Trajectory::uplink(1e6, 0.0), turb) ==
          doctest::Approx(0.7));
    const double z_down = Trajectory::downlink(1e6, 0.0).z;
    CHECK(wandering_variance(s, Trajectory::downlink(1e6, 0.0), turb) ==
          doctest::Approx(std::pow(1e-6 * z_down, 2)));
    CHECK(wandering_variance(s, Trajectory::intersatellite(4e5, 4e5, 1e6),
                             turb) == doctest::Approx(1.0));
}

TEST_CASE("weibull parameters: far-field limit, continuity, positivity") {
    // tiny clipping exponent: exactly the Gaussian far-field law
    auto wp = weibull_params(-std::expm1(-1e-6), 1e-6, 1.0);
    CHECK(wp.gamma_shape == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(wp.r0 == doctest::Approx(1000.0).epsilon(1e-5));

    // series/direct switchover leaves no seam
    for (double x : {2.999e-3, 3.001e-3}) {
        auto a = weibull_params(-std::expm1(-x), x, 0.3);
        CHECK(a.gamma_shape == doctest::Approx(2.0).epsilon(1e-4));
    }
    auto lo = weibull_params(-std::expm1(-2.9999e-3), 2.9999e-3, 0.3);
    auto hi = weibull_params(-std::expm1(-3.0001e-3), 3.0001e-3, 0.3);
    CHECK(lo.gamma_shape == doctest::Approx(hi.gamma_shape).epsilon(1e-7));
    CHECK(lo.r0 == doctest::Approx(hi.r0).epsilon(1e-4));

    for (double x = 1e-8; x < 20.0; x *= 3.7) {
        auto p = weibull_params(-std::expm1(-x), x, 0.05);
        CHECK(p.gamma_shape > 0.0);
        CHECK(p.r0 > 0.0);
        CHECK(std::isfinite(p.gamma_shape));
    }

    // mismatched, too-small transmissivity degenerates
    CHECK_THROWS_AS(weibull_params(0.3, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(weibull_params(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("background photon arithmetic") {
    auto s = table2_setup();
    auto a = table2_atmosphere();
    auto ground = Trajectory::ground(30, 500);
    // Gamma_R = 1e-8 * 1 * 1e-10 * 0.0025 = 2.5e-21
    CHECK(background_flux(s, a, ground, SkyCondition::CloudyDay) ==
          doctest::Approx(1.9e18 * 2.5e-21).epsilon(1e-12));
    CHECK(background_flux(s, a, ground, SkyCondition::ClearDay) ==
          background_flux(s, a, ground, SkyCondition::CloudyDay));
    CHECK(background_flux(s, a, ground, SkyCondition::ClearNight) ==
          doctest::Approx(1.9e13 * 2.5e-21).epsilon(1e-12));

    // trusted excess noise stays out of the bound
    CHECK(background_photons(s, a, ground, SkyCondition::CloudyDay).n_bar ==
          doctest::Approx(0.5 * 4.75e-3).epsilon(1e-12));
    auto untrusted = s;
    untrusted.n_ex_trusted = false;
    CHECK(background_photons(untrusted, a, ground, SkyCondition::CloudyDay)
              .n_bar ==
          doctest::Approx(0.5 * 4.75e-3 + 0.05).epsilon(1e-12));

    // uplink reflects sunlight through the albedo factor
    auto s1 = setup1();
    auto up = Trajectory::uplink(530e3, 0.0);
    const double gamma_r = 1e-8 * 1e-4 * 1e-10 * 1.0;
    CHECK(background_flux(s1, a, up, SkyCondition::ClearDay) ==
          doctest::Approx(0.3 * 4.61e18 * gamma_r).epsilon(1e-12));
    CHECK(background_flux(s1, a, up, SkyCondition::ClearNight) ==
          doctest::Approx(7.36e-7 * 4.61e18 * gamma_r).epsilon(1e-12));

    // vacuum links carry only the excess noise
    auto isl = Trajectory::intersatellite(4e5, 4e5, 1e6);
    CHECK(background_flux(s1, a, isl, SkyCondition::ClearDay) == 0.0);
    CHECK(background_photons(untrusted, a, isl, SkyCondition::ClearDay)
              .n_bar == doctest::Approx(0.05));
}

TEST_CASE("intersatellite capacity reduces to the diffraction form") {
    auto s = setup1();
    s.eta_eff = 1.0;
    s.pointing_error = 0.0;
    for (double z : {5e5, 2e6, 1e7}) {
        const auto d = diffraction(s, z);
        CHECK(intersatellite_capacity(s, z).value ==
              doctest::Approx(2.0 / (d.w_d * d.w_d * std::numbers::ln2))
                  .epsilon(1e-12));
    }

    auto sp = setup1();
    sp.pointing_error = 0.0;
    auto wobble = setup1();
    wobble.pointing_error = 1e-12;
    CHECK(intersatellite_capacity(wobble, 2e6).value ==
          doctest::Approx(intersatellite_capacity(sp, 2e6).value)
              .epsilon(1e-6));

    auto real = setup1();   // eps_p = 1e-6
    const double with_wander = intersatellite_capacity(real, 2e6).value;
    CHECK(with_wander > 0.0);
    CHECK(with_wander < intersatellite_capacity(sp, 2e6).value);
}

TEST_CASE("built ground channel matches the Monte Carlo oracle") {
    auto ch = build_channel(table2_setup(), table2_atmosphere(),
                            Trajectory::ground(30, 500), SkyCondition::ClearDay);
    auto mc = oracles::mc_fading_capacity(ch.fading, 200000, 777);
    const double quad = fading_capacity(ch.fading).value;
    CHECK(std::abs(quad - mc.mean) < 3.0 * mc.std_err);
    CHECK(std::abs(quad - mc.mean) < 0.01 * quad);
}

TEST_CASE("built channels keep their invariants") {
    auto s = table2_setup();
    auto a = table2_atmosphere();
    double prev = 1e300;
    for (double z : {100.0, 200.0, 500.0, 700.0, 1000.0}) {
        auto ch = build_channel(s, a, Trajectory::ground(30, z),
                                SkyCondition::ClearDay);
        CHECK(ch.fading.eta_max <= s.eta_eff);
        CHECK(ch.diagnostics.eta_atm <= 1.0);
        CHECK(ch.diagnostics.eta_st <= 1.0);
        CHECK(ch.diagnostics.w_d <= ch.diagnostics.w_st + 1e-15);
        CHECK(ch.expected_transmissivity() <= ch.fading.eta_max);
        const double cap = ch.capacity().value;
        CHECK(cap < prev);
        prev = cap;
        CHECK(fading_density_mass(ch.fading) ==
              doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("downlink beats uplink across the elevation grid") {
    auto s = setup1();
    AtmosphereModel atmo;
    for (double h : {3e5, 5.3e5}) {
        for (double th : {0.0, 0.7, 1.0}) {
            auto down = build_channel(s, atmo, Trajectory::downlink(h, th),
                                      SkyCondition::ClearNight);
            auto up = build_channel(s, atmo, Trajectory::uplink(h, th),
                                    SkyCondition::ClearNight);
            CHECK(down.capacity().value > up.capacity().value);
        }
    }
}

TEST_CASE("fiber channels bypass the optics entirely") {
    auto ch = build_fiber_channel(50.0);
    CHECK(ch.medium == Medium::Fiber);
    CHECK(ch.fading.eta_max == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(ch.fading.sigma == 0.0);
    CHECK(ch.capacity().value ==
          doctest::Approx(plob(0.1).value).epsilon(1e-12));
    CHECK(ch.diagnostics.eta_st == 1.0);

    // zero length means a perfect channel: unbounded capacity, flagged as such
    auto ideal = build_fiber_channel(0.0);
    CHECK(ideal.capacity().unbounded);
}

TEST_CASE("intersatellite channel warns past the horizon chord") {
    auto s = setup1();
    AtmosphereModel atmo;
    const double sight = line_of_sight_limit(4e5, 4e5);
    auto ok = build_channel(s, atmo,
                            Trajectory::intersatellite(4e5, 4e5, 0.9 * sight),
                            SkyCondition::ClearNight);
    CHECK(ok.warnings.empty());
    auto blocked = build_channel(
        s, atmo, Trajectory::intersatellite(4e5, 4e5, 1.1 * sight),
        SkyCondition::ClearNight);
    REQUIRE(blocked.warnings.size() == 1);
    CHECK(blocked.warnings[0].find("line-of-sight") != std::string::npos);
}
