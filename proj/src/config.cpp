#include "qnetcap/config.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "json_util.hpp"
#include "qnetcap/errors.hpp"

namespace qnetcap {

namespace {

using nlohmann::json;
using detail::check_keys;
using detail::get_number;

void maybe_number(const json& j, const char* key, double& out,
                  const std::string& where) {
    if (j.contains(key)) out = get_number(j, key, where);
}

void maybe_bool(const json& j, const char* key, bool& out,
                const std::string& where) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_boolean())
        throw ConfigError(where + ": \"" + key + "\" must be a boolean");
    out = v.get<bool>();
}

std::map<std::string, Preset> make_presets() {
    std::map<std::string, Preset> table;

    BeamSetup common;
    common.wavelength = 800e-9;
    common.eta_eff = 0.4;
    common.n_ex = 0.0;
    common.pointing_error = 1e-6;
    common.pulse_duration = 10e-9;
    common.fov = 1e-10;

    Preset s1;
    s1.name = "table1-setup1";
    s1.setup = common;
    s1.setup.waist0 = 0.4;
    s1.setup.aperture = 1.0;
    s1.setup.filter_nm = 1e-4;
    s1.condition = SkyCondition::ClearDay;
    s1.intercommunity = "downlink";
    table[s1.name] = s1;

    Preset s2 = s1;
    s2.name = "table1-setup2";
    s2.setup.waist0 = 0.2;
    s2.setup.aperture = 0.4;
    s2.setup.filter_nm = 1.0;
    s2.condition = SkyCondition::ClearNight;
    table[s2.name] = s2;

    Preset t2;
    t2.name = "table2";
    t2.setup.wavelength = 800e-9;
    t2.setup.waist0 = 0.05;
    t2.setup.aperture = 0.05;
    t2.setup.eta_eff = 0.5;
    t2.setup.n_ex = 0.05;
    t2.setup.n_ex_trusted = true;
    t2.setup.pointing_error = 1e-6;
    t2.setup.pulse_duration = 10e-9;
    t2.setup.fov = 1e-10;
    t2.setup.filter_nm = 1.0;
    t2.atmo.hv_a = 2.75e-14;     // day-time surface turbulence
    t2.condition = SkyCondition::ClearDay;
    t2.ground_altitude = 30.0;
    t2.intercommunity = "ground";
    table[t2.name] = t2;

    return table;
}

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset> table = make_presets();
    return table;
}

Trajectory trajectory_from_json(const json& j) {
    static const std::string where = "trajectory";
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError(where + ": expected an object with a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ground") {
        check_keys(j, {"kind", "altitude", "length"}, where);
        return Trajectory::ground(get_number(j, "altitude", where),
                                  get_number(j, "length", where));
    }
    if (kind == "uplink" || kind == "downlink") {
        check_keys(j, {"kind", "h_sat", "zenith"}, where);
        const double h = get_number(j, "h_sat", where);
        const double th = get_number(j, "zenith", where);
        return kind == "uplink" ? Trajectory::uplink(h, th)
                                : Trajectory::downlink(h, th);
    }
    if (kind == "intersatellite") {
        check_keys(j, {"kind", "h1", "h2", "separation"}, where);
        return Trajectory::intersatellite(get_number(j, "h1", where),
                                          get_number(j, "h2", where),
                                          get_number(j, "separation", where));
    }
    throw ConfigError(where + ": unknown kind \"" + kind + "\"");
}

} // namespace

const Preset& preset(const std::string& name) {
    const auto& table = presets();
    auto it = table.find(name);
    if (it == table.end())
        throw ConfigError("unknown preset \"" + name + "\"");
    return it->second;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, p] : presets()) names.push_back(name);
    return names;
}

nlohmann::json setup_to_json(const BeamSetup& s) {
    json j{{"wavelength", s.wavelength},
           {"waist0", s.waist0},
           {"aperture", s.aperture},
           {"eta_eff", s.eta_eff},
           {"n_ex", s.n_ex},
           {"n_ex_trusted", s.n_ex_trusted},
           {"pointing_error", s.pointing_error},
           {"pulse_duration", s.pulse_duration},
           {"fov", s.fov},
           {"filter_nm", s.filter_nm}};
    if (std::isfinite(s.curvature0)) j["curvature0"] = s.curvature0;
    return j;
}

BeamSetup setup_from_json(const nlohmann::json& j, const BeamSetup& base) {
    static const std::string where = "setup";
    check_keys(j,
               {"wavelength", "waist0", "curvature0", "aperture", "eta_eff",
                "n_ex", "n_ex_trusted", "pointing_error", "pulse_duration",
                "fov", "filter_nm"},
               where);
    BeamSetup s = base;
    maybe_number(j, "wavelength", s.wavelength, where);
    maybe_number(j, "waist0", s.waist0, where);
    maybe_number(j, "curvature0", s.curvature0, where);
    maybe_number(j, "aperture", s.aperture, where);
    maybe_number(j, "eta_eff", s.eta_eff, where);
    maybe_number(j, "n_ex", s.n_ex, where);
    maybe_bool(j, "n_ex_trusted", s.n_ex_trusted, where);
    maybe_number(j, "pointing_error", s.pointing_error, where);
    maybe_number(j, "pulse_duration", s.pulse_duration, where);
    maybe_number(j, "fov", s.fov, where);
    maybe_number(j, "filter_nm", s.filter_nm, where);
    return s;
}

nlohmann::json atmosphere_to_json(const AtmosphereModel& a) {
    return json{{"alpha0", a.alpha0},
                {"h_tilde", a.h_tilde},
                {"hv_wind", a.hv_wind},
                {"hv_a", a.hv_a}};
}

AtmosphereModel atmosphere_from_json(const nlohmann::json& j,
                                     const AtmosphereModel& base) {
    static const std::string where = "atmosphere";
    check_keys(j, {"alpha0", "h_tilde", "hv_wind", "hv_a"}, where);
    AtmosphereModel a = base;
    maybe_number(j, "alpha0", a.alpha0, where);
    maybe_number(j, "h_tilde", a.h_tilde, where);
    maybe_number(j, "hv_wind", a.hv_wind, where);
    maybe_number(j, "hv_a", a.hv_a, where);
    return a;
}

ChannelModel channel_from_json(const nlohmann::json& j) {
    static const std::string where = "channel";
    if (!j.is_object() || !j.contains("medium"))
        throw ConfigError(where + ": expected an object with a \"medium\"");
    const std::string medium = j.at("medium").get<std::string>();
    if (medium == "fiber") {
        check_keys(j, {"medium", "length_km", "loss_per_km"}, where);
        if (!j.contains("length_km"))
            throw ConfigError(where + ": fiber requires \"length_km\"");
        double loss = 0.02;
        maybe_number(j, "loss_per_km", loss, where);
        return build_fiber_channel(get_number(j, "length_km", where), loss);
    }
    if (medium != "freespace")
        throw ConfigError(where + ": unknown medium \"" + medium + "\"");

    check_keys(j,
               {"medium", "preset", "setup", "atmosphere", "condition",
                "trajectory"},
               where);
    BeamSetup setup;
    AtmosphereModel atmo;
    SkyCondition condition = SkyCondition::ClearNight;
    if (j.contains("preset")) {
        const Preset& p = preset(j.at("preset").get<std::string>());
        setup = p.setup;
        atmo = p.atmo;
        condition = p.condition;
    }
    if (j.contains("setup")) setup = setup_from_json(j.at("setup"), setup);
    if (j.contains("atmosphere"))
        atmo = atmosphere_from_json(j.at("atmosphere"), atmo);
    if (j.contains("condition"))
        condition = parse_sky_condition(j.at("condition").get<std::string>());
    if (!j.contains("trajectory"))
        throw ConfigError(where + ": freespace requires a \"trajectory\"");
    return build_channel(setup, atmo, trajectory_from_json(j.at("trajectory")),
                         condition);
}

void apply_dotted_override(nlohmann::json& j, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must look like key.path=value: \"" +
                          assignment + "\"");
    const std::string path = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);

    json* node = &j;
    std::istringstream keys(path);
    std::string key;
    std::vector<std::string> parts;
    while (std::getline(keys, key, '.')) {
        if (key.empty())
            throw ConfigError("empty key segment in override \"" + path + "\"");
        parts.push_back(key);
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->contains(parts[i])) (*node)[parts[i]] = json::object();
        node = &(*node)[parts[i]];
        if (!node->is_object())
            throw ConfigError("override path \"" + path +
                              "\" descends into a non-object");
    }
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;   // keep unparseable values as text
    (*node)[parts.back()] = value;
}

double parse_length_m(const std::string& text) {
    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse length \"" + text + "\"");
    }
    std::string unit = text.substr(pos);
    while (!unit.empty() && unit.front() == ' ') unit.erase(unit.begin());
    if (unit.empty() || unit == "m") return value;
    if (unit == "km") return value * 1000.0;
    throw ConfigError("unknown length unit \"" + unit + "\" in \"" + text +
                      "\"");
}

} // namespace qnetcap
