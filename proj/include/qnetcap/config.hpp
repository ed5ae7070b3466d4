#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qnetcap/freespace.hpp"

namespace qnetcap {

// A named operational scenario: hardware, atmosphere, sky condition and the
// link-planning context that the paper's tables attach to it.
struct Preset {
    std::string name;
    BeamSetup setup;
    AtmosphereModel atmo;
    SkyCondition condition = SkyCondition::ClearNight;
    double ground_altitude = 0.0;     // station altitude for ground links (m)
    double fiber_loss_per_km = 0.02;  // dB-equivalent decade loss rate
    std::string intercommunity;       // "downlink" or "ground"
    double h_max = 1.5e6;             // maximum satellite altitude (m)
};

// Look up a bundled preset; throws ConfigError for unknown names.
const Preset& preset(const std::string& name);
std::vector<std::string> preset_names();

// Strict JSON (de)serialization: unknown keys are a hard ConfigError, so a
// typo never silently falls back to a default.
nlohmann::json setup_to_json(const BeamSetup& s);
BeamSetup setup_from_json(const nlohmann::json& j, const BeamSetup& base);
nlohmann::json atmosphere_to_json(const AtmosphereModel& a);
AtmosphereModel atmosphere_from_json(const nlohmann::json& j,
                                     const AtmosphereModel& base);

// Build a ChannelModel from an edge-level JSON spec:
//   {"medium":"fiber","length_km":...,"loss_per_km":...}
//   {"medium":"freespace","preset":...,"setup":{...},"atmosphere":{...},
//    "condition":...,"trajectory":{"kind":...,...}}
ChannelModel channel_from_json(const nlohmann::json& j);

// Apply one "dotted.path=value" override to a JSON document, creating
// intermediate objects as needed.  The value is parsed as JSON when possible
// and kept as a string otherwise.
void apply_dotted_override(nlohmann::json& j, const std::string& assignment);

// Parse a length that may carry an "m" or "km" suffix into meters.
double parse_length_m(const std::string& text);

} // namespace qnetcap
