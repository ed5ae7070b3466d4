// qnetcap — capacities of hybrid quantum networks from the command line.
//
//   channel   point-to-point capacity of one physical link
//   network   end-to-end capacity of a capacitated graph (JSON)
//   modular   threshold report for a modular network, or random trials
//   sweep     constraint-curve CSV tables (figure presets or custom config)
//   presets   bundled hardware/atmosphere scenarios
//
// Exit codes: 0 success, 2 configuration error, 3 physics-domain error,
// 4 unknown node id, 1 unexpected internal failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnetcap/capacity.hpp"
#include "qnetcap/config.hpp"
#include "qnetcap/errors.hpp"
#include "qnetcap/freespace.hpp"
#include "qnetcap/modular.hpp"
#include "qnetcap/network.hpp"
#include "qnetcap/planner.hpp"

namespace {

using nlohmann::json;
using namespace qnetcap;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

const char* kind_label(CapacityKind k) {
    return k == CapacityKind::ExactAchievable ? "achievable" : "upper-bound";
}

// Lengths cross the CLI boundary as strings so they can carry m|km suffixes.
double nonneg_length(const std::string& text, const char* what) {
    const double v = parse_length_m(text);
    if (!(v >= 0.0))
        throw ConfigError(std::string(what) +
                          " must be a nonnegative length, got \"" + text +
                          "\"");
    return v;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* where) {
    if (!j.is_object())
        throw ConfigError(std::string(where) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw ConfigError(std::string(where) + ": unknown key \"" +
                              it.key() + "\"");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open \"" + path + "\"");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ConfigError("malformed JSON in \"" + path + "\": " + e.what());
    }
}

json preset_to_json(const Preset& p) {
    return json{{"name", p.name},
                {"setup", setup_to_json(p.setup)},
                {"atmosphere", atmosphere_to_json(p.atmo)},
                {"condition", to_string(p.condition)},
                {"ground_altitude", p.ground_altitude},
                {"fiber_loss_per_km", p.fiber_loss_per_km},
                {"intercommunity", p.intercommunity},
                {"h_max", p.h_max}};
}

// Owned file stream, or null meaning std::cout.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
    if (path.empty()) return nullptr;
    auto out = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*out) throw ConfigError("cannot write \"" + path + "\"");
    return out;
}

// ---------------------------------------------------------------- channel

struct ChannelArgs {
    std::string preset_name = "table2";
    std::string kind;
    std::string z;
    std::string h = "1500km";
    std::string h1 = "1500km";
    std::string h2 = "1500km";
    std::string altitude;            // empty: preset ground altitude
    double zenith = 0.0;
    double loss_per_km = -1.0;       // < 0: preset fiber loss
    std::vector<std::string> overrides;
    bool as_json = false;
};

Preset preset_with_overrides(const std::string& name,
                             const std::vector<std::string>& overrides) {
    const Preset& base = preset(name);
    if (overrides.empty()) return base;
    json doc = preset_to_json(base);
    for (const std::string& ov : overrides) apply_dotted_override(doc, ov);
    check_keys(doc,
               {"name", "setup", "atmosphere", "condition", "ground_altitude",
                "fiber_loss_per_km", "intercommunity", "h_max"},
               "channel");
    Preset p = base;
    p.setup = setup_from_json(doc.at("setup"), base.setup);
    p.atmo = atmosphere_from_json(doc.at("atmosphere"), base.atmo);
    p.condition = parse_sky_condition(doc.at("condition").get<std::string>());
    if (!doc.at("ground_altitude").is_number())
        throw ConfigError("channel: ground_altitude must be a number");
    p.ground_altitude = doc.at("ground_altitude").get<double>();
    if (!doc.at("fiber_loss_per_km").is_number())
        throw ConfigError("channel: fiber_loss_per_km must be a number");
    p.fiber_loss_per_km = doc.at("fiber_loss_per_km").get<double>();
    return p;
}

void require_z(const ChannelArgs& a) {
    if (a.z.empty())
        throw ConfigError("channel: --z is required for --kind " + a.kind);
}

int run_channel(const ChannelArgs& a) {
    const Preset p = preset_with_overrides(a.preset_name, a.overrides);
    json out{{"preset", a.preset_name}, {"kind", a.kind}};
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, std::string>> lines;
    CapacityBound cap;

    std::optional<ChannelModel> ch;
    if (a.kind == "ground") {
        require_z(a);
        const double z = nonneg_length(a.z, "--z");
        const double alt = a.altitude.empty()
                               ? p.ground_altitude
                               : nonneg_length(a.altitude, "--altitude");
        ch = build_channel(p.setup, p.atmo, Trajectory::ground(alt, z),
                           p.condition);
        out["z_m"] = z;
        out["altitude_m"] = alt;
        lines.emplace_back("path", num(z) + " m at altitude " + num(alt) +
                                       " m");
    } else if (a.kind == "uplink" || a.kind == "downlink") {
        const double h = nonneg_length(a.h, "--h-sat");
        if (!(a.zenith >= 0.0 && a.zenith < 1.5707963267948966))
            throw ConfigError("channel: --zenith must lie in [0, pi/2) rad");
        const Trajectory traj = a.kind == "uplink"
                                    ? Trajectory::uplink(h, a.zenith)
                                    : Trajectory::downlink(h, a.zenith);
        ch = build_channel(p.setup, p.atmo, traj, p.condition);
        out["h_m"] = h;
        out["zenith_rad"] = a.zenith;
        lines.emplace_back("path", "satellite at " + num(h) +
                                       " m, zenith " + num(a.zenith) +
                                       " rad");
    } else if (a.kind == "intersat") {
        require_z(a);
        const double z = nonneg_length(a.z, "--z");
        const double h1 = nonneg_length(a.h1, "--h1");
        const double h2 = nonneg_length(a.h2, "--h2");
        const FadingDensity fad = intersatellite_fading(p.setup, z);
        cap = intersatellite_capacity(p.setup, z);
        const double sight = line_of_sight_limit(h1, h2);
        const bool feasible = z <= sight;
        out["z_m"] = z;
        out["sight_limit_m"] = sight;
        out["feasible"] = feasible;
        out["eta_best"] = fad.eta_max;
        out["eta_avg"] = expected_transmissivity(fad);
        out["sigma_m"] = fad.sigma;
        out["n_bar"] = 0.0;
        lines.emplace_back("path", num(z) + " m between satellites at " +
                                       num(h1) + " m and " + num(h2) + " m");
        lines.emplace_back("eta_best", num(fad.eta_max));
        lines.emplace_back("eta_avg", num(expected_transmissivity(fad)));
        lines.emplace_back("pointing sigma", num(fad.sigma) + " m");
        lines.emplace_back("sight limit", num(sight) + " m");
        if (!feasible)
            warnings.push_back("separation " + num(z / 1000.0) +
                               " km exceeds the line-of-sight limit " +
                               num(sight / 1000.0) +
                               " km for these altitudes; the link is blocked "
                               "by the Earth");
    } else if (a.kind == "fiber") {
        require_z(a);
        const double z = nonneg_length(a.z, "--z");
        const double loss =
            a.loss_per_km < 0.0 ? p.fiber_loss_per_km : a.loss_per_km;
        ch = build_fiber_channel(z / 1000.0, loss);
        out["z_m"] = z;
        out["loss_per_km"] = loss;
        lines.emplace_back("path", num(z / 1000.0) + " km of fiber, loss " +
                                       num(loss) + " per km");
    } else {
        throw ConfigError("channel: unknown --kind \"" + a.kind +
                          "\" (ground|uplink|downlink|intersat|fiber)");
    }

    if (ch) {
        cap = ch->capacity();
        const ChannelDiagnostics& d = ch->diagnostics;
        for (const std::string& w : ch->warnings) warnings.push_back(w);
        out["eta_best"] = ch->fading.eta_max;
        out["eta_avg"] = ch->expected_transmissivity();
        out["sigma_m"] = ch->fading.sigma;
        out["n_bar"] = static_cast<double>(ch->n_bar);
        lines.emplace_back("eta_best", num(ch->fading.eta_max));
        lines.emplace_back("eta_avg", num(ch->expected_transmissivity()));
        lines.emplace_back("sigma", num(ch->fading.sigma) + " m");
        lines.emplace_back("n_bar", num(ch->n_bar));
        if (ch->medium == Medium::FreeSpace) {
            out["diagnostics"] =
                json{{"eta_d", d.eta_d},        {"eta_atm", d.eta_atm},
                     {"eta_st", d.eta_st},      {"sigma_t2", d.sigma_t2},
                     {"sigma_p2", d.sigma_p2},  {"sigma_Ry2", d.sigma_Ry2},
                     {"w_d", d.w_d},            {"w_st", d.w_st},
                     {"n_bar_B", d.n_bar_B},    {"far_field", d.far_field}};
            lines.emplace_back("eta_d / eta_atm / eta_st",
                               num(d.eta_d) + " / " + num(d.eta_atm) + " / " +
                                   num(d.eta_st));
            lines.emplace_back("spot w_d / w_st",
                               num(d.w_d) + " / " + num(d.w_st) + " m");
        }
    }

    if (cap.unbounded) {
        out["unbounded"] = true;
        lines.emplace_back("capacity",
                           "unbounded (perfect transmission)");
    } else {
        out["capacity"] = cap.value;
        out["capacity_kind"] = kind_label(cap.kind);
        lines.emplace_back("capacity", num(cap.value) + " bits/use (" +
                                           kind_label(cap.kind) + ")");
    }
    out["warnings"] = warnings;

    if (a.as_json) {
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "kind: " << a.kind << "  (preset " << a.preset_name << ")\n";
    for (const auto& [k, v] : lines) std::cout << k << ": " << v << '\n';
    for (const std::string& w : warnings)
        std::cout << "warning: " << w << '\n';
    return 0;
}

// ---------------------------------------------------------------- network

struct NetworkArgs {
    std::string file, alpha, beta;
    std::string mode = "multi";
    bool as_json = false;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

int run_network(const NetworkArgs& a) {
    const Network net =
        capacities_from_channels(network_from_json(read_json_file(a.file)));
    if (a.mode == "multi") {
        const FlowResult r = flooding_capacity(net, a.alpha, a.beta);
        if (a.as_json) {
            json edges = json::array();
            for (int e : r.min_cut.cut_edges)
                edges.push_back(json{{"u", net.edges()[e].u},
                                     {"v", net.edges()[e].v},
                                     {"capacity", net.edge_capacity(e)}});
            std::cout << json{{"mode", "multi"},
                              {"value", r.value},
                              {"kind", kind_label(r.kind)},
                              {"cut",
                               json{{"a_side", r.min_cut.a_side},
                                    {"b_side", r.min_cut.b_side},
                                    {"edges", edges}}}}
                             .dump(2)
                      << '\n';
            return 0;
        }
        std::cout << "flooding capacity = " << num(r.value) << " bits/use ("
                  << kind_label(r.kind) << ")\n";
        std::cout << "min cut: A = {" << join(r.min_cut.a_side, ", ")
                  << "} | B = {" << join(r.min_cut.b_side, ", ") << "}\n";
        for (int e : r.min_cut.cut_edges)
            std::cout << "cut edge: " << net.edges()[e].u << " - "
                      << net.edges()[e].v << "  ("
                      << num(net.edge_capacity(e)) << ")\n";
        return 0;
    }
    if (a.mode == "single") {
        const PathResult r = single_path_capacity(net, a.alpha, a.beta);
        if (a.as_json) {
            std::cout << json{{"mode", "single"},
                              {"value", r.value},
                              {"kind", kind_label(r.kind)},
                              {"route", r.route}}
                             .dump(2)
                      << '\n';
            return 0;
        }
        std::cout << "single-path capacity = " << num(r.value)
                  << " bits/use (" << kind_label(r.kind) << ")\n";
        std::cout << "route: "
                  << (r.route.empty() ? "(disconnected)"
                                      : join(r.route, " -> "))
                  << '\n';
        return 0;
    }
    throw ConfigError("network: --mode must be \"single\" or \"multi\"");
}

// ---------------------------------------------------------------- modular

struct ModularArgs {
    std::string file, alpha, beta;
    int trials = 0;
    unsigned seed = 12345;
    bool as_json = false;
};

IdealModularSpec spec_from_json(const json& j, const ModularNetwork& mod) {
    check_keys(j, {"k_b", "k_c", "k_cb"}, "modular spec");
    IdealModularSpec spec;
    if (!j.contains("k_b") || !j.at("k_b").is_number_integer())
        throw ConfigError("modular spec: \"k_b\" must be an integer");
    spec.k_b = j.at("k_b").get<int>();
    const auto fill = [&](const char* key, std::map<std::string, int>& m) {
        if (!j.contains(key))
            throw ConfigError(std::string("modular spec: missing \"") + key +
                              "\"");
        const json& v = j.at(key);
        if (v.is_number_integer()) {
            for (const std::string& c : mod.communities())
                m[c] = v.get<int>();
        } else if (v.is_object()) {
            for (const auto& it : v.items()) {
                if (!it.value().is_number_integer())
                    throw ConfigError(std::string("modular spec: \"") + key +
                                      "\" values must be integers");
                m[it.key()] = it.value().get<int>();
            }
        } else {
            throw ConfigError(std::string("modular spec: \"") + key +
                              "\" must be an integer or an object");
        }
    };
    fill("k_c", spec.k_c);
    fill("k_cb", spec.k_cb);
    return spec;
}

bool collapsed_to(double flooding, double global) {
    return std::abs(flooding - global) <=
           1e-9 * std::max(1.0, std::abs(global));
}

int report_modular_file(const ModularArgs& a) {
    const json j = read_json_file(a.file);
    check_keys(j, {"network", "spec", "alpha", "beta"}, "modular config");
    for (const char* key : {"network", "spec"})
        if (!j.contains(key))
            throw ConfigError(std::string("modular config: missing \"") + key +
                              "\"");
    const ModularNetwork mod(
        capacities_from_channels(network_from_json(j.at("network"))));
    const IdealModularSpec spec = spec_from_json(j.at("spec"), mod);
    const std::string alpha =
        !a.alpha.empty() ? a.alpha : j.value("alpha", std::string());
    const std::string beta =
        !a.beta.empty() ? a.beta : j.value("beta", std::string());
    if (alpha.empty() || beta.empty())
        throw ConfigError("modular: end users are required (config "
                          "\"alpha\"/\"beta\" or --alpha/--beta)");

    const ThresholdResult tr = threshold_capacities(mod, spec, alpha, beta);
    const FlowResult fl = flooding_capacity(mod.base(), alpha, beta);
    const bool collapsed = collapsed_to(fl.value, tr.global_capacity);

    if (a.as_json) {
        std::cout << json{{"alpha", alpha},
                          {"beta", beta},
                          {"global_capacity", tr.global_capacity},
                          {"c_min_community", tr.c_min_community},
                          {"c_min_backbone", tr.c_min_backbone},
                          {"h_min_star", tr.h_min_star},
                          {"communities_ok", tr.communities_ok},
                          {"backbone_ok", tr.backbone_ok},
                          {"satisfied", tr.satisfied},
                          {"flooding", fl.value},
                          {"collapsed", collapsed},
                          {"notes", tr.notes}}
                         .dump(2)
                  << '\n';
        return 0;
    }

    std::cout << "end users: " << alpha << " -> " << beta << '\n';
    std::cout << "global-community capacity = " << num(tr.global_capacity)
              << " bits/use\n";
    for (const auto& [c, cmin] : tr.c_min_community)
        std::cout << "community " << c << ": per-edge threshold "
                  << num(cmin) << '\n';
    std::cout << "backbone: H* = " << tr.h_min_star
              << ", per-edge threshold " << num(tr.c_min_backbone) << '\n';
    for (const std::string& n : tr.notes) std::cout << "note: " << n << '\n';
    if (tr.satisfied && collapsed) {
        std::cout << "thresholds satisfied; flooding = global-community = "
                  << num(fl.value) << '\n';
    } else if (tr.satisfied) {
        std::cout << "thresholds satisfied; flooding = " << num(fl.value)
                  << ", global-community = " << num(tr.global_capacity)
                  << '\n';
    } else {
        std::cout << "thresholds not satisfied ("
                  << (tr.backbone_ok ? "" : "backbone below threshold")
                  << (!tr.backbone_ok && !tr.communities_ok ? "; " : "")
                  << (tr.communities_ok ? "" : "a community below threshold")
                  << "); flooding = " << num(fl.value)
                  << ", global-community = " << num(tr.global_capacity)
                  << '\n';
    }
    return 0;
}

int run_modular_trials(const ModularArgs& a) {
    std::mt19937 rng(a.seed);
    double worst = 0.0;
    for (int t = 0; t < a.trials; ++t) {
        const RandomModular rm = random_ideal_modular(rng);
        const ModularNetwork mod(rm.base);
        const ThresholdResult tr =
            threshold_capacities(mod, rm.spec, rm.alpha, rm.beta);
        const FlowResult fl = flooding_capacity(mod.base(), rm.alpha, rm.beta);
        const double gap = std::abs(fl.value - tr.global_capacity) /
                           std::max(1.0, std::abs(tr.global_capacity));
        worst = std::max(worst, gap);
        if (!tr.satisfied || !collapsed_to(fl.value, tr.global_capacity)) {
            std::cout << "trial " << t << " (seed " << a.seed
                      << "): thresholds "
                      << (tr.satisfied ? "satisfied" : "NOT satisfied")
                      << ", flooding = " << num(fl.value)
                      << ", global-community = " << num(tr.global_capacity)
                      << '\n';
            std::cout << "FAILED: flooding did not collapse to the "
                         "global-community capacity\n";
            return 1;
        }
    }
    std::cout << a.trials << " random ideal modular trials (seed " << a.seed
              << "): all collapsed; max relative gap = " << num(worst)
              << '\n';
    return 0;
}

int run_modular(const ModularArgs& a) {
    if (a.trials < 0)
        throw ConfigError("modular: --trials must be positive");
    const bool file_mode = !a.file.empty();
    if (file_mode == (a.trials > 0))
        throw ConfigError(
            "modular: give a config file or --trials N, not both");
    return file_mode ? report_modular_file(a) : run_modular_trials(a);
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
    std::string figure, config, output;
    std::vector<std::string> sets;
    bool emit_config = false;
};

int run_sweep(const SweepArgs& a) {
    if (a.figure.empty() == a.config.empty())
        throw ConfigError(
            "sweep: exactly one of --figure or --config is required");
    json doc = a.config.empty() ? json{{"figure", a.figure}}
                                : read_json_file(a.config);
    for (const std::string& ov : a.sets) apply_dotted_override(doc, ov);
    const ScenarioConfig cfg = scenario_from_json(doc);
    const auto file = open_output(a.output);
    std::ostream& os = file ? static_cast<std::ostream&>(*file) : std::cout;
    if (a.emit_config) {
        os << scenario_to_json(cfg).dump(2) << '\n';
        return 0;
    }
    write_csv(os, sweep(cfg));
    return 0;
}

// ---------------------------------------------------------------- presets

int run_presets(const std::string& show_name, bool list_mode) {
    if (list_mode) {
        json all = json::array();
        for (const std::string& name : preset_names())
            all.push_back(preset_to_json(preset(name)));
        std::cout << all.dump(2) << '\n';
        return 0;
    }
    std::cout << preset_to_json(preset(show_name)).dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ultimate capacities of hybrid quantum networks"};
    app.require_subcommand(1);

    ChannelArgs ca;
    CLI::App* channel =
        app.add_subcommand("channel", "capacity of one point-to-point link");
    channel->add_option("--preset", ca.preset_name,
                        "hardware preset (see `presets`)")
        ->capture_default_str();
    channel->add_option("--kind", ca.kind,
                        "ground|uplink|downlink|intersat|fiber")
        ->required();
    channel->add_option("--z", ca.z,
                        "link length (ground/intersat/fiber), m|km suffix");
    channel->add_option("--h-sat", ca.h,
                        "satellite altitude for uplink/downlink")
        ->capture_default_str();
    channel->add_option("--zenith", ca.zenith, "zenith angle in radians")
        ->capture_default_str();
    channel->add_option("--h1", ca.h1, "first satellite altitude (intersat)")
        ->capture_default_str();
    channel->add_option("--h2", ca.h2, "second satellite altitude (intersat)")
        ->capture_default_str();
    channel->add_option("--altitude", ca.altitude,
                        "ground station altitude (default: preset)");
    channel->add_option("--loss-per-km", ca.loss_per_km,
                        "fiber loss rate (default: preset)");
    channel->add_option("--set", ca.overrides,
                        "preset override, dotted key=value (repeatable)");
    channel->add_flag("--json", ca.as_json, "machine-readable output");

    NetworkArgs na;
    CLI::App* network = app.add_subcommand(
        "network", "end-to-end capacity of a capacitated graph");
    network->add_option("file", na.file, "network JSON file")->required();
    network->add_option("--alpha", na.alpha, "first end user")->required();
    network->add_option("--beta", na.beta, "second end user")->required();
    network->add_option("--mode", na.mode, "multi (flooding) or single path")
        ->capture_default_str();
    network->add_flag("--json", na.as_json, "machine-readable output");

    ModularArgs ma;
    CLI::App* modular = app.add_subcommand(
        "modular", "threshold report for a modular network");
    modular->add_option("file", ma.file,
                        "config JSON {network, spec, alpha, beta}");
    modular->add_option("--alpha", ma.alpha, "override first end user");
    modular->add_option("--beta", ma.beta, "override second end user");
    modular->add_option("--trials", ma.trials,
                        "run N random ideal instances instead of a file");
    modular->add_option("--seed", ma.seed, "RNG seed for --trials")
        ->capture_default_str();
    modular->add_flag("--json", ma.as_json, "machine-readable output");

    SweepArgs sa;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "constraint-curve CSV tables");
    CLI::Option* fig_opt =
        sweep_cmd->add_option("--figure", sa.figure, "bundled figure id");
    sweep_cmd->add_option("--config", sa.config, "scenario JSON file")
        ->excludes(fig_opt);
    sweep_cmd->add_option("--set", sa.sets,
                          "scenario override, dotted key=value (repeatable)");
    sweep_cmd->add_option("--output,-o", sa.output,
                          "output CSV path (default: stdout)");
    sweep_cmd->add_flag("--emit-config", sa.emit_config,
                        "print the resolved scenario JSON and exit");

    std::string show_name;
    CLI::App* presets_cmd =
        app.add_subcommand("presets", "bundled hardware scenarios");
    CLI::App* show =
        presets_cmd->add_subcommand("show", "echo one preset as JSON");
    show->add_option("name", show_name, "preset name")->required();
    presets_cmd->require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
        if (channel->parsed()) return run_channel(ca);
        if (network->parsed()) return run_network(na);
        if (modular->parsed()) return run_modular(ma);
        if (sweep_cmd->parsed()) return run_sweep(sa);
        if (presets_cmd->parsed())
            return run_presets(show_name, !show->parsed());
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UnknownNodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
