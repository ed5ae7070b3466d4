#include "qnetcap/planner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "json_util.hpp"
#include "qnetcap/capacity.hpp"
#include "qnetcap/errors.hpp"

namespace qnetcap {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string();
}

// Geometric bisection of a decreasing capacity(z) for capacity(z) == target.
// `lo` must satisfy capacity(lo) >= target and `hi` capacity(hi) <= target.
double bisect_length(const std::function<double(double)>& capacity_at,
                     double target, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        if (hi - lo <= std::max(1e-9 * lo, 1e-6)) break;
        const double mid = std::sqrt(lo * hi);
        if (capacity_at(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return std::sqrt(lo * hi);
}

// Shared solver skeleton: classify the bracket ends, then bisect.  `cap`
// gives what a far-end hit means (window cap vs plain bracket end).
ConstraintResult solve_constraint(const std::function<double(double)>& cap_at,
                                  double target, double divisor, double lo,
                                  double hi, SolveStatus far_status) {
    ConstraintResult out;
    out.target = target;
    out.divisor = divisor;
    const double at_lo = cap_at(lo);
    if (at_lo < target) {
        out.status = SolveStatus::NoSolution;
        out.capacity_at_value = at_lo;
        return out;
    }
    const double at_hi = cap_at(hi);
    if (at_hi >= target) {
        out.status = far_status;
        out.value = hi;
        out.capacity_at_value = at_hi;
        return out;
    }
    out.status = SolveStatus::Solved;
    out.value = bisect_length(cap_at, target, lo, hi);
    out.capacity_at_value = cap_at(out.value);
    return out;
}

void require_target(double capacity, const char* what) {
    if (!(capacity > 0.0))
        throw DomainError(std::string(what) +
                          ": requires a positive target capacity");
}

void require_divisor(double divisor, const char* what) {
    if (!(divisor >= 1.0))
        throw DomainError(std::string(what) + ": cut divisor must be >= 1");
}

// ln[eta_eff / (eta_eff - 1 + 2^(-capacity/divisor))], the spot-size budget
// a lossless-beyond-diffraction link must keep; absent when the target is
// unreachable even at full transmissivity.
std::optional<double> loss_budget(double capacity, double divisor,
                                  double eta_eff) {
    const double floor_term = eta_eff - 1.0 + std::exp2(-capacity / divisor);
    if (!(floor_term > 0.0)) return std::nullopt;
    return std::log(eta_eff / floor_term);
}

// ---- parallel row evaluation ------------------------------------------

void parallel_tasks(int count, const std::function<void(int)>& task) {
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto drain = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// ---- figure definitions ------------------------------------------------

// Per-feed-link rate used to size best-case cuts, derived from the
// scenario's intercommunity link at its reference geometry unless pinned.
double feed_rate(const ScenarioConfig& cfg) {
    if (cfg.intercommunity_rate > 0.0) return cfg.intercommunity_rate;
    const Preset& sc = cfg.scenario;
    if (sc.intercommunity == "downlink")
        return build_channel(sc.setup, sc.atmo,
                             Trajectory::downlink(sc.h_max, cfg.zenith_window),
                             sc.condition)
            .capacity()
            .value;
    if (sc.intercommunity == "ground")
        return build_channel(
                   sc.setup, sc.atmo,
                   Trajectory::ground(sc.ground_altitude,
                                      kWeakTurbulenceWindow),
                   sc.condition)
            .capacity()
            .value;
    throw ConfigError("scenario: unknown intercommunity link kind \"" +
                      sc.intercommunity + "\"");
}

const std::vector<std::string> kPointColumns = {
    "figure",   "preset",        "kind",  "zenith_rad",
    "x_m",      "eta_best",      "eta_avg", "capacity",
    "capacity_kind", "n_bar",    "tag"};

const std::vector<std::string> kConstraintColumns = {
    "figure",  "preset", "C_target", "kind",
    "k",       "regime", "H",        "feeds",
    "value_m", "capacity_at_value", "status",
    "lower_m", "upper_m", "sight_limit_m", "sight_feasible"};

const char* kind_name(CapacityKind k) {
    return k == CapacityKind::ExactAchievable ? "achievable" : "upper-bound";
}

struct PointSample {
    std::string kind;
    double zenith = 0.0;
    double x = 0.0;
};

// One transmissivity/capacity curve sample; model failures land in `tag`.
std::vector<std::string> point_row(const ScenarioConfig& cfg,
                                   const PointSample& s) {
    std::vector<std::string> row(kPointColumns.size());
    row[0] = cfg.figure;
    row[1] = cfg.preset_name;
    row[2] = s.kind;
    row[3] = fmt(s.zenith);
    row[4] = fmt(s.x);
    try {
        FadingDensity fading{0.0, 2.0, 1.0, 0.0};
        CapacityBound cap;
        double n_bar = 0.0;
        if (s.kind == "intersat") {
            fading = intersatellite_fading(cfg.scenario.setup, s.x);
            cap = intersatellite_capacity(cfg.scenario.setup, s.x);
        } else {
            Trajectory traj = Trajectory::ground(0.0, 0.0);
            if (s.kind == "ground")
                traj = Trajectory::ground(cfg.scenario.ground_altitude, s.x);
            else if (s.kind == "uplink")
                traj = Trajectory::uplink(s.x, s.zenith);
            else
                traj = Trajectory::downlink(s.x, s.zenith);
            const ChannelModel ch = build_channel(
                cfg.scenario.setup, cfg.scenario.atmo, traj,
                cfg.scenario.condition);
            fading = ch.fading;
            cap = ch.capacity();
            n_bar = ch.n_bar.n_bar;
            if (!ch.warnings.empty()) {
                std::string joined;
                for (const auto& w : ch.warnings) {
                    if (!joined.empty()) joined += "; ";
                    joined += w;
                }
                row[10] = joined;
            }
        }
        row[5] = fmt(fading.eta_max);
        row[6] = fmt(expected_transmissivity(fading));
        row[7] = fmt(cap.value);
        row[8] = kind_name(cap.kind);
        row[9] = fmt(n_bar);
    } catch (const std::exception& e) {
        row[10] = e.what();
    }
    return row;
}

SweepTable run_point_figure(const ScenarioConfig& cfg) {
    std::vector<PointSample> samples;
    const std::vector<double> xs = cfg.distance_grid.values();
    if (cfg.figure == "fig1b") {
        for (const char* kind : {"downlink", "uplink"})
            for (double zenith : {0.0, 1.0})
                for (double x : xs) samples.push_back({kind, zenith, x});
    } else {
        const char* kind = cfg.figure == "fig1c" ? "intersat" : "ground";
        for (double x : xs) samples.push_back({kind, 0.0, x});
    }
    SweepTable table;
    table.columns = kPointColumns;
    table.rows.resize(samples.size());
    parallel_tasks(static_cast<int>(samples.size()), [&](int i) {
        table.rows[i] = point_row(cfg, samples[i]);
    });
    return table;
}

struct ConstraintTask {
    double c = 0.0;
    double k = 0.0;
    bool best_case = false;
};

std::vector<std::string> constraint_row(const ScenarioConfig& cfg,
                                        const ConstraintTask& t,
                                        double rate) {
    std::vector<std::string> row(kConstraintColumns.size());
    row[0] = cfg.figure;
    row[1] = cfg.preset_name;
    row[2] = fmt(t.c);
    row[4] = fmt(t.k);

    const bool satellite = cfg.figure == "fig3a" || cfg.figure == "fig3b";
    const bool fiber_backbone = cfg.figure == "fig4a";
    const bool fiber_community = cfg.figure == "fig3c" || cfg.figure == "fig3d";
    row[5] = satellite || fiber_backbone ? (t.best_case ? "best" : "worst")
                                         : "community";

    long long feeds = 1;
    double divisor = t.k;
    if (t.best_case) {
        feeds = best_case_feeds(t.c, rate);
        divisor = t.k * static_cast<double>(feeds);
        row[7] = std::to_string(feeds);
    }
    row[6] = fmt(divisor);

    if (satellite) {
        row[3] = "intersat";
        const ConstraintResult r = max_intersatellite_separation(
            t.c, divisor, cfg.scenario.setup, cfg.scenario.h_max);
        row[8] = fmt(r.value);
        row[9] = fmt(r.capacity_at_value);
        row[10] = to_string(r.status);
        row[11] = fmt(r.lower_bound);
        row[12] = fmt(r.upper_bound);
        row[13] = fmt(r.sight_limit);
        row[14] = r.sight_feasible ? "1" : "0";
    } else if (fiber_backbone || fiber_community) {
        row[3] = fiber_backbone ? "fiber-backbone" : "fiber-community";
        row[8] = fmt(max_fiber_length(t.c, divisor,
                                      cfg.scenario.fiber_loss_per_km));
        row[9] = fmt(t.c);
        row[10] = to_string(SolveStatus::Solved);
    } else {
        row[3] = "freespace-community";
        const ConstraintResult r = max_freespace_length(
            t.c, divisor, cfg.scenario.setup, cfg.scenario.atmo,
            cfg.scenario.condition, cfg.scenario.ground_altitude);
        row[8] = fmt(r.value);
        row[9] = fmt(r.capacity_at_value);
        row[10] = to_string(r.status);
    }
    return row;
}

SweepTable run_constraint_figure(const ScenarioConfig& cfg) {
    const bool two_regimes = cfg.figure == "fig3a" || cfg.figure == "fig3b" ||
                             cfg.figure == "fig4a";
    std::vector<ConstraintTask> tasks;
    for (double c : cfg.capacity_grid.values())
        for (double k : cfg.connectivities) {
            tasks.push_back({c, k, false});
            if (two_regimes) tasks.push_back({c, k, true});
        }
    const double rate = two_regimes && !tasks.empty() ? feed_rate(cfg) : 0.0;
    SweepTable table;
    table.columns = kConstraintColumns;
    table.rows.resize(tasks.size());
    parallel_tasks(static_cast<int>(tasks.size()), [&](int i) {
        table.rows[i] = constraint_row(cfg, tasks[i], rate);
    });
    return table;
}

SweepGrid grid_from_json(const json& j, const SweepGrid& base,
                         const std::string& where) {
    detail::check_keys(j, {"lo", "hi", "points", "log"}, where);
    SweepGrid g = base;
    if (j.contains("lo")) g.lo = detail::get_number(j, "lo", where);
    if (j.contains("hi")) g.hi = detail::get_number(j, "hi", where);
    if (j.contains("points")) {
        const auto& v = j.at("points");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError(where + ": \"points\" must be an integer >= 0");
        g.points = static_cast<int>(v.get<long long>());
    }
    if (j.contains("log")) {
        if (!j.at("log").is_boolean())
            throw ConfigError(where + ": \"log\" must be a boolean");
        g.log_spaced = j.at("log").get<bool>();
    }
    return g;
}

json grid_to_json(const SweepGrid& g) {
    return json{{"lo", g.lo},
                {"hi", g.hi},
                {"points", g.points},
                {"log", g.log_spaced}};
}

} // namespace

double one_steradian_zenith() {
    static const double value =
        std::acos(1.0 - 1.0 / (2.0 * std::numbers::pi));
    return value;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::NoSolution: return "no-solution";
        case SolveStatus::WindowLimited: return "window-limited";
        case SolveStatus::BracketLimited: return "bracket-limited";
        case SolveStatus::Undefined: return "undefined";
    }
    return "unknown";
}

double max_fiber_length(double capacity, double divisor, double loss_per_km) {
    require_target(capacity, "fiber length");
    require_divisor(divisor, "fiber length");
    if (!(loss_per_km > 0.0))
        throw DomainError("fiber length: loss rate must be positive");
    // 1 - 2^(-C/k), formed via expm1 so tiny ratios keep full precision
    const double deficit =
        -std::expm1(-(capacity / divisor) * std::numbers::ln2);
    return -1000.0 / loss_per_km * std::log10(deficit);
}

ConstraintResult max_intersatellite_separation(double capacity,
                                               double h_min_star,
                                               const BeamSetup& setup,
                                               double h_max) {
    require_target(capacity, "intersatellite separation");
    require_divisor(h_min_star, "intersatellite separation");
    setup.check();
    const double sight = line_of_sight_limit(h_max, h_max);
    auto cap_at = [&](double z) {
        return h_min_star * intersatellite_capacity(setup, z).value;
    };
    ConstraintResult out = solve_constraint(
        cap_at, capacity, h_min_star, 1.0, std::max(10.0 * sight, 1e8),
        SolveStatus::BracketLimited);
    const IntersatBounds bounds =
        intersat_bounds(capacity, h_min_star, setup, 1.0);
    out.lower_bound = bounds.lower;
    out.upper_bound = bounds.upper;
    out.sight_limit = sight;
    if (out.status != SolveStatus::NoSolution)
        out.sight_feasible = out.value <= sight;
    return out;
}

IntersatBounds intersat_bounds(double capacity, double h_min_star,
                               const BeamSetup& setup, double clock_ratio) {
    require_target(capacity, "intersatellite bounds");
    require_divisor(h_min_star, "intersatellite bounds");
    if (!(clock_ratio > 0.0))
        throw DomainError("intersatellite bounds: clock ratio must be > 0");
    setup.check();
    const double w0_sq = setup.waist0 * setup.waist0;
    const double a_sq = setup.aperture * setup.aperture;
    const double z_r = setup.rayleigh_range();

    IntersatBounds out;
    if (const auto budget = loss_budget(capacity, h_min_star, setup.eta_eff)) {
        const double arg = 2.0 * a_sq / (w0_sq * *budget) - 1.0;
        if (arg > 0.0) out.upper = z_r * std::sqrt(arg);
    }
    // Slow detector: the beam profile's per-axis variance w^2/4 picks up the
    // full pointing walk (per-axis sigma_p^2), so the long-term spot obeys
    // w_lt^2 = w_d^2 + 4 sigma_p^2; the clock ratio derates the per-use
    // target of the slower intercommunity detectors.
    if (const auto budget = loss_budget(clock_ratio * capacity, h_min_star,
                                        setup.eta_eff)) {
        const double eps_sq = setup.pointing_error * setup.pointing_error;
        const double numer = 2.0 * a_sq / *budget - w0_sq;
        const double denom = w0_sq / (z_r * z_r) + 4.0 * eps_sq;
        if (numer > 0.0 && denom > 0.0) out.lower = std::sqrt(numer / denom);
    }
    return out;
}

ConstraintResult max_freespace_length(double capacity, double k_c,
                                      const BeamSetup& setup,
                                      const AtmosphereModel& atmo,
                                      SkyCondition condition,
                                      double altitude) {
    require_target(capacity, "free-space length");
    require_divisor(k_c, "free-space length");
    setup.check();
    auto cap_at = [&](double z) {
        const ChannelModel ch = build_channel(
            setup, atmo, Trajectory::ground(altitude, z), condition);
        return k_c * ch.capacity().value;
    };
    return solve_constraint(cap_at, capacity, k_c, 1.0,
                            kWeakTurbulenceWindow,
                            SolveStatus::WindowLimited);
}

long long best_case_feeds(double capacity, double per_link_rate) {
    require_target(capacity, "feed count");
    if (!(per_link_rate > 0.0))
        throw DomainError("feed count: per-link rate must be positive");
    const double ratio = capacity / per_link_rate;
    // relative nudge tolerates division roundoff at exact multiples
    const long long feeds =
        static_cast<long long>(std::ceil(ratio * (1.0 - 1e-12)));
    return std::max(1LL, feeds);
}

std::vector<double> SweepGrid::values() const {
    if (points <= 0) return {};
    if (points == 1) return {lo};
    if (log_spaced && !(lo > 0.0 && hi > 0.0))
        throw ConfigError("sweep grid: log spacing needs positive endpoints");
    if (!(hi >= lo))
        throw ConfigError("sweep grid: hi must be >= lo");
    std::vector<double> xs(points);
    const double steps = points - 1;
    for (int i = 0; i < points; ++i) {
        const double f = i / steps;
        xs[i] = log_spaced ? lo * std::pow(hi / lo, f)
                           : lo + (hi - lo) * f;
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

std::vector<std::string> figure_ids() {
    return {"fig1a", "fig1b", "fig1c", "fig3a", "fig3b",
            "fig3c", "fig3d", "fig4a", "fig4b"};
}

ScenarioConfig figure_config(const std::string& id) {
    ScenarioConfig cfg;
    cfg.figure = id;
    cfg.capacity_grid = {1e-3, 1e2, 51, true};
    if (id == "fig1a") {
        cfg.preset_name = "table2";
        cfg.distance_grid = {1.0, kWeakTurbulenceWindow, 61, true};
    } else if (id == "fig1b") {
        cfg.preset_name = "table1-setup1";
        cfg.distance_grid = {1e4, 1.5e6, 61, true};  // satellite altitude
    } else if (id == "fig1c") {
        cfg.preset_name = "table1-setup1";
        cfg.distance_grid = {1e5, 1e8, 61, true};
    } else if (id == "fig3a" || id == "fig3c") {
        cfg.preset_name = "table1-setup1";
        cfg.connectivities = id == "fig3a" ? std::vector<double>{4, 6, 8}
                                           : std::vector<double>{2, 4, 8};
    } else if (id == "fig3b" || id == "fig3d") {
        cfg.preset_name = "table1-setup2";
        cfg.connectivities = id == "fig3b" ? std::vector<double>{4, 6, 8}
                                           : std::vector<double>{2, 4, 8};
    } else if (id == "fig4a") {
        cfg.preset_name = "table2";
        cfg.connectivities = {4, 6, 8};
    } else if (id == "fig4b") {
        cfg.preset_name = "table2";
        cfg.connectivities = {4, 8, 16};
    } else {
        throw ConfigError("unknown figure \"" + id + "\"");
    }
    cfg.scenario = preset(cfg.preset_name);
    return cfg;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    static const std::string where = "scenario";
    detail::check_keys(j,
                       {"figure", "preset", "setup", "atmosphere",
                        "condition", "ground_altitude", "fiber_loss_per_km",
                        "h_max", "intercommunity", "connectivities",
                        "capacity_grid", "distance_grid", "clock_ratio",
                        "intercommunity_rate", "zenith_window"},
                       where);
    if (!j.contains("figure") || !j.at("figure").is_string())
        throw ConfigError(where + ": requires a \"figure\" string");
    ScenarioConfig cfg = figure_config(j.at("figure").get<std::string>());
    if (j.contains("preset")) {
        cfg.preset_name = j.at("preset").get<std::string>();
        cfg.scenario = preset(cfg.preset_name);
    }
    Preset& sc = cfg.scenario;
    if (j.contains("setup"))
        sc.setup = setup_from_json(j.at("setup"), sc.setup);
    if (j.contains("atmosphere"))
        sc.atmo = atmosphere_from_json(j.at("atmosphere"), sc.atmo);
    if (j.contains("condition"))
        sc.condition =
            parse_sky_condition(j.at("condition").get<std::string>());
    if (j.contains("ground_altitude"))
        sc.ground_altitude = detail::get_number(j, "ground_altitude", where);
    if (j.contains("fiber_loss_per_km"))
        sc.fiber_loss_per_km =
            detail::get_number(j, "fiber_loss_per_km", where);
    if (j.contains("h_max")) sc.h_max = detail::get_number(j, "h_max", where);
    if (j.contains("intercommunity"))
        sc.intercommunity = j.at("intercommunity").get<std::string>();
    if (j.contains("connectivities")) {
        const auto& arr = j.at("connectivities");
        if (!arr.is_array())
            throw ConfigError(where + ": \"connectivities\" must be an array");
        cfg.connectivities.clear();
        for (const auto& v : arr) {
            if (!v.is_number())
                throw ConfigError(where + ": connectivities must be numbers");
            cfg.connectivities.push_back(v.get<double>());
        }
    }
    if (j.contains("capacity_grid"))
        cfg.capacity_grid = grid_from_json(j.at("capacity_grid"),
                                           cfg.capacity_grid,
                                           where + ".capacity_grid");
    if (j.contains("distance_grid"))
        cfg.distance_grid = grid_from_json(j.at("distance_grid"),
                                           cfg.distance_grid,
                                           where + ".distance_grid");
    if (j.contains("clock_ratio"))
        cfg.clock_ratio = detail::get_number(j, "clock_ratio", where);
    if (j.contains("intercommunity_rate"))
        cfg.intercommunity_rate =
            detail::get_number(j, "intercommunity_rate", where);
    if (j.contains("zenith_window"))
        cfg.zenith_window = detail::get_number(j, "zenith_window", where);
    return cfg;
}

nlohmann::json scenario_to_json(const ScenarioConfig& cfg) {
    return json{{"figure", cfg.figure},
                {"preset", cfg.preset_name},
                {"setup", setup_to_json(cfg.scenario.setup)},
                {"atmosphere", atmosphere_to_json(cfg.scenario.atmo)},
                {"condition", to_string(cfg.scenario.condition)},
                {"ground_altitude", cfg.scenario.ground_altitude},
                {"fiber_loss_per_km", cfg.scenario.fiber_loss_per_km},
                {"h_max", cfg.scenario.h_max},
                {"intercommunity", cfg.scenario.intercommunity},
                {"connectivities", cfg.connectivities},
                {"capacity_grid", grid_to_json(cfg.capacity_grid)},
                {"distance_grid", grid_to_json(cfg.distance_grid)},
                {"clock_ratio", cfg.clock_ratio},
                {"intercommunity_rate", cfg.intercommunity_rate},
                {"zenith_window", cfg.zenith_window}};
}

SweepTable sweep(const ScenarioConfig& cfg) {
    if (cfg.figure.rfind("fig1", 0) == 0) {
        if (cfg.figure == "fig1a" || cfg.figure == "fig1b" ||
            cfg.figure == "fig1c")
            return run_point_figure(cfg);
    } else if (cfg.figure == "fig3a" || cfg.figure == "fig3b" ||
               cfg.figure == "fig3c" || cfg.figure == "fig3d" ||
               cfg.figure == "fig4a" || cfg.figure == "fig4b") {
        return run_constraint_figure(cfg);
    }
    throw ConfigError("unknown figure \"" + cfg.figure + "\"");
}

void write_csv(std::ostream& os, const SweepTable& table) {
    auto emit = [&os](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            const std::string& cell = cells[i];
            if (cell.find_first_of(",\"\n") != std::string::npos) {
                os << '"';
                for (char c : cell) {
                    if (c == '"') os << '"';
                    os << c;
                }
                os << '"';
            } else {
                os << cell;
            }
        }
        os << '\n';
    };
    emit(table.columns);
    for (const auto& row : table.rows) emit(row);
}

int thread_budget() {
    const char* env = std::getenv("QNETCAP_THREADS");
    if (env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return static_cast<int>(std::min<long>(v, 256));
        throw ConfigError("QNETCAP_THREADS must be a positive integer");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace qnetcap
