#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnetcap/config.hpp"
#include "qnetcap/freespace.hpp"

namespace qnetcap {

// Validity cap for ground free-space links (m): beyond this range the
// weak-fluctuation statistics behind the fading law stop being rigorous,
// so link planning never extrapolates past it.
inline constexpr double kWeakTurbulenceWindow = 1066.0;

// Half-angle of a one-steradian cone around the zenith (rad): the angular
// window that every downlink of a best-case constellation must fit into.
double one_steradian_zenith();

// How a distance-constraint solve ended.
enum class SolveStatus {
    Solved,          // bracketed root found inside the search interval
    NoSolution,      // target capacity unreachable even at the closest range
    WindowLimited,   // target still met at the model-validity cap
    BracketLimited,  // target still met at the far end of the bracket
    Undefined,       // closed form undefined (capacity unreachable losslessly)
};

const char* to_string(SolveStatus s);

// Longest link length compatible with a target network capacity.  `value`
// holds the solved length, the validity cap (WindowLimited) or the far
// bracket end (BracketLimited); it is NaN for NoSolution.
struct ConstraintResult {
    SolveStatus status = SolveStatus::NoSolution;
    double value = std::numeric_limits<double>::quiet_NaN();  // m
    double capacity_at_value = 0.0;  // divisor x single-edge capacity there
    double target = 0.0;             // requested network capacity (bits/use)
    double divisor = 1.0;            // cut-size divisor (H or k) applied
    // satellite-separation extras; untouched by the other solvers
    std::optional<double> lower_bound;  // slow-detector closed form (m)
    std::optional<double> upper_bound;  // no-pointing-error closed form (m)
    std::optional<double> sight_limit;  // line-of-sight cap at h_max (m)
    bool sight_feasible = true;
};

// Longest fiber link (m) keeping a cut of `divisor` fiber edges able to
// carry `capacity`: the exact inversion of divisor * plob(10^(-loss d)).
double max_fiber_length(double capacity, double divisor,
                        double loss_per_km = 0.02);

// Longest satellite-to-satellite separation (m) keeping a cut of
// `h_min_star` vacuum links able to carry `capacity`.  Solved by geometric
// bisection of the signed log-ratio on [1 m, max(10 sight, 1e8 m)]; the
// analytic bounds (clock ratio 1) and the line-of-sight cap at h_max ride
// along in the result.
ConstraintResult max_intersatellite_separation(double capacity,
                                               double h_min_star,
                                               const BeamSetup& setup,
                                               double h_max = 1.5e6);

// Closed-form bracket for the maximum satellite separation. `upper` ignores
// pointing errors; `lower` assumes a detector too slow to resolve them,
// derated by the clock ratio between intercommunity and backbone use rates.
// A bound is absent when its target is unreachable even losslessly.
struct IntersatBounds {
    std::optional<double> lower;  // m
    std::optional<double> upper;  // m
};

IntersatBounds intersat_bounds(double capacity, double h_min_star,
                               const BeamSetup& setup,
                               double clock_ratio = 1.0);

// Longest ground free-space link (m) keeping a cut of `k_c` such links able
// to carry `capacity`, searched inside the weak-turbulence window.
ConstraintResult max_freespace_length(double capacity, double k_c,
                                      const BeamSetup& setup,
                                      const AtmosphereModel& atmo,
                                      SkyCondition condition,
                                      double altitude = 0.0);

// Minimum number of feed links (each rated `per_link_rate`) whose spread
// over distinct backbone nodes can carry `capacity`: ceil of the ratio,
// never below one.
long long best_case_feeds(double capacity, double per_link_rate);

// Inclusive sample grid; `points == 0` means an empty sweep.
struct SweepGrid {
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    bool log_spaced = true;

    std::vector<double> values() const;
};

// Everything one sweep needs: the hardware/link context plus the grids and
// connectivity fan the output table ranges over.
struct ScenarioConfig {
    std::string figure;       // one of figure_ids()
    std::string preset_name;  // bundled preset the scenario started from
    Preset scenario;          // resolved hardware, atmosphere, link context
    std::vector<double> connectivities;  // k values to fan over
    SweepGrid capacity_grid;             // target network capacities
    SweepGrid distance_grid;             // x grid for point-to-point curves
    double clock_ratio = 1.0;
    // per-feed-link rate for best-case cut sizing; 0 = derive from the
    // scenario's intercommunity link at its reference geometry
    double intercommunity_rate = 0.0;
    double zenith_window = one_steradian_zenith();
};

// Bundled sweep definitions and their JSON (de)serialization.  Unknown keys
// are a hard error; a round trip through JSON is the identity.
std::vector<std::string> figure_ids();
ScenarioConfig figure_config(const std::string& id);
ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);

// Sweep output: one fixed header plus pre-rendered cells (numbers are
// printed with %.12g; absent values are empty cells).
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// Run the configured sweep.  Rows are computed in parallel (QNETCAP_THREADS
// caps the worker count) but always emitted in grid order; per-row model
// failures become a tag cell instead of aborting the sweep.
SweepTable sweep(const ScenarioConfig& cfg);

void write_csv(std::ostream& os, const SweepTable& table);

// Worker-count cap: QNETCAP_THREADS when set (>= 1), else the hardware
// concurrency.
int thread_budget();

} // namespace qnetcap
