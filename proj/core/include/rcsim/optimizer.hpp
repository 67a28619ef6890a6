#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcsim/objective.hpp"

namespace rcsim {

// Knobs for solve_rc. Zero-valued entries resolve to the documented policy
// defaults at solve time.
struct SolveSettings {
    int gridPoints = 101;   // coarse global grid over [0, B/c1], >= 2
    double refineTol = 0.0; // golden-section interval target; 0 -> 1e-6 * (B/c1)
    double dt = 0.0;        // integrator step; 0 -> default_dt(horizon)
    int threads = 1;        // workers for the grid phase
    bool profile = false;   // record the (gamma1, eTotal) grid profile
};

// Outcome of one optimization: the best admissible strategy found, its
// effectiveness (a direct re-evaluation, never an interpolation), and the
// search bookkeeping.
struct StrategyResult {
    Strategy best;
    double eU = 0.0;
    double eR = 0.0;
    double eTotal = 0.0;
    double costEffectiveness = 0.0;
    double dt = 0.0;
    long evaluations = 0;  // objective calls, including the final re-evaluation
    std::vector<std::pair<double, double>> gridProfile;  // (gamma1, eTotal) when requested
};

// Maximizes effectiveness over the budget line: a uniform grid over
// [0, B/c1] (endpoints always evaluated) followed by golden-section
// refinement between the best grid point's neighbors. Ties break toward
// smaller gamma1. B = 0 degenerates to the single strategy (0, 0).
StrategyResult solve_rc(const RCInstance& instance, const SolveSettings& settings = {});

// Cost effectiveness of the optimal strategy under default settings.
double highest_cost_effectiveness(const RCInstance& instance);

// JSON mirroring the effectiveness report plus the search bookkeeping and,
// when present, the grid profile. `meta_json`, if nonempty, must be a JSON
// object; it is embedded verbatim under "meta".
std::string result_json(const StrategyResult& result, const std::string& meta_json = "");

}  // namespace rcsim
