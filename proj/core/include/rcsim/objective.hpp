#pragma once

#include <string>

#include "rcsim/dynamics.hpp"
#include "rcsim/graph.hpp"

namespace rcsim {

// A rumor-containing strategy: the two controllable truth-spreading rates.
struct Strategy {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

// One containment problem: paired networks, the uncontrollable rates, the
// horizon, the per-unit-time budget with its cost coefficients, and the
// initial expected state. Admissible strategies spend the whole budget:
// c1*gamma1 + c2*gamma2 = B.
struct RCInstance {
    DirectedGraph gR{1};
    DirectedGraph gT{1};
    double beta1 = 0.0;
    double beta2 = 0.0;
    double delta = 0.0;
    double horizon = 0.0;
    double budget = 0.0;  // B; 0 only as the degenerate no-budget case
    double c1 = 1.0;
    double c2 = 1.0;
    ExpectedState init;

    void validate() const;  // throws std::domain_error
    double max_gamma1() const { return budget / c1; }
};

// Effectiveness of a strategy on one instance. eU counts uncertain persons
// converted to the truth, eR counts converted rumor-believers; eTotal is
// their exact sum and costEffectiveness is eTotal / (B*T).
struct EffectivenessReport {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double eU = 0.0;
    double eR = 0.0;
    double eTotal = 0.0;
    double costEffectiveness = 0.0;
    double dt = 0.0;  // step size actually used
};

// The gamma2 forced by the budget line for a given gamma1.
// Domain error outside 0 <= gamma1 <= B/c1.
double gamma2_of(const RCInstance& instance, double gamma1);

// Whether c1*gamma1 + c2*gamma2 = B within 1e-12 relative (and both rates
// nonnegative).
bool on_budget_line(const RCInstance& instance, const Strategy& strategy);

// Integrates the dynamics under (beta1, beta2, gamma1, gamma2, delta) and
// assembles the effectiveness integrals. dt = 0 picks default_dt(horizon).
// The strategy must lie on the budget line.
EffectivenessReport effectiveness(const RCInstance& instance, const Strategy& strategy,
                                  double dt = 0.0);

std::string report_json(const EffectivenessReport& report);

}  // namespace rcsim
