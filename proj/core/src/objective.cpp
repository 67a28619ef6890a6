#include "rcsim/objective.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace rcsim {

namespace {
constexpr double kBudgetLineRelTol = 1e-12;
}

void RCInstance::validate() const {
    if (gR.n() != gT.n())
        throw std::domain_error("rumor and truth networks must share the node set");
    init.validate();
    if (init.n() != gR.n())
        throw std::domain_error("initial state dimension does not match the networks");
    auto rate = [](double v, const char* name) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::domain_error(std::string(name) + " must be finite and nonnegative");
    };
    rate(beta1, "beta1");
    rate(beta2, "beta2");
    rate(delta, "delta");
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::domain_error("horizon must be positive and finite");
    if (!(budget >= 0.0) || !std::isfinite(budget))
        throw std::domain_error("budget must be nonnegative and finite");
    if (!(c1 > 0.0) || !(c2 > 0.0) || !std::isfinite(c1) || !std::isfinite(c2))
        throw std::domain_error("cost coefficients must be positive and finite");
}

double gamma2_of(const RCInstance& instance, double gamma1) {
    const double hi = instance.max_gamma1();
    if (!(gamma1 >= 0.0) || gamma1 > hi)
        throw std::domain_error("gamma1 must lie in [0, B/c1] = [0, " + std::to_string(hi) +
                                "], got " + std::to_string(gamma1));
    const double g2 = (instance.budget - instance.c1 * gamma1) / instance.c2;
    // at gamma1 == B/c1 the subtraction can leave a one-ulp negative
    if (g2 < 0.0 && g2 >= -kBudgetLineRelTol * std::max(1.0, instance.budget / instance.c2))
        return 0.0;
    return g2;
}

bool on_budget_line(const RCInstance& instance, const Strategy& strategy) {
    if (strategy.gamma1 < 0.0 || strategy.gamma2 < 0.0) return false;
    const double spend = instance.c1 * strategy.gamma1 + instance.c2 * strategy.gamma2;
    const double tol = kBudgetLineRelTol * std::max(1.0, std::abs(instance.budget));
    return std::abs(spend - instance.budget) <= tol;
}

EffectivenessReport effectiveness(const RCInstance& instance, const Strategy& strategy,
                                  double dt) {
    instance.validate();
    if (!on_budget_line(instance, strategy))
        throw std::domain_error("strategy (" + std::to_string(strategy.gamma1) + ", " +
                                std::to_string(strategy.gamma2) +
                                ") is not on the budget line c1*g1 + c2*g2 = B");
    if (dt == 0.0) dt = default_dt(instance.horizon);

    URTUParams params;
    params.beta1 = instance.beta1;
    params.beta2 = instance.beta2;
    params.gamma1 = strategy.gamma1;
    params.gamma2 = strategy.gamma2;
    params.delta = instance.delta;

    const FinalState fin =
        integrate_final(instance.init, params, instance.gR, instance.gT, instance.horizon, dt);

    EffectivenessReport rep;
    rep.gamma1 = strategy.gamma1;
    rep.gamma2 = strategy.gamma2;
    rep.eU = strategy.gamma1 * fin.accumU;
    rep.eR = strategy.gamma2 * fin.accumR;
    rep.eTotal = rep.eU + rep.eR;
    rep.costEffectiveness =
        instance.budget > 0.0 ? rep.eTotal / (instance.budget * instance.horizon) : 0.0;
    rep.dt = dt;
    return rep;
}

std::string report_json(const EffectivenessReport& report) {
    nlohmann::json j;
    j["gamma1"] = report.gamma1;
    j["gamma2"] = report.gamma2;
    j["eU"] = report.eU;
    j["eR"] = report.eR;
    j["eTotal"] = report.eTotal;
    j["costEffectiveness"] = report.costEffectiveness;
    j["dt"] = report.dt;
    return j.dump();
}

}  // namespace rcsim
