#include "rcsim/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "rcsim/parallel.hpp"

namespace rcsim {

namespace {

// Lexicographic best: higher effectiveness wins, equal effectiveness goes to
// the smaller gamma1. Order of candidate arrival does not matter.
struct BestTracker {
    double gamma1 = 0.0;
    double value = -1.0;
    bool seeded = false;

    void offer(double g1, double e) {
        if (!seeded || e > value || (e == value && g1 < gamma1)) {
            gamma1 = g1;
            value = e;
            seeded = true;
        }
    }
};

}  // namespace

StrategyResult solve_rc(const RCInstance& instance, const SolveSettings& settings) {
    instance.validate();
    const double dt = settings.dt != 0.0 ? settings.dt : default_dt(instance.horizon);

    long evaluations = 0;
    auto objective = [&](double g1) {
        ++evaluations;
        return effectiveness(instance, Strategy{g1, gamma2_of(instance, g1)}, dt);
    };
    auto finish = [&](double g1) {
        const EffectivenessReport rep = objective(g1);
        StrategyResult res;
        res.best = Strategy{rep.gamma1, rep.gamma2};
        res.eU = rep.eU;
        res.eR = rep.eR;
        res.eTotal = rep.eTotal;
        res.costEffectiveness = rep.costEffectiveness;
        res.dt = rep.dt;
        return res;
    };

    if (instance.budget == 0.0) {  // admissible set is the single point (0, 0)
        StrategyResult res = finish(0.0);
        if (settings.profile) res.gridProfile.emplace_back(0.0, res.eTotal);
        res.evaluations = evaluations;
        return res;
    }

    if (settings.gridPoints < 2)
        throw std::domain_error("gridPoints must be at least 2");
    const double hi = instance.max_gamma1();
    const double tol = settings.refineTol != 0.0 ? settings.refineTol : 1e-6 * hi;
    if (!(tol > 0.0)) throw std::domain_error("refineTol must be positive");

    const std::size_t grid_n = static_cast<std::size_t>(settings.gridPoints);
    std::vector<double> xs(grid_n), es(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i)
        xs[i] = i + 1 == grid_n ? hi
                                : hi * static_cast<double>(i) / static_cast<double>(grid_n - 1);

    // Grid phase. Workers write disjoint slots, so the worker count cannot
    // change the outcome; the evaluation counter is fixed up afterwards.
    parallel_for(grid_n, settings.threads, [&](std::size_t i) {
        es[i] = effectiveness(instance, Strategy{xs[i], gamma2_of(instance, xs[i])}, dt).eTotal;
    });
    evaluations += static_cast<long>(grid_n);

    // Ascending scan with strict '>' keeps the smaller gamma1 on ties.
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < grid_n; ++i)
        if (es[i] > es[best_idx]) best_idx = i;
    BestTracker best;
    best.offer(xs[best_idx], es[best_idx]);

    // Golden-section refinement on the bracket spanned by the best grid
    // point's neighbors.
    double a = xs[best_idx == 0 ? 0 : best_idx - 1];
    double b = xs[best_idx + 1 >= grid_n ? grid_n - 1 : best_idx + 1];
    if (b - a > tol) {
        constexpr double invphi = 0.6180339887498949;
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        double fc = objective(c).eTotal;
        double fd = objective(d).eTotal;
        best.offer(c, fc);
        best.offer(d, fd);
        int guard = 0;
        while (b - a > tol && ++guard < 300) {
            if (fc >= fd) {  // >= shrinks toward smaller gamma1 on ties
                b = d;
                d = c;
                fd = fc;
                c = b - invphi * (b - a);
                fc = objective(c).eTotal;
                best.offer(c, fc);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + invphi * (b - a);
                fd = objective(d).eTotal;
                best.offer(d, fd);
            }
        }
    }

    StrategyResult res = finish(best.gamma1);
    res.evaluations = evaluations;
    if (settings.profile) {
        res.gridProfile.reserve(grid_n);
        for (std::size_t i = 0; i < grid_n; ++i) res.gridProfile.emplace_back(xs[i], es[i]);
    }
    return res;
}

double highest_cost_effectiveness(const RCInstance& instance) {
    return solve_rc(instance).costEffectiveness;
}

std::string result_json(const StrategyResult& result, const std::string& meta_json) {
    nlohmann::json j;
    j["gamma1"] = result.best.gamma1;
    j["gamma2"] = result.best.gamma2;
    j["eU"] = result.eU;
    j["eR"] = result.eR;
    j["eTotal"] = result.eTotal;
    j["costEffectiveness"] = result.costEffectiveness;
    j["dt"] = result.dt;
    j["evaluations"] = result.evaluations;
    if (!result.gridProfile.empty()) {
        auto prof = nlohmann::json::array();
        for (auto [g1, e] : result.gridProfile) prof.push_back({g1, e});
        j["gridProfile"] = std::move(prof);
    }
    if (!meta_json.empty()) j["meta"] = nlohmann::json::parse(meta_json);
    return j.dump();
}

}  // namespace rcsim
