#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "rcsim/optimizer.hpp"

using rcsim::RCInstance;
using rcsim::SolveSettings;
using rcsim::StrategyResult;

namespace {

RCInstance m1() {
    RCInstance inst;
    inst.gR = rcsim::named_small_graph(1);
    inst.gT = rcsim::named_small_graph(1);
    inst.beta1 = 0.7;
    inst.beta2 = 0.1;
    inst.delta = 0.1;
    inst.horizon = 35.0;
    inst.budget = 10.0;
    inst.c1 = 8.0;
    inst.c2 = 3.0;
    inst.init = rcsim::ExpectedState::uniform(2, 0.1, 0.1);
    return inst;
}

RCInstance m2() {
    RCInstance inst;
    inst.gR = rcsim::named_small_graph(2);
    inst.gT = rcsim::named_small_graph(3);
    inst.beta1 = 0.7;
    inst.beta2 = 0.6;
    inst.delta = 0.7;
    inst.horizon = 55.0;
    inst.budget = 6.0;
    inst.c1 = 4.0;
    inst.c2 = 8.0;
    inst.init = rcsim::ExpectedState::uniform(3, 0.1, 0.1);
    return inst;
}

// Brute-force dense grid over [0, B/c1].
struct GridBest {
    double gamma1 = 0.0;
    double value = -1.0;
};
GridBest dense_grid_max(const RCInstance& inst, int points, double dt) {
    GridBest best;
    const double hi = inst.max_gamma1();
    for (int i = 0; i < points; ++i) {
        const double g1 =
            i + 1 == points ? hi : hi * static_cast<double>(i) / static_cast<double>(points - 1);
        const double e =
            rcsim::effectiveness(inst, {g1, rcsim::gamma2_of(inst, g1)}, dt).eTotal;
        if (e > best.value) best = {g1, e};
    }
    return best;
}

}  // namespace

TEST_CASE("solve_rc beats the dense grid oracle") {
    for (const RCInstance& inst : {m1(), m2()}) {
        SolveSettings settings;
        settings.dt = 0.01;
        const StrategyResult res = rcsim::solve_rc(inst, settings);
        const GridBest oracle = dense_grid_max(inst, 1001, 0.01);

        CHECK(res.eTotal >= oracle.value * (1.0 - 1e-6));
        // argmax within max(refineTol, oracle grid spacing)
        const double spacing = inst.max_gamma1() / 1000.0;
        const double tol = std::max(1e-6 * inst.max_gamma1(), spacing);
        CHECK(std::abs(res.best.gamma1 - oracle.gamma1) <= tol);
    }
}

TEST_CASE("returned strategies are feasible") {
    const RCInstance inst = m1();
    const StrategyResult res = rcsim::solve_rc(inst);
    CHECK(res.best.gamma1 >= 0.0);
    CHECK(res.best.gamma2 >= 0.0);
    const double spend = inst.c1 * res.best.gamma1 + inst.c2 * res.best.gamma2;
    CHECK(std::abs(spend - inst.budget) <= 1e-12 * inst.budget);
    CHECK(res.costEffectiveness ==
          doctest::Approx(res.eTotal / (inst.budget * inst.horizon)).epsilon(1e-15));
}

TEST_CASE("oracle dominance over any coarser grid") {
    const RCInstance inst = m2();
    SolveSettings settings;
    settings.dt = 0.02;
    const StrategyResult res = rcsim::solve_rc(inst, settings);
    const GridBest coarse = dense_grid_max(inst, 11, 0.02);
    CHECK(res.eTotal >= coarse.value - 1e-9);
}

TEST_CASE("degenerate zero budget") {
    RCInstance inst = m1();
    inst.budget = 0.0;
    const StrategyResult res = rcsim::solve_rc(inst);
    CHECK(res.best.gamma1 == 0.0);
    CHECK(res.best.gamma2 == 0.0);
    CHECK(res.eTotal == 0.0);
    CHECK(res.evaluations == 1);
}

TEST_CASE("determinism and endpoint coverage") {
    const RCInstance inst = m1();
    SolveSettings settings;
    settings.profile = true;
    settings.gridPoints = 21;
    settings.dt = 0.02;

    const StrategyResult a = rcsim::solve_rc(inst, settings);
    const StrategyResult b = rcsim::solve_rc(inst, settings);
    CHECK(a.best.gamma1 == b.best.gamma1);
    CHECK(a.eTotal == b.eTotal);
    CHECK(a.evaluations == b.evaluations);
    CHECK(rcsim::result_json(a) == rcsim::result_json(b));

    REQUIRE(a.gridProfile.size() == 21);
    CHECK(a.gridProfile.front().first == 0.0);
    CHECK(a.gridProfile.back().first == inst.max_gamma1());

    // more workers, same bits
    SolveSettings threaded = settings;
    threaded.threads = 4;
    const StrategyResult c = rcsim::solve_rc(inst, threaded);
    CHECK(rcsim::result_json(c) == rcsim::result_json(a));
}

TEST_CASE("grid refinement stability") {
    const RCInstance inst = m1();
    SolveSettings coarse;
    coarse.gridPoints = 101;
    coarse.dt = 0.01;
    SolveSettings fine;
    fine.gridPoints = 1001;
    fine.dt = 0.01;
    const double a = rcsim::solve_rc(inst, coarse).costEffectiveness;
    const double b = rcsim::solve_rc(inst, fine).costEffectiveness;
    CHECK(std::abs(a - b) <= 1e-4 * std::abs(b));
}

TEST_CASE("highest_cost_effectiveness") {
    RCInstance dead = m1();
    dead.init = rcsim::ExpectedState::uniform(2, 0.1, 0.0);
    CHECK(rcsim::highest_cost_effectiveness(dead) == 0.0);

    const double ce = rcsim::highest_cost_effectiveness(m1());
    CHECK(ce > 0.0);
    const GridBest oracle = dense_grid_max(m1(), 1001, 0.01);
    CHECK(ce >= oracle.value / (10.0 * 35.0) * (1.0 - 1e-6));
}

TEST_CASE("settings validation") {
    SolveSettings bad;
    bad.gridPoints = 1;
    CHECK_THROWS_AS(rcsim::solve_rc(m1(), bad), std::domain_error);
    SolveSettings negTol;
    negTol.refineTol = -1.0;
    CHECK_THROWS_AS(rcsim::solve_rc(m1(), negTol), std::domain_error);
}

TEST_CASE("result JSON layout") {
    SolveSettings settings;
    settings.profile = true;
    settings.gridPoints = 11;
    settings.dt = 0.05;
    const StrategyResult res = rcsim::solve_rc(m1(), settings);
    const std::string j = rcsim::result_json(res, R"({"tool":"x"})");
    for (const char* key :
         {"\"gamma1\"", "\"gamma2\"", "\"eU\"", "\"eR\"", "\"eTotal\"",
          "\"costEffectiveness\"", "\"dt\"", "\"evaluations\"", "\"gridProfile\"",
          "\"meta\""})
        CHECK(j.find(key) != std::string::npos);
}
