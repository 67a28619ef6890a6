#include "rcsim/presets.hpp"

#include <stdexcept>

namespace rcsim::presets {

namespace {

RCInstance make_instance(DirectedGraph gr, DirectedGraph gt, double beta1, double beta2,
                         double delta, double horizon, double c1, double c2, double budget) {
    RCInstance inst;
    inst.gR = std::move(gr);
    inst.gT = std::move(gt);
    inst.beta1 = beta1;
    inst.beta2 = beta2;
    inst.delta = delta;
    inst.horizon = horizon;
    inst.c1 = c1;
    inst.c2 = c2;
    inst.budget = budget;
    inst.init = ExpectedState::uniform(inst.gR.n(), 0.1, 0.1);
    inst.validate();
    return inst;
}

std::vector<double> steps(double from, double to, double by) {
    std::vector<double> v;
    for (int k = 0;; ++k) {
        const double x = from + k * by;
        if (x > to + 1e-12 * std::max(1.0, std::abs(to))) break;
        v.push_back(x);
    }
    return v;
}

}  // namespace

Networks canonical_networks(const std::string& realistic_edge_list_path) {
    Networks nets{watts_strogatz(50, 4, 0.1, kNetworkSeed),
                  barabasi_albert(50, 2, kNetworkSeed),
                  load_edge_list(realistic_edge_list_path, /*symmetric=*/true)};
    nets.sw.set_label("G_SW");
    nets.sf.set_label("G_SF");
    nets.re.set_label("G_RE");
    if (!nets.re.is_symmetric())
        throw std::domain_error("realistic network must be symmetric");
    return nets;
}

std::vector<RCInstance> small_graph_instances() {
    auto g = [](int i) { return named_small_graph(i); };
    std::vector<RCInstance> v;
    v.reserve(9);
    //                      gR    gT    beta1 beta2 delta   T   c1  c2   B
    v.push_back(make_instance(g(1), g(1), 0.7, 0.1, 0.1, 35.0, 8.0, 3.0, 10.0));
    v.push_back(make_instance(g(2), g(3), 0.7, 0.6, 0.7, 55.0, 4.0, 8.0, 6.0));
    v.push_back(make_instance(g(3), g(2), 0.4, 0.3, 0.3, 35.0, 4.0, 6.0, 6.0));
    v.push_back(make_instance(g(4), g(5), 0.9, 0.7, 0.7, 50.0, 3.0, 3.0, 6.0));
    v.push_back(make_instance(g(5), g(6), 0.1, 0.8, 0.4, 50.0, 5.0, 5.0, 6.0));
    v.push_back(make_instance(g(6), g(7), 0.5, 0.8, 0.5, 70.0, 2.0, 4.0, 6.0));
    v.push_back(make_instance(g(7), g(8), 0.1, 0.4, 0.2, 40.0, 4.0, 3.0, 4.0));
    v.push_back(make_instance(g(8), g(9), 0.5, 0.5, 0.7, 70.0, 9.0, 9.0, 12.0));
    v.push_back(make_instance(g(9), g(4), 0.9, 0.6, 0.1, 45.0, 3.0, 3.0, 6.0));
    return v;
}

std::vector<RCInstance> network_instances(const Networks& nets) {
    std::vector<RCInstance> v;
    v.reserve(3);
    v.push_back(make_instance(nets.sw, nets.sf, 0.4, 0.7, 0.5, 30.0, 3.0, 9.0, 18.0));
    v.push_back(make_instance(nets.sf, nets.sw, 0.6, 0.8, 0.2, 50.0, 2.0, 2.0, 2.0));
    v.push_back(make_instance(nets.re, nets.re, 0.3, 0.4, 0.4, 70.0, 5.0, 6.0, 2.0));
    return v;
}

std::vector<TrendStudy> trend_studies(const Networks& nets) {
    std::vector<TrendStudy> studies;
    auto add = [&](std::string name, RCInstance base, SweepParameter param,
                   std::vector<double> values, Trend expected) {
        SweepSpec spec;
        spec.base = std::move(base);
        spec.parameter = param;
        spec.values = std::move(values);
        studies.push_back({std::move(name), std::move(spec), expected});
    };
    const auto tenths = steps(0.1, 0.9, 0.1);
    const auto horizons = steps(10.0, 30.0, 2.0);
    const auto budgets = steps(2.0, 18.0, 2.0);
    const auto costs = steps(1.0, 9.0, 1.0);

    // e3: cost effectiveness vs the first rumor-spreading rate.
    add("e3_beta1_sw_sf", make_instance(nets.sw, nets.sf, 0.1, 0.1, 0.3, 10.0, 1.0, 2.0, 6.0),
        SweepParameter::Beta1, tenths, Trend::NonDecreasing);
    add("e3_beta1_sf_sw", make_instance(nets.sf, nets.sw, 0.1, 0.2, 0.2, 15.0, 2.0, 3.0, 8.0),
        SweepParameter::Beta1, tenths, Trend::NonDecreasing);
    add("e3_beta1_re_re", make_instance(nets.re, nets.re, 0.1, 0.3, 0.1, 20.0, 3.0, 4.0, 10.0),
        SweepParameter::Beta1, tenths, Trend::NonDecreasing);

    // e4: vs the second rumor-spreading rate.
    add("e4_beta2_sw_sf", make_instance(nets.sw, nets.sf, 0.4, 0.1, 0.1, 10.0, 1.0, 2.0, 6.0),
        SweepParameter::Beta2, tenths, Trend::NonDecreasing);
    add("e4_beta2_sf_sw", make_instance(nets.sf, nets.sw, 0.5, 0.1, 0.2, 15.0, 2.0, 3.0, 8.0),
        SweepParameter::Beta2, tenths, Trend::NonDecreasing);
    add("e4_beta2_re_re", make_instance(nets.re, nets.re, 0.6, 0.1, 0.3, 20.0, 3.0, 4.0, 10.0),
        SweepParameter::Beta2, tenths, Trend::NonDecreasing);

    // e5: vs the forgetting rate.
    add("e5_delta_sw_sf", make_instance(nets.sw, nets.sf, 0.2, 0.4, 0.1, 10.0, 1.0, 2.0, 6.0),
        SweepParameter::Delta, tenths, Trend::NonIncreasing);
    add("e5_delta_sf_sw", make_instance(nets.sf, nets.sw, 0.3, 0.5, 0.1, 15.0, 2.0, 3.0, 8.0),
        SweepParameter::Delta, tenths, Trend::NonIncreasing);
    add("e5_delta_re_re", make_instance(nets.re, nets.re, 0.4, 0.3, 0.1, 20.0, 3.0, 4.0, 10.0),
        SweepParameter::Delta, tenths, Trend::NonIncreasing);

    // e6: vs the duration.
    add("e6_horizon_sw_sf", make_instance(nets.sw, nets.sf, 0.3, 0.5, 0.1, 10.0, 1.0, 2.0, 6.0),
        SweepParameter::Horizon, horizons, Trend::NonDecreasing);
    add("e6_horizon_sf_sw", make_instance(nets.sf, nets.sw, 0.4, 0.6, 0.2, 10.0, 2.0, 3.0, 8.0),
        SweepParameter::Horizon, horizons, Trend::NonDecreasing);
    add("e6_horizon_re_re", make_instance(nets.re, nets.re, 0.6, 0.4, 0.3, 10.0, 3.0, 4.0, 10.0),
        SweepParameter::Horizon, horizons, Trend::NonDecreasing);

    // e7: vs the budget per unit time.
    add("e7_budget_sw_sf", make_instance(nets.sw, nets.sf, 0.4, 0.2, 0.8, 60.0, 7.0, 9.0, 2.0),
        SweepParameter::Budget, budgets, Trend::SinglePeaked);
    add("e7_budget_sf_sw", make_instance(nets.sf, nets.sw, 0.8, 0.6, 0.8, 70.0, 8.0, 8.0, 2.0),
        SweepParameter::Budget, budgets, Trend::SinglePeaked);
    add("e7_budget_re_re", make_instance(nets.re, nets.re, 0.9, 0.2, 0.5, 65.0, 5.0, 7.0, 2.0),
        SweepParameter::Budget, budgets, Trend::SinglePeaked);

    // e8: vs the first cost coefficient.
    add("e8_c1_sw_sf", make_instance(nets.sw, nets.sf, 0.5, 0.4, 0.8, 50.0, 1.0, 5.0, 2.0),
        SweepParameter::C1, costs, Trend::NonIncreasing);
    add("e8_c1_sf_sw", make_instance(nets.sf, nets.sw, 0.3, 0.9, 0.6, 30.0, 1.0, 5.0, 12.0),
        SweepParameter::C1, costs, Trend::NonIncreasing);
    add("e8_c1_re_re", make_instance(nets.re, nets.re, 0.4, 0.8, 0.2, 50.0, 1.0, 8.0, 14.0),
        SweepParameter::C1, costs, Trend::NonIncreasing);

    // e9: vs the second cost coefficient.
    add("e9_c2_sw_sf", make_instance(nets.sw, nets.sf, 0.7, 0.3, 0.9, 55.0, 2.0, 1.0, 12.0),
        SweepParameter::C2, costs, Trend::NonDecreasing);
    add("e9_c2_sf_sw", make_instance(nets.sf, nets.sw, 0.3, 0.1, 0.2, 30.0, 7.0, 1.0, 16.0),
        SweepParameter::C2, costs, Trend::NonDecreasing);
    add("e9_c2_re_re", make_instance(nets.re, nets.re, 0.4, 0.2, 0.4, 50.0, 5.0, 1.0, 4.0),
        SweepParameter::C2, costs, Trend::NonDecreasing);

    return studies;
}

}  // namespace rcsim::presets
