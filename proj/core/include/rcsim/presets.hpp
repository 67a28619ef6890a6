#pragma once

#include <string>
#include <vector>

#include "rcsim/experiment.hpp"

namespace rcsim::presets {

// The three networks used by every bundled n=50-scale study: a small-world
// graph, a scale-free graph, and the packaged 49-node stand-in for a real
// contact network (data/realistic49.edges).
struct Networks {
    DirectedGraph sw;  // watts_strogatz(50, 4, 0.1, seed=1)
    DirectedGraph sf;  // barabasi_albert(50, 2, seed=1)
    DirectedGraph re;  // loaded from the edge-list path, symmetric
};

inline constexpr std::uint32_t kNetworkSeed = 1;

Networks canonical_networks(const std::string& realistic_edge_list_path);

// Study 1: nine instances over the named small graphs. Initial state is
// R_i(0) = T_i(0) = 0.1 everywhere, as in every bundled study.
std::vector<RCInstance> small_graph_instances();

// Study 2: three instances over the canonical networks.
std::vector<RCInstance> network_instances(const Networks& nets);

// Studies 3-9: one-parameter sweeps, three rows each, with the trend the
// suite asserts for the row's cost-effectiveness sequence.
enum class Trend { NonDecreasing, NonIncreasing, SinglePeaked };

struct TrendStudy {
    std::string name;  // e.g. "e3_beta1_sw_sf"
    SweepSpec spec;
    Trend expected = Trend::NonDecreasing;
};

std::vector<TrendStudy> trend_studies(const Networks& nets);

}  // namespace rcsim::presets
