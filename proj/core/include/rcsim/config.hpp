#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcsim/experiment.hpp"
#include "rcsim/optimizer.hpp"

namespace rcsim {

extern const char* const kToolName;
extern const char* const kToolVersion;

// How to obtain one network. Exactly one model; the seed falls back to the
// config-level default seed when a random model omits it.
struct GraphSpec {
    enum class Model { Named, WattsStrogatz, BarabasiAlbert, EdgeList };
    Model model = Model::Named;
    int index = 1;                      // named
    int n = 0, k = 0, m = 0;            // ws / ba sizes
    double p = 0.0;                     // ws rewiring probability
    std::optional<std::uint32_t> seed;  // ws / ba
    std::string path;                   // edgelist
    bool symmetric = false;             // edgelist: add reverse arcs
};

// Declarative description of one containment problem plus solver settings.
// This is the file format consumed by the CLI; parsing is strict (unknown
// keys are rejected) and serializing echoes every field with its resolved
// default so a config round-trips losslessly.
struct RunConfig {
    GraphSpec rumorGraph;
    GraphSpec truthGraph;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double delta = 0.0;
    double horizon = 0.0;
    double budget = 0.0;
    double c1 = 1.0;
    double c2 = 1.0;
    // Initial state: either one uniform value used for every R_i(0) and
    // T_i(0), or explicit per-node vectors.
    double initUniform = 0.1;
    std::vector<double> initR, initT;  // both empty <=> uniform
    double dt = 0.0;        // 0 -> default_dt(horizon)
    int gridPoints = 101;
    double refineTol = 0.0;  // 0 -> 1e-6 * (budget/c1)
    std::uint32_t seed = 1;  // default seed for graph specs without one
    int threads = 0;         // 0 -> RCSIM_THREADS or hardware concurrency

    // Directory of the file this config was loaded from; relative edge-list
    // paths resolve against it. Not part of the JSON schema.
    std::string baseDir;
};

RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

// Echo with all defaults resolved to explicit values.
std::string config_json(const RunConfig& cfg);

DirectedGraph build_graph(const GraphSpec& spec, std::uint32_t default_seed,
                          const std::string& base_dir = "");
RCInstance build_instance(const RunConfig& cfg);

// Solver settings implied by the config (dt/refineTol resolved at solve
// time, threads resolved via resolve_threads).
SolveSettings solve_settings(const RunConfig& cfg);

// Output assembly for the CLI: every file carries enough metadata (tool
// version + config echo) to be reproduced bit-identically.
std::vector<std::string> run_metadata_lines(const RunConfig& cfg);
std::string result_json_with_meta(const StrategyResult& result, const RunConfig& cfg);
std::string sweep_manifest_json(const RunConfig& cfg, const SweepSpec& spec,
                                const SolveSettings& settings, const std::string& csv_path);

}  // namespace rcsim
