// rcsim: command-line front end for the rumor-containment toolkit.
//
// Subcommands:
//   graph gen|convert   build or convert network files
//   simulate            integrate the spreading dynamics, write a CSV trajectory
//   optimize            solve one containment problem, write a JSON result
//   sweep               solve across one varying parameter, write CSV + manifest
//
// Exit codes: 0 success, 2 usage/config error, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rcsim/config.hpp"
#include "rcsim/errors.hpp"
#include "rcsim/presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct GraphGenArgs {
    std::string model;
    int index = 1;
    int n = 50, k = 4, m = 2;
    double p = 0.1;
    std::uint32_t seed = 1;
    std::string out;
    std::string format;  // "", "edges" or "json"
};

bool wants_json(const std::string& format, const std::string& path) {
    if (format == "json") return true;
    if (format == "edges") return false;
    return std::filesystem::path(path).extension() == ".json";
}

void write_graph(const rcsim::DirectedGraph& g, const std::string& out,
                 const std::string& format) {
    if (wants_json(format, out))
        rcsim::save_graph_json(g, out);
    else
        rcsim::save_edge_list(g, out);
}

rcsim::DirectedGraph read_graph(const std::string& in, bool symmetric) {
    if (std::filesystem::path(in).extension() == ".json") return rcsim::load_graph_json(in);
    return rcsim::load_edge_list(in, symmetric);
}

int run_graph_gen(const GraphGenArgs& a) {
    rcsim::DirectedGraph g(1);
    if (a.model == "named")
        g = rcsim::named_small_graph(a.index);
    else if (a.model == "ws")
        g = rcsim::watts_strogatz(a.n, a.k, a.p, a.seed);
    else if (a.model == "ba")
        g = rcsim::barabasi_albert(a.n, a.m, a.seed);
    else
        throw std::domain_error("unknown graph model '" + a.model + "' (named|ws|ba)");
    write_graph(g, a.out, a.format);
    return kExitOk;
}

double parse_range_value(const std::string& text, const char* what) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::domain_error(std::string("bad ") + what + ": " + text);
    return v;
}

// START:STOP:STEP, inclusive of STOP within 1e-12 relative.
std::vector<double> parse_value_range(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::domain_error("--values expects START:STOP:STEP, got '" + text + "'");
    const double start = parse_range_value(text.substr(0, c1), "START");
    const double stop = parse_range_value(text.substr(c1 + 1, c2 - c1 - 1), "STOP");
    const double step = parse_range_value(text.substr(c2 + 1), "STEP");
    if (!(step > 0.0)) throw std::domain_error("--values STEP must be positive");
    if (stop < start) throw std::domain_error("--values STOP must be >= START");

    std::vector<double> values;
    const double tol = 1e-12 * std::max(1.0, std::abs(stop));
    for (int k = 0;; ++k) {
        const double v = start + static_cast<double>(k) * step;
        if (v > stop + tol) break;
        values.push_back(v);
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rumor-containment simulator and strategy optimizer"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "Worker threads (0 = RCSIM_THREADS env or hardware count)");

    // graph
    auto* graph = app.add_subcommand("graph", "Generate or convert networks");
    graph->require_subcommand(1);
    GraphGenArgs gen_args;
    auto* gen = graph->add_subcommand("gen", "Generate a network file");
    gen->add_option("--model", gen_args.model, "named|ws|ba")->required();
    gen->add_option("--index", gen_args.index, "named: catalog index 1..9");
    gen->add_option("--n", gen_args.n, "ws/ba: node count");
    gen->add_option("--k", gen_args.k, "ws: even lattice degree");
    gen->add_option("--p", gen_args.p, "ws: rewiring probability");
    gen->add_option("--m", gen_args.m, "ba: edges per arriving node");
    gen->add_option("--seed", gen_args.seed, "ws/ba: RNG seed");
    gen->add_option("--out", gen_args.out, "Output path")->required();
    gen->add_option("--format", gen_args.format, "edges|json (default: by extension)");

    std::string conv_in, conv_out, conv_format;
    bool conv_symmetric = false;
    auto* conv = graph->add_subcommand("convert", "Convert between edge-list and JSON");
    conv->add_option("--in", conv_in, "Input graph file")->required();
    conv->add_option("--out", conv_out, "Output graph file")->required();
    conv->add_option("--format", conv_format, "edges|json (default: by extension)");
    conv->add_flag("--symmetric", conv_symmetric, "Add reverse arcs when reading an edge list");

    // simulate
    std::string sim_config, sim_out;
    double sim_gamma1 = 0.0, sim_gamma2 = 0.0, sim_dt = 0.0;
    bool sim_free = false;
    auto* sim = app.add_subcommand("simulate", "Integrate the dynamics for one strategy");
    sim->add_option("--config", sim_config, "Run config JSON")->required();
    sim->add_option("--gamma1", sim_gamma1, "First truth-spreading rate")->required();
    sim->add_option("--gamma2", sim_gamma2, "Second truth-spreading rate")->required();
    sim->add_option("--dt", sim_dt, "Override integrator step");
    sim->add_flag("--free-strategy", sim_free,
                  "Allow strategies that do not spend the exact budget");
    sim->add_option("--out", sim_out, "Trajectory CSV path")->required();

    // optimize
    std::string opt_config, opt_out;
    bool opt_profile = false;
    auto* opt = app.add_subcommand("optimize", "Find the most effective strategy");
    opt->add_option("--config", opt_config, "Run config JSON")->required();
    opt->add_option("--out", opt_out, "Result JSON path")->required();
    opt->add_flag("--profile", opt_profile, "Record the (gamma1, eTotal) grid profile");

    // sweep
    std::string swp_config, swp_param, swp_values, swp_out;
    auto* swp = app.add_subcommand("sweep", "Solve across one varying parameter");
    swp->add_option("--config", swp_config, "Run config JSON")->required();
    swp->add_option("--param", swp_param, "beta1|beta2|delta|horizon|budget|c1|c2")->required();
    swp->add_option("--values", swp_values, "START:STOP:STEP (STOP inclusive)")->required();
    swp->add_option("--out", swp_out, "Sweep CSV path (manifest written alongside)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_graph_gen(gen_args);
        if (conv->parsed()) {
            write_graph(read_graph(conv_in, conv_symmetric), conv_out, conv_format);
            return kExitOk;
        }

        if (sim->parsed()) {
            rcsim::RunConfig cfg = rcsim::load_config(sim_config);
            if (threads != 0) cfg.threads = threads;
            if (sim_dt != 0.0) cfg.dt = sim_dt;
            const rcsim::RCInstance inst = rcsim::build_instance(cfg);
            const rcsim::Strategy strategy{sim_gamma1, sim_gamma2};
            if (!sim_free && !rcsim::on_budget_line(inst, strategy)) {
                std::cerr << "rcsim: strategy (" << sim_gamma1 << ", " << sim_gamma2
                          << ") does not spend the budget exactly (c1*g1 + c2*g2 = B); "
                             "pass --free-strategy to simulate it anyway\n";
                return kExitUsage;
            }
            rcsim::URTUParams params;
            params.beta1 = inst.beta1;
            params.beta2 = inst.beta2;
            params.gamma1 = sim_gamma1;
            params.gamma2 = sim_gamma2;
            params.delta = inst.delta;
            const double dt = cfg.dt != 0.0 ? cfg.dt : rcsim::default_dt(inst.horizon);
            const rcsim::Trajectory traj =
                rcsim::integrate(inst.init, params, inst.gR, inst.gT, inst.horizon, dt);
            auto meta = rcsim::run_metadata_lines(cfg);
            meta.push_back("gamma1 " + std::to_string(sim_gamma1) + " gamma2 " +
                           std::to_string(sim_gamma2));
            rcsim::save_trajectory_csv(traj, sim_out, meta);
            return kExitOk;
        }

        if (opt->parsed()) {
            rcsim::RunConfig cfg = rcsim::load_config(opt_config);
            if (threads != 0) cfg.threads = threads;
            const rcsim::RCInstance inst = rcsim::build_instance(cfg);
            rcsim::SolveSettings settings = rcsim::solve_settings(cfg);
            settings.profile = opt_profile;
            const rcsim::StrategyResult result = rcsim::solve_rc(inst, settings);
            std::ofstream out(opt_out);
            if (!out) throw rcsim::ParseError(opt_out, 0, "cannot open file for writing");
            out << rcsim::result_json_with_meta(result, cfg) << "\n";
            return kExitOk;
        }

        if (swp->parsed()) {
            rcsim::RunConfig cfg = rcsim::load_config(swp_config);
            if (threads != 0) cfg.threads = threads;
            const auto param = rcsim::sweep_parameter_from(swp_param);
            if (!param) {
                std::string names;
                for (const auto& n : rcsim::sweep_parameter_names()) names += " " + n;
                std::cerr << "rcsim: unknown sweep parameter '" << swp_param
                          << "'; valid names:" << names << "\n";
                return kExitUsage;
            }
            rcsim::SweepSpec spec;
            spec.base = rcsim::build_instance(cfg);
            spec.parameter = *param;
            spec.values = parse_value_range(swp_values);
            const rcsim::SolveSettings settings = rcsim::solve_settings(cfg);
            const rcsim::SweepResult result = rcsim::run_sweep(spec, settings);
            rcsim::save_sweep_csv(result, swp_out);
            std::filesystem::path manifest(swp_out);
            manifest.replace_extension(".manifest.json");
            std::ofstream mf(manifest);
            if (!mf) throw rcsim::ParseError(manifest.string(), 0, "cannot open file for writing");
            mf << rcsim::sweep_manifest_json(cfg, spec, settings, swp_out);
            return kExitOk;
        }
    } catch (const rcsim::IntegrationError& e) {
        std::cerr << "rcsim: integration failed: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const rcsim::ParseError& e) {
        std::cerr << "rcsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "rcsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rcsim: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
