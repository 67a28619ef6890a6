#include "rcsim/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcsim/errors.hpp"
#include "rcsim/parallel.hpp"

namespace rcsim {

const char* const kToolName = "rcsim";
const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& source, const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ParseError(source, 0, "unknown key '" + item.key() + "' in " + where);
}

double get_number(const json& obj, const char* key, const std::string& source) {
    if (!obj.contains(key)) throw ParseError(source, 0, std::string("missing key '") + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ParseError(source, 0, std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

GraphSpec parse_graph_spec(const json& j, const std::string& source, const std::string& which) {
    if (!j.is_object())
        throw ParseError(source, 0, which + " must be an object with a \"model\" key");
    if (!j.contains("model"))
        throw ParseError(source, 0, which + " is missing \"model\"");
    const std::string model = j.at("model").get<std::string>();

    GraphSpec spec;
    if (model == "named") {
        reject_unknown_keys(j, {"model", "index"}, source, which);
        spec.model = GraphSpec::Model::Named;
        spec.index = static_cast<int>(get_number(j, "index", source));
    } else if (model == "ws") {
        reject_unknown_keys(j, {"model", "n", "k", "p", "seed"}, source, which);
        spec.model = GraphSpec::Model::WattsStrogatz;
        spec.n = static_cast<int>(get_number(j, "n", source));
        spec.k = static_cast<int>(get_number(j, "k", source));
        spec.p = get_number(j, "p", source);
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint32_t>();
    } else if (model == "ba") {
        reject_unknown_keys(j, {"model", "n", "m", "seed"}, source, which);
        spec.model = GraphSpec::Model::BarabasiAlbert;
        spec.n = static_cast<int>(get_number(j, "n", source));
        spec.m = static_cast<int>(get_number(j, "m", source));
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint32_t>();
    } else if (model == "edgelist") {
        reject_unknown_keys(j, {"model", "path", "symmetric"}, source, which);
        spec.model = GraphSpec::Model::EdgeList;
        if (!j.contains("path")) throw ParseError(source, 0, which + " is missing \"path\"");
        spec.path = j.at("path").get<std::string>();
        spec.symmetric = j.value("symmetric", false);
    } else {
        throw ParseError(source, 0, which + ": unknown model '" + model +
                                        "' (expected named|ws|ba|edgelist)");
    }
    return spec;
}

json graph_spec_json(const GraphSpec& spec, std::uint32_t default_seed) {
    json j;
    switch (spec.model) {
        case GraphSpec::Model::Named:
            j["model"] = "named";
            j["index"] = spec.index;
            break;
        case GraphSpec::Model::WattsStrogatz:
            j["model"] = "ws";
            j["n"] = spec.n;
            j["k"] = spec.k;
            j["p"] = spec.p;
            j["seed"] = spec.seed.value_or(default_seed);
            break;
        case GraphSpec::Model::BarabasiAlbert:
            j["model"] = "ba";
            j["n"] = spec.n;
            j["m"] = spec.m;
            j["seed"] = spec.seed.value_or(default_seed);
            break;
        case GraphSpec::Model::EdgeList:
            j["model"] = "edgelist";
            j["path"] = spec.path;
            j["symmetric"] = spec.symmetric;
            break;
    }
    return j;
}

json config_json_object(const RunConfig& cfg) {
    json j;
    j["rumorGraph"] = graph_spec_json(cfg.rumorGraph, cfg.seed);
    j["truthGraph"] = graph_spec_json(cfg.truthGraph, cfg.seed);
    j["beta1"] = cfg.beta1;
    j["beta2"] = cfg.beta2;
    j["delta"] = cfg.delta;
    j["horizon"] = cfg.horizon;
    j["budget"] = cfg.budget;
    j["c1"] = cfg.c1;
    j["c2"] = cfg.c2;
    if (cfg.initR.empty()) {
        j["init"] = cfg.initUniform;
    } else {
        j["init"] = json{{"R", cfg.initR}, {"T", cfg.initT}};
    }
    j["dt"] = cfg.dt != 0.0 ? cfg.dt : default_dt(cfg.horizon);
    j["gridPoints"] = cfg.gridPoints;
    j["refineTol"] =
        cfg.refineTol != 0.0 ? cfg.refineTol : (cfg.c1 > 0.0 ? 1e-6 * (cfg.budget / cfg.c1) : 0.0);
    j["seed"] = cfg.seed;
    j["threads"] = resolve_threads(cfg.threads);
    return j;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source, 0, e.what());
    }
    if (!j.is_object()) throw ParseError(source, 0, "config must be a JSON object");

    static const std::set<std::string> allowed = {
        "rumorGraph", "truthGraph", "beta1", "beta2", "delta", "horizon", "budget",
        "c1",         "c2",         "init",  "dt",    "gridPoints", "refineTol",
        "seed",       "threads"};
    reject_unknown_keys(j, allowed, source, "config");

    RunConfig cfg;
    try {
        if (!j.contains("rumorGraph") || !j.contains("truthGraph"))
            throw ParseError(source, 0, "config needs \"rumorGraph\" and \"truthGraph\"");
        cfg.rumorGraph = parse_graph_spec(j.at("rumorGraph"), source, "rumorGraph");
        cfg.truthGraph = parse_graph_spec(j.at("truthGraph"), source, "truthGraph");
        cfg.beta1 = get_number(j, "beta1", source);
        cfg.beta2 = get_number(j, "beta2", source);
        cfg.delta = get_number(j, "delta", source);
        cfg.horizon = get_number(j, "horizon", source);
        cfg.budget = get_number(j, "budget", source);
        cfg.c1 = get_number(j, "c1", source);
        cfg.c2 = get_number(j, "c2", source);

        if (j.contains("init")) {
            const json& init = j.at("init");
            if (init.is_number()) {
                cfg.initUniform = init.get<double>();
            } else if (init.is_object()) {
                reject_unknown_keys(init, {"R", "T"}, source, "init");
                if (!init.contains("R") || !init.contains("T"))
                    throw ParseError(source, 0, "init object needs \"R\" and \"T\" arrays");
                cfg.initR = init.at("R").get<std::vector<double>>();
                cfg.initT = init.at("T").get<std::vector<double>>();
                if (cfg.initR.size() != cfg.initT.size())
                    throw ParseError(source, 0, "init R and T must have equal length");
            } else {
                throw ParseError(source, 0, "init must be a number or {\"R\":[..],\"T\":[..]}");
            }
        }
        if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
        if (j.contains("gridPoints")) cfg.gridPoints = j.at("gridPoints").get<int>();
        if (j.contains("refineTol")) cfg.refineTol = j.at("refineTol").get<double>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint32_t>();
        if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    } catch (const json::exception& e) {
        throw ParseError(source, 0, e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig cfg = parse_config(buf.str(), path);
    cfg.baseDir = std::filesystem::path(path).parent_path().string();
    return cfg;
}

std::string config_json(const RunConfig& cfg) { return config_json_object(cfg).dump(); }

DirectedGraph build_graph(const GraphSpec& spec, std::uint32_t default_seed,
                          const std::string& base_dir) {
    switch (spec.model) {
        case GraphSpec::Model::Named:
            return named_small_graph(spec.index);
        case GraphSpec::Model::WattsStrogatz:
            return watts_strogatz(spec.n, spec.k, spec.p, spec.seed.value_or(default_seed));
        case GraphSpec::Model::BarabasiAlbert:
            return barabasi_albert(spec.n, spec.m, spec.seed.value_or(default_seed));
        case GraphSpec::Model::EdgeList: {
            std::filesystem::path p(spec.path);
            if (p.is_relative() && !base_dir.empty())
                p = std::filesystem::path(base_dir) / p;
            return load_edge_list(p.string(), spec.symmetric);
        }
    }
    throw std::domain_error("unreachable graph model");
}

RCInstance build_instance(const RunConfig& cfg) {
    RCInstance inst;
    inst.gR = build_graph(cfg.rumorGraph, cfg.seed, cfg.baseDir);
    inst.gT = build_graph(cfg.truthGraph, cfg.seed, cfg.baseDir);
    inst.beta1 = cfg.beta1;
    inst.beta2 = cfg.beta2;
    inst.delta = cfg.delta;
    inst.horizon = cfg.horizon;
    inst.budget = cfg.budget;
    inst.c1 = cfg.c1;
    inst.c2 = cfg.c2;
    if (cfg.initR.empty()) {
        inst.init = ExpectedState::uniform(inst.gR.n(), cfg.initUniform, cfg.initUniform);
    } else {
        inst.init.R = cfg.initR;
        inst.init.T = cfg.initT;
    }
    inst.validate();
    return inst;
}

SolveSettings solve_settings(const RunConfig& cfg) {
    SolveSettings s;
    s.gridPoints = cfg.gridPoints;
    s.refineTol = cfg.refineTol;
    s.dt = cfg.dt;
    s.threads = resolve_threads(cfg.threads);
    return s;
}

std::vector<std::string> run_metadata_lines(const RunConfig& cfg) {
    return {std::string(kToolName) + " " + kToolVersion, "config " + config_json(cfg)};
}

std::string result_json_with_meta(const StrategyResult& result, const RunConfig& cfg) {
    json meta;
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    meta["config"] = config_json_object(cfg);
    return result_json(result, meta.dump());
}

std::string sweep_manifest_json(const RunConfig& cfg, const SweepSpec& spec,
                                const SolveSettings& settings, const std::string& csv_path) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["csv"] = csv_path;
    j["param"] = to_string(spec.parameter);
    j["values"] = spec.values;
    j["config"] = config_json_object(cfg);
    j["dt"] = settings.dt != 0.0 ? settings.dt : default_dt(spec.base.horizon);
    j["gridPoints"] = settings.gridPoints;
    j["refineTol"] = settings.refineTol != 0.0
                         ? settings.refineTol
                         : 1e-6 * (spec.base.budget / spec.base.c1);
    j["threads"] = settings.threads;
    return j.dump(2) + "\n";
}

}  // namespace rcsim
