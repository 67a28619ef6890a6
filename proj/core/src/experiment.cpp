#include "rcsim/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "rcsim/parallel.hpp"

namespace rcsim {

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::Beta1: return "beta1";
        case SweepParameter::Beta2: return "beta2";
        case SweepParameter::Delta: return "delta";
        case SweepParameter::Horizon: return "horizon";
        case SweepParameter::Budget: return "budget";
        case SweepParameter::C1: return "c1";
        case SweepParameter::C2: return "c2";
    }
    return "?";
}

std::optional<SweepParameter> sweep_parameter_from(std::string_view name) {
    for (SweepParameter p :
         {SweepParameter::Beta1, SweepParameter::Beta2, SweepParameter::Delta,
          SweepParameter::Horizon, SweepParameter::Budget, SweepParameter::C1,
          SweepParameter::C2})
        if (name == to_string(p)) return p;
    return std::nullopt;
}

std::vector<std::string> sweep_parameter_names() {
    return {"beta1", "beta2", "delta", "horizon", "budget", "c1", "c2"};
}

void SweepSpec::validate() const {
    base.validate();
    if (values.empty()) throw std::domain_error("sweep needs at least one value");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::domain_error("sweep values must be finite");
        if (i > 0 && !(values[i] > values[i - 1]))
            throw std::domain_error("sweep values must be strictly ascending");
    }
}

RCInstance substitute(const RCInstance& base, SweepParameter parameter, double value) {
    RCInstance inst = base;
    switch (parameter) {
        case SweepParameter::Beta1: inst.beta1 = value; break;
        case SweepParameter::Beta2: inst.beta2 = value; break;
        case SweepParameter::Delta: inst.delta = value; break;
        case SweepParameter::Horizon: inst.horizon = value; break;
        case SweepParameter::Budget: inst.budget = value; break;
        case SweepParameter::C1: inst.c1 = value; break;
        case SweepParameter::C2: inst.c2 = value; break;
    }
    return inst;
}

std::vector<TableEntry> run_experiment_table(const std::vector<RCInstance>& instances,
                                             const SolveSettings& settings) {
    std::vector<TableEntry> out(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        try {
            out[i].result = solve_rc(instances[i], settings);
        } catch (const std::exception& e) {
            out[i].error = e.what();
        }
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec, const SolveSettings& settings) {
    spec.validate();
    SweepResult result;
    result.parameter = spec.parameter;
    result.rows.resize(spec.values.size());

    // Rows run in parallel, the per-row grid serially; rows are pure and
    // write only their own slot.
    SolveSettings row_settings = settings;
    row_settings.threads = 1;
    parallel_for(spec.values.size(), settings.threads, [&](std::size_t i) {
        SweepRow& row = result.rows[i];
        row.value = spec.values[i];
        try {
            const RCInstance inst = substitute(spec.base, spec.parameter, spec.values[i]);
            const StrategyResult sol = solve_rc(inst, row_settings);
            row.gamma1 = sol.best.gamma1;
            row.gamma2 = sol.best.gamma2;
            row.eTotal = sol.eTotal;
            row.costEffectiveness = sol.costEffectiveness;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.gamma1 = row.gamma2 = row.eTotal = row.costEffectiveness =
                std::numeric_limits<double>::quiet_NaN();
        }
    });
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "param,value,gamma1,gamma2,eTotal,costEffectiveness\n";
    char buf[64];
    auto append = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
    };
    for (const SweepRow& row : result.rows) {
        out += to_string(result.parameter);
        out += ',';
        append(row.value);
        if (row.ok()) {
            out += ',';
            append(row.gamma1);
            out += ',';
            append(row.gamma2);
            out += ',';
            append(row.eTotal);
            out += ',';
            append(row.costEffectiveness);
        } else {
            out += ",,,,";
        }
        out += '\n';
    }
    return out;
}

void save_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error(path + ": cannot open file for writing");
    f << sweep_csv(result);
    if (!f) throw std::runtime_error(path + ": write failed");
}

}  // namespace rcsim
