#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcsim/optimizer.hpp"

namespace rcsim {

// The instance fields a sweep may vary.
enum class SweepParameter { Beta1, Beta2, Delta, Horizon, Budget, C1, C2 };

const char* to_string(SweepParameter p);
std::optional<SweepParameter> sweep_parameter_from(std::string_view name);
std::vector<std::string> sweep_parameter_names();

// One-parameter sweep around a base instance.
struct SweepSpec {
    RCInstance base;
    SweepParameter parameter = SweepParameter::Beta1;
    std::vector<double> values;  // nonempty, strictly ascending

    void validate() const;  // throws std::domain_error
};

// Copy of `base` with the swept parameter replaced.
RCInstance substitute(const RCInstance& base, SweepParameter parameter, double value);

// One sweep row. A row that failed carries the error text and NaN numbers;
// failures never abort the remaining rows.
struct SweepRow {
    double value = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double eTotal = 0.0;
    double costEffectiveness = 0.0;
    std::string error;

    bool ok() const { return error.empty(); }
};

struct SweepResult {
    SweepParameter parameter = SweepParameter::Beta1;
    std::vector<SweepRow> rows;  // one per input value, input order
};

// Batch solve. Row errors are captured per entry; the batch always returns
// one entry per instance, in order.
struct TableEntry {
    StrategyResult result;
    std::string error;

    bool ok() const { return error.empty(); }
};
std::vector<TableEntry> run_experiment_table(const std::vector<RCInstance>& instances,
                                             const SolveSettings& settings = {});

// Solves the substituted instance for every value. Rows are independent and
// may be computed concurrently (settings.threads); output order and content
// are fixed by the input order.
SweepResult run_sweep(const SweepSpec& spec, const SolveSettings& settings = {});

// CSV with header param,value,gamma1,gamma2,eTotal,costEffectiveness.
// Failed rows leave the four result columns empty.
std::string sweep_csv(const SweepResult& result);
void save_sweep_csv(const SweepResult& result, const std::string& path);

}  // namespace rcsim
