#pragma once

#include "ifnstat/vector.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifnstat {

/// A config that does not parse or does not validate. `line` is 1-based, or
/// 0 when the problem has no source position (command-line overrides).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& source, int line, const std::string& message);

    int line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

  private:
    int line_;
    std::string detail_;
};

struct SpaceConfig {
    std::string norm = "abs";
    std::string tnorm = "product";
    std::string tconorm = "prob-sum";
    std::size_t dimension = 1;

    bool operator==(const SpaceConfig&) const = default;
};

struct LambdaConfig {
    /// "identity", "sqrt", "log" or "table".
    std::string family = "identity";
    std::vector<double> table;

    bool operator==(const LambdaConfig&) const = default;
};

struct SequenceConfig {
    /// paper-example-1, paper-example-2, shift, alternating-sign, geometric
    /// or table.
    std::string id = "paper-example-1";
    /// Points per axis of the evenly spaced grid over [0,1]; ignored when
    /// `grid` is given.
    std::size_t grid_points = 101;
    /// Explicit one-dimensional grid.
    std::vector<double> grid;
    /// table: rows[k-1][i] = f_k(grid[i]); limit[i] = f(grid[i]).
    std::vector<std::vector<double>> rows;
    std::vector<double> limit;
    /// geometric: f_k = limit + amplitude * ratio^k with limit "zero" or
    /// "identity".
    double amplitude = 1.0;
    double ratio = 0.5;
    std::string limit_id = "zero";

    bool operator==(const SequenceConfig&) const = default;
};

struct QueryConfig {
    std::string mode = "pointwise-lambda-stat";
    double epsilon = 0.1;
    double time = 1.0;
    Index n_max = 1000000;
    Index trace_points = 200;

    bool operator==(const QueryConfig&) const = default;
};

struct OutputConfig {
    std::string directory = "out";
    /// Any of "json" and "csv".
    std::vector<std::string> formats{"json", "csv"};

    bool operator==(const OutputConfig&) const = default;
};

struct ExperimentConfig {
    SpaceConfig space;
    LambdaConfig lambda;
    SequenceConfig sequence;
    QueryConfig query;
    OutputConfig output;
    /// Index set for the density subcommand: evens, odds, squares, all,
    /// none or window-set.
    std::optional<std::string> index_set;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parses and validates YAML text. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical YAML form; parse_config(dump_config(c)) == c.
std::string dump_config(const ExperimentConfig& config);

struct Overrides {
    std::optional<Index> n_max;
    std::optional<double> epsilon;
    std::optional<double> time;
    std::optional<std::string> lambda;
};

/// Applies command-line overrides and revalidates the affected fields.
/// Throws ConfigError with line 0.
void apply_overrides(ExperimentConfig& config, const Overrides& overrides);

}  // namespace ifnstat
