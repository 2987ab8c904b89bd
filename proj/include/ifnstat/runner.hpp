#pragma once

#include "ifnstat/config.hpp"
#include "ifnstat/convergence.hpp"
#include "ifnstat/ifn_space.hpp"
#include "ifnstat/lambda_density.hpp"
#include "ifnstat/paper_examples.hpp"
#include "ifnstat/report.hpp"

#include <filesystem>
#include <ostream>

namespace ifnstat {

inline constexpr int kExitConverges = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitConfigError = 3;

int exit_code(Verdict v) noexcept;

IFNorm make_ifn(const SpaceConfig& space);
LambdaSequence make_lambda(const LambdaConfig& lambda);
std::vector<Vector> make_grid(const SequenceConfig& sequence, std::size_t dimension);
ExampleBuild make_sequence(const SequenceConfig& sequence, const LambdaSequence& lambda, std::size_t dimension);
ConvergenceQuery make_query(const QueryConfig& query, const LambdaSequence& lambda);
IndexPredicate make_index_set(std::string_view id, const LambdaSequence& lambda);

struct Analysis {
    ConvergenceVerdict verdict;
    ConvergenceQuery query;
    Json envelope;
};

/// Builds every object named by the config and runs the detector.
Analysis analyze(const ExperimentConfig& config);

/// Writes verdict.json and traces/trace_NNN.csv under the output directory,
/// as selected by config.output.formats.
void write_artifacts(const ExperimentConfig& config, const Analysis& analysis);

// Subcommands. Each prints a short summary to `out` and returns the exit
// status; config problems surface as ConfigError.
int run_analyze(const ExperimentConfig& config, std::ostream& out);
int run_density(const ExperimentConfig& config, std::ostream& out);
int run_axioms(const ExperimentConfig& config, std::ostream& out);

/// Zero-config reproduction of one worked example: lambda = identity,
/// epsilon = 0.1, t = 1, n_max = 10^6 and 101 grid points, before overrides.
ExperimentConfig reproduce_config(ExampleId id, const std::filesystem::path& out_dir);
int run_reproduce(ExampleId id, const Overrides& overrides, const std::filesystem::path& out_dir,
                  std::ostream& out);

}  // namespace ifnstat
