#pragma once

#include "ifnstat/convergence.hpp"
#include "ifnstat/lambda_density.hpp"

#include <string_view>
#include <vector>

namespace ifnstat {

/// The two worked function sequences on [0,1].
///
/// Both gate their terms on a window set W of indices. W holds the indices at
/// which ceil(sqrt(lambda_k)) steps up:
///
///     k in W  <=>  k >= 2 and ceil(sqrt(lambda_k)) > ceil(sqrt(lambda_{k-1})).
///
/// Since lambda grows by at most 1 per step, ceil(sqrt(lambda)) grows by at
/// most 1 per step, so every window I_n holds at most ceil(sqrt(lambda_n)) - 1
/// members of W. For lambda_n = n this is W = {m^2 + 1 : m >= 1}.
enum class ExampleId { pointwise, uniform };

/// "paper-example-1" / "paper-example-2"; throws std::invalid_argument.
ExampleId example_from_string(std::string_view id);
std::string_view to_string(ExampleId id);

struct ExampleSpec {
    ExampleId id = ExampleId::pointwise;
    LambdaSequence lambda = identity_lambda();
    std::vector<Vector> grid;
};

struct ExampleBuild {
    FunctionSequence sequence;
    LimitMap limit;
};

bool in_window_set(const LambdaSequence& lambda, Index k);
IndexPredicate window_set(const LambdaSequence& lambda);

/// Evenly spaced one-dimensional grid over [0,1], endpoints included.
std::vector<Vector> unit_interval_grid(std::size_t points = 101);

/// x^k for x in [0,1], k >= 1, evaluated as exp(k log x) for x > 0.
double unit_power(double x, Index k);

/// On [0,1/2): x^k + 1 for k in W, 0 otherwise.
/// On [1/2,1): x^k + 1/2 for k in W, 1 otherwise.
/// At x = 1: 2.
/// Limit: 0 on [0,1/2), 1 on [1/2,1), 2 at 1.
ExampleBuild build_example_pointwise(const LambdaSequence& lambda, std::vector<Vector> grid);

/// x^k + 1 for k in W, 0 otherwise; limit 0.
ExampleBuild build_example_uniform(const LambdaSequence& lambda, std::vector<Vector> grid);

ExampleBuild build_example(const ExampleSpec& spec);

// Other built-in families used by the theorem harnesses and configs.

/// f_k(x) = x + 1/k on the given grid, limit f(x) = x. Equicontinuous.
ExampleBuild shift_family(std::vector<Vector> grid);

/// f_k(x) = (-1)^k for every x; no limit is returned (constant 0 map).
ExampleBuild alternating_sign(std::vector<Vector> grid);

/// f_k(x) = limit(x) + amplitude * ratio^k, with 0 < ratio < 1.
ExampleBuild geometric_decay(std::vector<Vector> grid, LimitMap limit, double amplitude, double ratio);

/// Tabulated values: rows[k-1][i] is f_k at grid[i]; limit[i] is f at grid[i].
/// Evaluating past the last row throws std::out_of_range.
ExampleBuild tabulated(std::vector<Vector> grid, std::vector<std::vector<double>> rows,
                       std::vector<double> limit);

}  // namespace ifnstat
