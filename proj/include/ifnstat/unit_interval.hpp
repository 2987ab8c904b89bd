#pragma once

#include "ifnstat/axiom_report.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ifnstat {

enum class OpKind { tnorm, tconorm };

/// Absolute tolerance for every sampled t-norm / t-conorm equality.
inline constexpr double kAxiomTolerance = 1e-12;

/// Multiplier C of the sampled continuity modulus: the variation of the
/// operation over a grid cell must stay below C times the cell width.
inline constexpr double kContinuityModulus = 4.0;

/// A binary operation on [0,1] claimed to be a continuous t-norm or t-conorm.
class UnitIntervalOp {
  public:
    using Function = std::function<double(double, double)>;

    UnitIntervalOp(OpKind kind, std::string name, Function fn)
        : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

    OpKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    /// Neutral element: 1 for a t-norm, 0 for a t-conorm.
    double identity() const noexcept { return kind_ == OpKind::tnorm ? 1.0 : 0.0; }

    /// Unchecked application; see eval() for the domain-checked form.
    double operator()(double a, double b) const { return fn_(a, b); }

  private:
    OpKind kind_;
    std::string name_;
    Function fn_;
};

/// Applies `op` to (a, b). Throws std::domain_error when an argument or the
/// result lies outside [0,1].
double eval(const UnitIntervalOp& op, double a, double b);

UnitIntervalOp product_tnorm();
UnitIntervalOp min_tnorm();
UnitIntervalOp lukasiewicz_tnorm();
UnitIntervalOp prob_sum_tconorm();
UnitIntervalOp max_tconorm();
UnitIntervalOp bounded_sum_tconorm();

/// Resolves "product", "min", "lukasiewicz", "prob-sum", "max" or
/// "bounded-sum". Throws std::invalid_argument for anything else.
UnitIntervalOp op_by_id(std::string_view id);

std::vector<std::string> builtin_tnorm_ids();
std::vector<std::string> builtin_tconorm_ids();

/// Sampled certification on the uniform grid {i/(n-1)}.
///
/// Reports, in order: closure, associativity, commutativity, identity,
/// monotonicity, continuity and (when requested) idempotency. Failures are
/// reported, never thrown.
std::vector<AxiomReport> certify(const UnitIntervalOp& op, std::size_t grid_resolution,
                                 bool check_idempotency = false,
                                 double tolerance = kAxiomTolerance);

}  // namespace ifnstat
