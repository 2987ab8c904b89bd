#pragma once

#include "ifnstat/axiom_report.hpp"
#include "ifnstat/unit_interval.hpp"
#include "ifnstat/vector.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace ifnstat {

using Norm = std::function<double(const Vector&)>;

Norm abs_norm();
Norm euclidean_norm();

/// "abs" (dimension 1 only) or "euclidean". Throws std::invalid_argument.
Norm norm_by_id(std::string_view id, std::size_t dimension);

/// An intuitionistic fuzzy norm (mu, nu) together with the t-norm and
/// t-conorm of its triangle laws.
class IFNorm {
  public:
    using Membership = std::function<double(const Vector&, double)>;

    IFNorm(Membership mu, Membership nu, UnitIntervalOp tnorm, UnitIntervalOp tconorm)
        : mu_(std::move(mu)), nu_(std::move(nu)), tnorm_(std::move(tnorm)),
          tconorm_(std::move(tconorm)) {}

    double mu(const Vector& x, double t) const { return mu_(x, t); }
    double nu(const Vector& x, double t) const { return nu_(x, t); }

    const UnitIntervalOp& tnorm() const noexcept { return tnorm_; }
    const UnitIntervalOp& tconorm() const noexcept { return tconorm_; }

  private:
    Membership mu_;
    Membership nu_;
    UnitIntervalOp tnorm_;
    UnitIntervalOp tconorm_;
};

/// mu(x,t) = t/(t+|x|), nu(x,t) = |x|/(t+|x|).
IFNorm standard_ifn(Norm norm, UnitIntervalOp tnorm, UnitIntervalOp tconorm);

/// Time at which the limits t -> infinity and t -> 0 are sampled.
inline constexpr double kLargeTime = 1e9;
inline constexpr double kSmallTime = 1e-9;
inline constexpr double kLimitTolerance = 1e-6;

/// Sampled certification of the thirteen norm axioms.
///
/// One report per axiom, in order (i) through (xiii). The nu limits are
/// checked as nu -> 0 for t -> infinity and nu -> 1 for t -> 0, the
/// orientation consistent with mu + nu <= 1. Limit axioms use
/// kLimitTolerance and skip the zero vector at t -> 0; all other axioms use
/// kAxiomTolerance.
std::vector<AxiomReport> certify_ifn(const IFNorm& ifn, std::span<const Vector> sample_vectors,
                                     std::span<const double> time_grid);

struct OpenBall {
    Vector center;
    double radius = 0.5;
    double time = 1.0;
};

/// True iff mu(center - y, time) > 1 - radius and nu(center - y, time) < radius.
/// Throws std::domain_error for time <= 0 or radius outside (0,1).
bool ball_contains(const OpenBall& ball, const IFNorm& ifn, const Vector& y);

}  // namespace ifnstat
