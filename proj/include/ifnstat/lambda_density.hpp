#pragma once

#include "ifnstat/axiom_report.hpp"
#include "ifnstat/unit_interval.hpp"
#include "ifnstat/vector.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ifnstat {

/// Exact ceil(sqrt(n)) for n >= 0.
Index ceil_sqrt(Index n);

/// A sequence of window lengths lambda_n, n >= 1.
///
/// Admissible sequences satisfy lambda_1 = 1, lambda_n <= lambda_{n+1} <=
/// lambda_n + 1 and lambda_n -> infinity; validate() samples those conditions.
class LambdaSequence {
  public:
    using Function = std::function<double(Index)>;

    LambdaSequence(std::string name, Function fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    double operator()(Index n) const { return fn_(n); }

    /// Number of indices counted in the window at stage n: ceil(lambda_n).
    Index length(Index n) const;

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
    Function fn_;
};

LambdaSequence identity_lambda();
/// lambda_n = ceil(sqrt(n)).
LambdaSequence sqrt_lambda();
/// lambda_n = ceil(log2(n + 1)).
LambdaSequence log_lambda();

/// "identity", "sqrt" or "log". Throws std::invalid_argument otherwise.
LambdaSequence lambda_by_id(std::string_view id);

/// Explicit table of lambda_1, lambda_2, ...; evaluating past the end throws
/// std::out_of_range.
LambdaSequence lambda_from_table(std::vector<double> values);

/// I_n = [n - ceil(lambda_n) + 1, n], lower end clamped to 1.
struct IndexWindow {
    Index n = 1;
    Index lo = 1;
    Index hi = 1;

    Index size() const noexcept { return hi - lo + 1; }
};

/// Throws std::domain_error for n < 1.
IndexWindow window(const LambdaSequence& lambda, Index n);

std::vector<AxiomReport> validate(const LambdaSequence& lambda, Index n_max);

using IndexPredicate = std::function<bool(Index)>;

enum class DensityVerdict { limit_zero, limit_one, limit_value, inconclusive };

std::string_view to_string(DensityVerdict v);

struct TracePoint {
    Index n = 0;
    Index lo = 0;
    Index hi = 0;
    Index count = 0;
    double lambda = 1.0;
    double ratio = 0.0;
};

/// Ratios |K ∩ I_n| / lambda_n sampled along a finite horizon, plus the limit
/// verdict of the tail rule (see classify_trace()).
struct DensityTrace {
    std::vector<TracePoint> points;
    Index n_max = 0;
    /// Ratio at the last point. Only the verdict says whether it is a limit.
    std::optional<double> estimate;
    DensityVerdict verdict = DensityVerdict::inconclusive;
    /// Smallest members of K found on [1, n_max], at most kSampleMembers.
    std::vector<Index> sample_members;
    /// Largest member of K on [1, n_max], if any.
    std::optional<Index> last_member;
    Index total_members = 0;
};

inline constexpr std::size_t kSampleMembers = 8;

// Tail rule parameters.
inline constexpr double kTailFraction = 0.2;
inline constexpr double kZeroTailBound = 1e-2;
inline constexpr double kDecayFactor = 0.5;
inline constexpr double kValueStdBound = 1e-3;

/// Tail rule for a finite trace.
///
///  - limit-zero: the largest ratio over the last 20% of points is at most
///    1e-2, and the last ratio is at most half the largest ratio seen from the
///    20% horizon onwards (decay evidence);
///  - limit-one: the complement of K inside each window passes the limit-zero
///    rule;
///  - limit-value: the standard deviation of the last 20% of ratios is at
///    most 1e-3;
///  - inconclusive otherwise.
DensityVerdict classify_trace(std::span<const TracePoint> points, Index n_max);

/// Evaluates `member` once for every k in [1, n_max] and samples the window
/// ratio at n = stride, 2*stride, ..., with n_max always the last point.
/// Requires n_max >= 10 and stride >= 1 (std::invalid_argument otherwise).
DensityTrace density_trace(const IndexPredicate& member, const LambdaSequence& lambda,
                           Index n_max, Index stride);

/// Trace of N(eta) = {k : |values[k-1] - limit| >= eta} for a real sequence
/// given by its first values.size() terms; its limit-zero verdict is the
/// finite-horizon reading of st_lambda-lim = limit.
DensityTrace statistical_limit_trace(std::span<const double> values, double limit, double eta,
                                     const LambdaSequence& lambda, Index stride);

/// Stride that yields about `points` trace points over [1, n_max].
Index stride_for(Index n_max, Index points);

/// CSV with header n,window_lo,window_hi,count,ratio.
void write_csv(std::ostream& os, const DensityTrace& trace);

}  // namespace ifnstat
