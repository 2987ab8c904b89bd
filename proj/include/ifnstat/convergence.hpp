#pragma once

#include "ifnstat/ifn_space.hpp"
#include "ifnstat/lambda_density.hpp"
#include "ifnstat/vector.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifnstat {

/// Guard band applied to the exceptional-condition comparisons.
inline constexpr double kBoundaryGuard = 1e-12;

/// Raised when a sequence or limit map produces a non-finite value.
class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Indexed family k -> f_k of maps sampled on a finite domain grid.
class FunctionSequence {
  public:
    using Evaluator = std::function<Vector(Index, const Vector&)>;

    FunctionSequence(Evaluator fn, std::vector<Vector> grid, std::string description)
        : fn_(std::move(fn)), grid_(std::move(grid)), description_(std::move(description)) {}

    Vector operator()(Index k, const Vector& x) const { return fn_(k, x); }

    const std::vector<Vector>& grid() const noexcept { return grid_; }
    const std::string& description() const noexcept { return description_; }

  private:
    Evaluator fn_;
    std::vector<Vector> grid_;
    std::string description_;
};

using LimitMap = std::function<Vector(const Vector&)>;

enum class Mode {
    ifn_classical,
    pointwise_stat,
    uniform_stat,
    pointwise_lambda_stat,
    uniform_lambda_stat,
    pointwise_lambda_cauchy,
    uniform_lambda_cauchy,
};

std::string_view to_string(Mode m);
/// Throws std::invalid_argument for unknown names.
Mode mode_from_string(std::string_view name);

bool is_cauchy(Mode m) noexcept;
bool is_uniform(Mode m) noexcept;

struct ConvergenceQuery {
    Mode mode = Mode::pointwise_lambda_stat;
    double epsilon = 0.1;
    double time = 1.0;
    LambdaSequence lambda = identity_lambda();
    Index n_max = 100000;
    Index trace_points = 1000;
    std::optional<LimitMap> candidate_limit;

    /// Throws std::invalid_argument when epsilon is outside (0,1), time is
    /// not positive or the horizon is below 10.
    void validate() const;
};

enum class Verdict { converges, fails, inconclusive };

std::string_view to_string(Verdict v);

struct Witness {
    Index k = 0;
    Vector x;
};

struct PointTrace {
    /// Grid point of the trace; absent for the shared trace of uniform modes.
    std::optional<Vector> point;
    DensityTrace trace;
    /// Anchor index N of the Cauchy modes.
    std::optional<Index> anchor;
};

struct ConvergenceVerdict {
    Mode mode = Mode::pointwise_lambda_stat;
    Verdict verdict = Verdict::inconclusive;
    std::vector<PointTrace> traces;
    std::vector<Witness> witnesses;
};

inline constexpr std::size_t kMaxWitnesses = 32;

/// True iff mu(gap, t) <= 1 - eps or nu(gap, t) >= eps, with kBoundaryGuard
/// slack towards the exceptional side.
bool is_exceptional_gap(const IFNorm& target, const Vector& gap, double epsilon, double time);

/// Predicate k -> [f_k(x) is outside the (eps, t) neighbourhood of f(x)].
/// The returned predicate throws EvaluationError on non-finite values.
IndexPredicate exceptional_set(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                               const Vector& x, double epsilon, double time);

/// Runs the detector selected by q.mode. Non-Cauchy modes require a
/// candidate limit, either in q or as the explicit argument.
ConvergenceVerdict detect(const FunctionSequence& fs, const IFNorm& target, const ConvergenceQuery& q);
ConvergenceVerdict detect(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                          ConvergenceQuery q);

/// Cauchy detector. Pointwise mode lets the anchor N vary with the grid
/// point; uniform mode searches one anchor for the whole grid.
ConvergenceVerdict detect_cauchy(const FunctionSequence& fs, const IFNorm& target,
                                 const ConvergenceQuery& q);

/// Verdicts of the five equivalent characterisations of lambda-statistical
/// convergence, in order:
///   (i)   joint exceptional set has density zero;
///   (ii)  the mu-set and the nu-set each have density zero;
///   (iii) the non-exceptional set has density one;
///   (iv)  {mu > 1-eps} and {nu < eps} each have density one;
///   (v)   st-lim of mu' is 1 and st-lim of nu' is 0.
struct LemmaReport {
    std::array<Verdict, 5> statements{};
    bool agree = false;
};

LemmaReport lemma_statements(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                             const ConvergenceQuery& q);

bool lemma_equivalence_check(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                             const ConvergenceQuery& q);

/// k, x -> alpha * fs1(k, x) + beta * fs2(k, x). Throws std::invalid_argument
/// when the grids differ.
FunctionSequence combine_linear(const FunctionSequence& fs1, const FunctionSequence& fs2, double alpha,
                                double beta);

LimitMap combine_limits(const LimitMap& f, const LimitMap& g, double alpha, double beta);

}  // namespace ifnstat
