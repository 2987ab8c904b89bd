#include "ifnstat/convergence.hpp"

#include "ifnstat/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ifnstat {

namespace {

constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::ifn_classical, "ifn-classical"},
    {Mode::pointwise_stat, "pointwise-stat"},
    {Mode::uniform_stat, "uniform-stat"},
    {Mode::pointwise_lambda_stat, "pointwise-lambda-stat"},
    {Mode::uniform_lambda_stat, "uniform-lambda-stat"},
    {Mode::pointwise_lambda_cauchy, "pointwise-lambda-cauchy"},
    {Mode::uniform_lambda_cauchy, "uniform-lambda-cauchy"},
};

// Reference candidates for the Cauchy anchor search: the last few terms.
constexpr Index kReferenceTail = 16;
constexpr std::size_t kAnchorPool = 10;

Vector checked(Vector v, const char* what, Index k, const Vector& x) {
    if (!v.is_finite()) {
        throw EvaluationError(std::string(what) + " is not finite at k = " + std::to_string(k) +
                              ", x = " + x.to_string());
    }
    return v;
}

Vector eval_term(const FunctionSequence& fs, Index k, const Vector& x) {
    return checked(fs(k, x), "f_k(x)", k, x);
}

Vector eval_limit(const LimitMap& f, const Vector& x) { return checked(f(x), "f(x)", 0, x); }

/// Density-zero reading of a trace.
Verdict zero_verdict(DensityVerdict v) {
    switch (v) {
        case DensityVerdict::limit_zero: return Verdict::converges;
        case DensityVerdict::inconclusive: return Verdict::inconclusive;
        default: return Verdict::fails;
    }
}

/// Density-one reading of a trace.
Verdict one_verdict(DensityVerdict v) {
    switch (v) {
        case DensityVerdict::limit_one: return Verdict::converges;
        case DensityVerdict::inconclusive: return Verdict::inconclusive;
        default: return Verdict::fails;
    }
}

Verdict aggregate(const std::vector<Verdict>& verdicts) {
    bool any_inconclusive = false;
    for (Verdict v : verdicts) {
        if (v == Verdict::fails) return Verdict::fails;
        if (v == Verdict::inconclusive) any_inconclusive = true;
    }
    return any_inconclusive ? Verdict::inconclusive : Verdict::converges;
}

Verdict both(Verdict a, Verdict b) { return aggregate({a, b}); }

LambdaSequence effective_lambda(const ConvergenceQuery& q) {
    switch (q.mode) {
        case Mode::ifn_classical:
        case Mode::pointwise_stat:
        case Mode::uniform_stat: return identity_lambda();
        default: return q.lambda;
    }
}

std::vector<Vector> limits_on_grid(const FunctionSequence& fs, const LimitMap& f) {
    std::vector<Vector> out;
    out.reserve(fs.grid().size());
    for (const auto& x : fs.grid()) out.push_back(eval_limit(f, x));
    return out;
}

void collect_pointwise_witnesses(ConvergenceVerdict& v) {
    for (const auto& pt : v.traces) {
        for (Index k : pt.trace.sample_members) {
            if (v.witnesses.size() >= kMaxWitnesses) return;
            v.witnesses.push_back({k, *pt.point});
        }
    }
}

/// Witness points for a shared exceptional set: the first grid point at which
/// each sampled index is exceptional.
void collect_shared_witnesses(ConvergenceVerdict& v, const std::vector<Vector>& grid,
                              const std::function<bool(Index, std::size_t)>& exceptional_at) {
    for (const auto& pt : v.traces) {
        for (Index k : pt.trace.sample_members) {
            if (v.witnesses.size() >= kMaxWitnesses) return;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (exceptional_at(k, i)) {
                    v.witnesses.push_back({k, grid[i]});
                    break;
                }
            }
        }
    }
}

ConvergenceVerdict detect_pointwise(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                                    const ConvergenceQuery& q, const LambdaSequence& lambda) {
    const auto& grid = fs.grid();
    const Index stride = stride_for(q.n_max, q.trace_points);
    ConvergenceVerdict result;
    result.mode = q.mode;
    result.traces.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const auto member = exceptional_set(fs, f, target, grid[i], q.epsilon, q.time);
        result.traces[i] = PointTrace{grid[i], density_trace(member, lambda, q.n_max, stride), {}};
    });

    std::vector<Verdict> per_point;
    per_point.reserve(grid.size());
    for (const auto& pt : result.traces) {
        if (q.mode == Mode::ifn_classical) {
            // Tail criterion: no exceptional index in the second half of the
            // horizon means a k0 was observed; exceptions in the last 20% mean
            // none was.
            const auto last = pt.trace.last_member;
            if (!last || static_cast<double>(*last) < 0.5 * static_cast<double>(q.n_max)) {
                per_point.push_back(Verdict::converges);
            } else if (static_cast<double>(*last) > (1.0 - kTailFraction) * static_cast<double>(q.n_max)) {
                per_point.push_back(Verdict::fails);
            } else {
                per_point.push_back(Verdict::inconclusive);
            }
        } else {
            per_point.push_back(zero_verdict(pt.trace.verdict));
        }
    }
    result.verdict = aggregate(per_point);
    collect_pointwise_witnesses(result);
    return result;
}

ConvergenceVerdict detect_uniform(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                                  const ConvergenceQuery& q, const LambdaSequence& lambda) {
    const auto& grid = fs.grid();
    const auto limits = limits_on_grid(fs, f);
    auto exceptional_at = [&](Index k, std::size_t i) {
        return is_exceptional_gap(target, eval_term(fs, k, grid[i]) - limits[i], q.epsilon, q.time);
    };
    auto shared = [&](Index k) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (exceptional_at(k, i)) return true;
        }
        return false;
    };

    ConvergenceVerdict result;
    result.mode = q.mode;
    result.traces.push_back(
        PointTrace{std::nullopt, density_trace(shared, lambda, q.n_max, stride_for(q.n_max, q.trace_points)), {}});
    result.verdict = zero_verdict(result.traces.front().trace.verdict);
    collect_shared_witnesses(result, grid, exceptional_at);
    return result;
}

/// Picks, among the last kReferenceTail terms, the one whose neighbourhood
/// holds the most other tail terms; ties go to the later index.
Index pick_reference(Index n_max, const std::function<bool(Index, Index)>& close) {
    const Index first = std::max<Index>(1, n_max - kReferenceTail + 1);
    Index best = n_max;
    Index best_score = -1;
    for (Index j = first; j <= n_max; ++j) {
        Index score = 0;
        for (Index i = first; i <= n_max; ++i) {
            if (i != j && close(i, j)) ++score;
        }
        if (score >= best_score) {
            best_score = score;
            best = j;
        }
    }
    return best;
}

std::vector<Index> anchor_pool(Index n_max, Index reference, const std::function<bool(Index, Index)>& close) {
    std::vector<Index> pool;
    for (Index k = 1; k <= n_max && pool.size() < kAnchorPool; ++k) {
        if (close(k, reference)) pool.push_back(k);
    }
    return pool;
}

struct AnchorSearch {
    Verdict verdict = Verdict::fails;
    std::optional<Index> anchor;
    DensityTrace trace;
};

AnchorSearch search_anchors(const std::vector<Index>& pool, const std::function<DensityTrace(Index)>& trace_for) {
    AnchorSearch out;
    if (pool.empty()) return out;  // no anchor: fails
    bool any_inconclusive = false;
    for (Index anchor : pool) {
        DensityTrace trace = trace_for(anchor);
        const Verdict v = zero_verdict(trace.verdict);
        if (v == Verdict::converges) {
            return {Verdict::converges, anchor, std::move(trace)};
        }
        if (v == Verdict::inconclusive) any_inconclusive = true;
        if (!out.anchor) {
            out.anchor = anchor;
            out.trace = std::move(trace);
        }
    }
    out.verdict = any_inconclusive ? Verdict::inconclusive : Verdict::fails;
    return out;
}

}  // namespace

std::string_view to_string(Mode m) {
    for (const auto& [mode, name] : kModeNames) {
        if (mode == m) return name;
    }
    return "unknown";
}

Mode mode_from_string(std::string_view name) {
    for (const auto& [mode, n] : kModeNames) {
        if (n == name) return mode;
    }
    throw std::invalid_argument("unknown convergence mode '" + std::string(name) + "'");
}

bool is_cauchy(Mode m) noexcept {
    return m == Mode::pointwise_lambda_cauchy || m == Mode::uniform_lambda_cauchy;
}

bool is_uniform(Mode m) noexcept {
    return m == Mode::uniform_stat || m == Mode::uniform_lambda_stat || m == Mode::uniform_lambda_cauchy;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::converges: return "converges";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

void ConvergenceQuery::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    if (!(time > 0.0)) throw std::invalid_argument("time must be positive");
    if (n_max < 10) throw std::invalid_argument("n_max must be at least 10");
    if (trace_points < 1) throw std::invalid_argument("trace_points must be at least 1");
}

bool is_exceptional_gap(const IFNorm& target, const Vector& gap, double epsilon, double time) {
    return target.mu(gap, time) <= 1.0 - epsilon + kBoundaryGuard ||
           target.nu(gap, time) >= epsilon - kBoundaryGuard;
}

IndexPredicate exceptional_set(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                               const Vector& x, double epsilon, double time) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    if (!(time > 0.0)) throw std::invalid_argument("time must be positive");
    return [fs, target, x, fx = eval_limit(f, x), epsilon, time](Index k) {
        return is_exceptional_gap(target, eval_term(fs, k, x) - fx, epsilon, time);
    };
}

ConvergenceVerdict detect(const FunctionSequence& fs, const IFNorm& target, const ConvergenceQuery& q) {
    q.validate();
    if (is_cauchy(q.mode)) return detect_cauchy(fs, target, q);
    if (!q.candidate_limit) throw std::invalid_argument("detect: candidate limit required for mode " +
                                                        std::string(to_string(q.mode)));
    const LambdaSequence lambda = effective_lambda(q);
    if (is_uniform(q.mode)) return detect_uniform(fs, *q.candidate_limit, target, q, lambda);
    return detect_pointwise(fs, *q.candidate_limit, target, q, lambda);
}

ConvergenceVerdict detect(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                          ConvergenceQuery q) {
    q.candidate_limit = f;
    return detect(fs, target, q);
}

ConvergenceVerdict detect_cauchy(const FunctionSequence& fs, const IFNorm& target, const ConvergenceQuery& q) {
    q.validate();
    if (!is_cauchy(q.mode)) throw std::invalid_argument("detect_cauchy: Cauchy mode required");
    const auto& grid = fs.grid();
    const Index stride = stride_for(q.n_max, q.trace_points);
    const double eps = q.epsilon;
    const double t = q.time;

    ConvergenceVerdict result;
    result.mode = q.mode;

    if (q.mode == Mode::pointwise_lambda_cauchy) {
        result.traces.resize(grid.size());
        std::vector<Verdict> per_point(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            const Vector& x = grid[i];
            auto close = [&](Index a, Index b) {
                return !is_exceptional_gap(target, eval_term(fs, a, x) - eval_term(fs, b, x), eps, t);
            };
            const Index reference = pick_reference(q.n_max, close);
            const auto pool = anchor_pool(q.n_max, reference, close);
            auto search = search_anchors(pool, [&](Index anchor) {
                const Vector f_anchor = eval_term(fs, anchor, x);
                auto member = [&](Index k) {
                    return is_exceptional_gap(target, eval_term(fs, k, x) - f_anchor, eps, t);
                };
                return density_trace(member, q.lambda, q.n_max, stride);
            });
            per_point[i] = search.verdict;
            result.traces[i] = PointTrace{x, std::move(search.trace), search.anchor};
        });
        result.verdict = aggregate(per_point);
        collect_pointwise_witnesses(result);
        return result;
    }

    // Uniform: one anchor for every grid point.
    auto close_everywhere = [&](Index a, Index b) {
        for (const auto& x : grid) {
            if (is_exceptional_gap(target, eval_term(fs, a, x) - eval_term(fs, b, x), eps, t)) return false;
        }
        return true;
    };
    const Index reference = pick_reference(q.n_max, close_everywhere);
    const auto pool = anchor_pool(q.n_max, reference, close_everywhere);
    std::vector<Vector> anchor_values;
    auto search = search_anchors(pool, [&](Index anchor) {
        anchor_values.clear();
        for (const auto& x : grid) anchor_values.push_back(eval_term(fs, anchor, x));
        auto member = [&](Index k) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (is_exceptional_gap(target, eval_term(fs, k, grid[i]) - anchor_values[i], eps, t)) return true;
            }
            return false;
        };
        return density_trace(member, q.lambda, q.n_max, stride);
    });
    result.verdict = search.verdict;
    if (search.anchor) {
        const Index anchor = *search.anchor;
        result.traces.push_back(PointTrace{std::nullopt, std::move(search.trace), anchor});
        collect_shared_witnesses(result, grid, [&](Index k, std::size_t i) {
            return is_exceptional_gap(target, eval_term(fs, k, grid[i]) - eval_term(fs, anchor, grid[i]), eps, t);
        });
    }
    return result;
}

LemmaReport lemma_statements(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                             const ConvergenceQuery& q) {
    q.validate();
    const bool uniform = is_uniform(q.mode);
    if (is_cauchy(q.mode) || q.mode == Mode::ifn_classical) {
        throw std::invalid_argument("lemma check needs a pointwise or uniform statistical mode");
    }
    const LambdaSequence lambda = effective_lambda(q);
    const Index stride = stride_for(q.n_max, q.trace_points);
    const double mu_cut = 1.0 - q.epsilon + kBoundaryGuard;
    const double nu_cut = q.epsilon - kBoundaryGuard;
    const auto& grid = fs.grid();
    const auto n = static_cast<std::size_t>(q.n_max);

    LemmaReport report;
    report.statements[0] = detect(fs, f, target, q).verdict;

    // Statements (ii)-(v) from the tabulated membership degrees of the gaps.
    // In uniform mode the worst degree over the grid stands in for "some x".
    auto statements_for = [&](const std::vector<double>& mu, const std::vector<double>& nu) {
        auto mu_bad = [&](Index k) { return mu[static_cast<std::size_t>(k - 1)] <= mu_cut; };
        auto nu_bad = [&](Index k) { return nu[static_cast<std::size_t>(k - 1)] >= nu_cut; };
        auto good = [&](Index k) { return !mu_bad(k) && !nu_bad(k); };
        auto mu_good = [&](Index k) { return !mu_bad(k); };
        auto nu_good = [&](Index k) { return !nu_bad(k); };
        std::array<Verdict, 4> s{};
        s[0] = both(zero_verdict(density_trace(mu_bad, lambda, q.n_max, stride).verdict),
                    zero_verdict(density_trace(nu_bad, lambda, q.n_max, stride).verdict));
        s[1] = one_verdict(density_trace(good, lambda, q.n_max, stride).verdict);
        s[2] = both(one_verdict(density_trace(mu_good, lambda, q.n_max, stride).verdict),
                    one_verdict(density_trace(nu_good, lambda, q.n_max, stride).verdict));
        s[3] = both(zero_verdict(statistical_limit_trace(mu, 1.0, nu_cut, lambda, stride).verdict),
                    zero_verdict(statistical_limit_trace(nu, 0.0, nu_cut, lambda, stride).verdict));
        return s;
    };

    const auto limits = limits_on_grid(fs, f);
    std::vector<std::array<Verdict, 4>> rows;
    if (uniform) {
        std::vector<double> worst_mu(n, 1.0), worst_nu(n, 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (Index k = 1; k <= q.n_max; ++k) {
                const Vector gap = eval_term(fs, k, grid[i]) - limits[i];
                auto idx = static_cast<std::size_t>(k - 1);
                worst_mu[idx] = std::min(worst_mu[idx], target.mu(gap, q.time));
                worst_nu[idx] = std::max(worst_nu[idx], target.nu(gap, q.time));
            }
        }
        rows.push_back(statements_for(worst_mu, worst_nu));
    } else {
        rows.resize(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            std::vector<double> mu(n), nu(n);
            for (Index k = 1; k <= q.n_max; ++k) {
                const Vector gap = eval_term(fs, k, grid[i]) - limits[i];
                mu[static_cast<std::size_t>(k - 1)] = target.mu(gap, q.time);
                nu[static_cast<std::size_t>(k - 1)] = target.nu(gap, q.time);
            }
            rows[i] = statements_for(mu, nu);
        });
    }

    for (std::size_t s = 0; s < 4; ++s) {
        std::vector<Verdict> column;
        column.reserve(rows.size());
        for (const auto& row : rows) column.push_back(row[s]);
        report.statements[s + 1] = aggregate(column);
    }
    report.agree = std::all_of(report.statements.begin(), report.statements.end(),
                               [&](Verdict v) { return v == report.statements[0]; });
    return report;
}

bool lemma_equivalence_check(const FunctionSequence& fs, const LimitMap& f, const IFNorm& target,
                             const ConvergenceQuery& q) {
    return lemma_statements(fs, f, target, q).agree;
}

FunctionSequence combine_linear(const FunctionSequence& fs1, const FunctionSequence& fs2, double alpha,
                                double beta) {
    if (fs1.grid() != fs2.grid()) throw std::invalid_argument("combine_linear: domain grids differ");
    auto fn = [fs1, fs2, alpha, beta](Index k, const Vector& x) {
        return alpha * fs1(k, x) + beta * fs2(k, x);
    };
    std::ostringstream label;
    label << alpha << " * (" << fs1.description() << ") + " << beta << " * (" << fs2.description() << ")";
    return FunctionSequence(fn, fs1.grid(), label.str());
}

LimitMap combine_limits(const LimitMap& f, const LimitMap& g, double alpha, double beta) {
    return [f, g, alpha, beta](const Vector& x) { return alpha * f(x) + beta * g(x); };
}

}  // namespace ifnstat
