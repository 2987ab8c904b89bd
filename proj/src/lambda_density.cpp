#include "ifnstat/lambda_density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <stdexcept>

namespace ifnstat {

Index ceil_sqrt(Index n) {
    if (n <= 0) return 0;
    auto r = static_cast<Index>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : r + 1;
}

Index LambdaSequence::length(Index n) const {
    return static_cast<Index>(std::ceil((*this)(n)));
}

LambdaSequence identity_lambda() {
    return {"identity", [](Index n) { return static_cast<double>(n); }};
}

LambdaSequence sqrt_lambda() {
    return {"sqrt", [](Index n) { return static_cast<double>(ceil_sqrt(n)); }};
}

LambdaSequence log_lambda() {
    // ceil(log2(n + 1)) is the bit width of n for n >= 1.
    return {"log", [](Index n) {
                return static_cast<double>(std::bit_width(static_cast<std::uint64_t>(n)));
            }};
}

LambdaSequence lambda_by_id(std::string_view id) {
    if (id == "identity") return identity_lambda();
    if (id == "sqrt") return sqrt_lambda();
    if (id == "log") return log_lambda();
    throw std::invalid_argument("unknown lambda family '" + std::string(id) + "'");
}

LambdaSequence lambda_from_table(std::vector<double> values) {
    return {"table", [values = std::move(values)](Index n) {
                if (n < 1 || static_cast<std::size_t>(n) > values.size()) {
                    throw std::out_of_range("lambda table has no entry for n = " +
                                            std::to_string(n));
                }
                return values[static_cast<std::size_t>(n - 1)];
            }};
}

IndexWindow window(const LambdaSequence& lambda, Index n) {
    if (n < 1) throw std::domain_error("window: n must be at least 1");
    const Index lo = std::max<Index>(1, n - lambda.length(n) + 1);
    return {n, lo, n};
}

std::vector<AxiomReport> validate(const LambdaSequence& lambda, Index n_max) {
    if (n_max < 2) throw std::invalid_argument("validate: n_max must be at least 2");
    ViolationTracker first(kAxiomTolerance), monotone(kAxiomTolerance), slow(kAxiomTolerance),
        diverges(kAxiomTolerance);

    first.observe_at(std::fabs(lambda(1) - 1.0), 1);
    double prev = lambda(1);
    for (Index n = 1; n < n_max; ++n) {
        const double next = lambda(n + 1);
        monotone.observe_at(std::max(prev - next, 0.0), n);
        slow.observe_at(std::max(next - prev - 1.0, 0.0), n);
        prev = next;
    }
    const double floor_value = std::log(static_cast<double>(n_max));
    diverges.observe_at(std::max(floor_value - prev, 0.0), n_max);

    return {first.report("lambda_1 = 1"), monotone.report("non-decreasing"),
            slow.report("lambda_{n+1} <= lambda_n + 1"),
            diverges.report("divergence: lambda_{n_max} >= log(n_max)")};
}

std::string_view to_string(DensityVerdict v) {
    switch (v) {
        case DensityVerdict::limit_zero: return "limit-zero";
        case DensityVerdict::limit_one: return "limit-one";
        case DensityVerdict::limit_value: return "limit-value";
        case DensityVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

struct TailRegion {
    std::size_t tail_begin;
    std::size_t horizon_begin;
};

TailRegion tail_region(std::span<const TracePoint> points, Index n_max) {
    const std::size_t m = points.size();
    auto tail_begin = static_cast<std::size_t>(std::floor((1.0 - kTailFraction) * static_cast<double>(m)));
    tail_begin = std::min(tail_begin, m - 1);
    const double horizon = kTailFraction * static_cast<double>(n_max);
    std::size_t horizon_begin = 0;
    while (horizon_begin + 1 < m && static_cast<double>(points[horizon_begin].n) < horizon) {
        ++horizon_begin;
    }
    return {tail_begin, horizon_begin};
}

bool zero_rule(std::span<const double> values, const TailRegion& region) {
    const double tail_max =
        *std::max_element(values.begin() + static_cast<std::ptrdiff_t>(region.tail_begin), values.end());
    const double envelope =
        *std::max_element(values.begin() + static_cast<std::ptrdiff_t>(region.horizon_begin), values.end());
    return tail_max <= kZeroTailBound && values.back() <= kDecayFactor * envelope;
}

double tail_stddev(std::span<const double> values, std::size_t begin) {
    const auto tail = values.subspan(begin);
    const double mean = std::accumulate(tail.begin(), tail.end(), 0.0) / static_cast<double>(tail.size());
    double ss = 0.0;
    for (double v : tail) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(tail.size()));
}

}  // namespace

DensityVerdict classify_trace(std::span<const TracePoint> points, Index n_max) {
    if (points.empty()) return DensityVerdict::inconclusive;
    const TailRegion region = tail_region(points, n_max);

    std::vector<double> ratios(points.size()), complements(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        ratios[i] = p.ratio;
        complements[i] = static_cast<double>(p.hi - p.lo + 1 - p.count) / p.lambda;
    }

    if (zero_rule(ratios, region)) return DensityVerdict::limit_zero;
    if (zero_rule(complements, region)) return DensityVerdict::limit_one;
    if (tail_stddev(ratios, region.tail_begin) <= kValueStdBound) return DensityVerdict::limit_value;
    return DensityVerdict::inconclusive;
}

Index stride_for(Index n_max, Index points) {
    return std::max<Index>(1, n_max / std::max<Index>(1, points));
}

DensityTrace density_trace(const IndexPredicate& member, const LambdaSequence& lambda, Index n_max,
                           Index stride) {
    if (n_max < 10) throw std::invalid_argument("density_trace: n_max must be at least 10");
    if (stride < 1) throw std::invalid_argument("density_trace: stride must be at least 1");

    DensityTrace trace;
    trace.n_max = n_max;

    // prefix[k] = |K ∩ [1, k]|, built in one pass over k.
    std::vector<Index> prefix(static_cast<std::size_t>(n_max) + 1, 0);
    for (Index k = 1; k <= n_max; ++k) {
        const bool in = member(k);
        prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k - 1)] + (in ? 1 : 0);
        if (in) {
            if (trace.sample_members.size() < kSampleMembers) trace.sample_members.push_back(k);
            trace.last_member = k;
        }
    }
    trace.total_members = prefix.back();

    auto sample = [&](Index n) {
        const IndexWindow w = window(lambda, n);
        const double lam = lambda(n);
        const Index count = prefix[static_cast<std::size_t>(w.hi)] - prefix[static_cast<std::size_t>(w.lo - 1)];
        trace.points.push_back({n, w.lo, w.hi, count, lam, static_cast<double>(count) / lam});
    };
    for (Index n = stride; n <= n_max; n += stride) sample(n);
    if (trace.points.empty() || trace.points.back().n != n_max) sample(n_max);

    trace.verdict = classify_trace(trace.points, n_max);
    trace.estimate = trace.points.back().ratio;
    return trace;
}

DensityTrace statistical_limit_trace(std::span<const double> values, double limit, double eta,
                                     const LambdaSequence& lambda, Index stride) {
    auto far = [&](Index k) {
        return std::fabs(values[static_cast<std::size_t>(k - 1)] - limit) >= eta;
    };
    return density_trace(far, lambda, static_cast<Index>(values.size()), stride);
}

void write_csv(std::ostream& os, const DensityTrace& trace) {
    os << "n,window_lo,window_hi,count,ratio\n";
    const auto old_precision = os.precision(17);
    for (const auto& p : trace.points) {
        os << p.n << ',' << p.lo << ',' << p.hi << ',' << p.count << ',' << p.ratio << '\n';
    }
    os.precision(old_precision);
}

}  // namespace ifnstat
