#include "ifnstat/lambda_density.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace ifnstat;

namespace {

bool is_square(Index k) {
    const Index r = ceil_sqrt(k);
    return r * r == k;
}

// Direct count over the window, no prefix sums.
Index brute_count(const IndexPredicate& member, Index lo, Index hi) {
    Index c = 0;
    for (Index k = lo; k <= hi; ++k) c += member(k) ? 1 : 0;
    return c;
}

}  // namespace

TEST(CeilSqrt, Exact) {
    EXPECT_EQ(ceil_sqrt(0), 0);
    EXPECT_EQ(ceil_sqrt(1), 1);
    EXPECT_EQ(ceil_sqrt(2), 2);
    EXPECT_EQ(ceil_sqrt(100), 10);
    EXPECT_EQ(ceil_sqrt(101), 11);
    EXPECT_EQ(ceil_sqrt(999999999999), 1000000);
    EXPECT_EQ(ceil_sqrt(1000000000000), 1000000);
    EXPECT_EQ(ceil_sqrt(1000000000001), 1000001);
}

TEST(Families, Values) {
    EXPECT_EQ(identity_lambda()(7), 7.0);
    EXPECT_EQ(sqrt_lambda()(10), 4.0);
    EXPECT_EQ(log_lambda()(1), 1.0);
    EXPECT_EQ(log_lambda()(7), 3.0);
    EXPECT_EQ(log_lambda()(8), 4.0);
    EXPECT_THROW(lambda_by_id("cubic"), std::invalid_argument);
}

TEST(Families, TableEndsThrow) {
    const auto t = lambda_from_table({1, 2, 2});
    EXPECT_EQ(t(3), 2.0);
    EXPECT_THROW(t(4), std::out_of_range);
    EXPECT_THROW(t(0), std::out_of_range);
}

TEST(Window, Examples) {
    const auto w1 = window(identity_lambda(), 10);
    EXPECT_EQ(w1.lo, 1);
    EXPECT_EQ(w1.hi, 10);
    const auto w2 = window(sqrt_lambda(), 100);
    EXPECT_EQ(w2.lo, 91);
    EXPECT_EQ(w2.hi, 100);
    for (const auto& lam : {identity_lambda(), sqrt_lambda(), log_lambda()}) {
        const auto w = window(lam, 1);
        EXPECT_EQ(w.lo, 1);
        EXPECT_EQ(w.hi, 1);
    }
    EXPECT_THROW(window(identity_lambda(), 0), std::domain_error);
}

TEST(Window, NonIntegerLambdaUsesCeiling) {
    const LambdaSequence half("half", [](Index n) { return n == 1 ? 1.0 : 0.5 * static_cast<double>(n) + 0.5; });
    const auto w = window(half, 10);
    EXPECT_EQ(w.size(), 6);  // ceil(5.5)
    EXPECT_EQ(w.lo, 5);
}

TEST(Validate, BuiltinsPass) {
    EXPECT_TRUE(all_passed(validate(identity_lambda(), 100000)));
    EXPECT_TRUE(all_passed(validate(sqrt_lambda(), 100000)));
    EXPECT_TRUE(all_passed(validate(log_lambda(), 100000)));
}

TEST(Validate, DoublingFailsSlowGrowthAtOne) {
    const LambdaSequence twice("2n", [](Index n) { return 2.0 * static_cast<double>(n); });
    const auto reports = validate(twice, 100);
    EXPECT_FALSE(reports[0].passed);
    const auto& slow = reports[2];
    EXPECT_FALSE(slow.passed);
    ASSERT_EQ(slow.witness.size(), 1u);
    EXPECT_EQ(slow.witness[0], 1.0);
    EXPECT_DOUBLE_EQ(slow.worst_violation, 1.0);
}

TEST(Validate, BoundedSequenceFailsDivergence) {
    const LambdaSequence capped("capped", [](Index n) { return std::min<double>(static_cast<double>(n), 3.0); });
    const auto reports = validate(capped, 1000);
    EXPECT_TRUE(reports[1].passed);
    EXPECT_FALSE(reports[3].passed);
}

TEST(Validate, LambdaAtMostN) {
    for (const auto& lam : {identity_lambda(), sqrt_lambda(), log_lambda()}) {
        for (Index n = 1; n <= 5000; ++n) EXPECT_LE(lam(n), static_cast<double>(n));
    }
}

TEST(DensityTrace, EvensLimitValue) {
    const auto trace = density_trace([](Index k) { return k % 2 == 0; }, identity_lambda(), 100000, 100);
    EXPECT_EQ(trace.verdict, DensityVerdict::limit_value);
    ASSERT_TRUE(trace.estimate);
    EXPECT_NEAR(*trace.estimate, 0.5, 1.0 / 100000);
}

TEST(DensityTrace, FiniteSetIsLimitZero) {
    auto finite = [](Index k) { return k == 3 || k == 17 || k == 40; };
    for (const auto& lam : {identity_lambda(), sqrt_lambda(), log_lambda()}) {
        const auto trace = density_trace(finite, lam, 20000, 20);
        EXPECT_EQ(trace.verdict, DensityVerdict::limit_zero) << lam.name();
        EXPECT_EQ(trace.total_members, 3);
        EXPECT_EQ(trace.last_member, 40);
    }
}

TEST(DensityTrace, SquaresAgainstBruteForce) {
    const Index n_max = 1000000;
    const auto trace = density_trace(is_square, identity_lambda(), n_max, 1000);
    EXPECT_EQ(trace.verdict, DensityVerdict::limit_zero);
    EXPECT_EQ(trace.points.back().count, 1000);
    EXPECT_LE(*trace.estimate, 1.1e-3);
}

TEST(DensityTrace, AllIsLimitOne) {
    const auto trace = density_trace([](Index) { return true; }, sqrt_lambda(), 10000, 10);
    EXPECT_EQ(trace.verdict, DensityVerdict::limit_one);
}

TEST(DensityTrace, OscillatingBlocksAreInconclusive) {
    // Blocks [4^j, 2*4^j) have upper density 2/3 and lower density 1/3.
    auto blocks = [](Index k) {
        Index p = 1;
        while (p * 4 <= k) p *= 4;
        return k < 2 * p;
    };
    const auto trace = density_trace(blocks, identity_lambda(), 200000, 200);
    EXPECT_EQ(trace.verdict, DensityVerdict::inconclusive);
}

TEST(DensityTrace, LastPointIsHorizonAndSamplesAreStrided) {
    const auto trace = density_trace([](Index k) { return k % 3 == 0; }, identity_lambda(), 1005, 100);
    ASSERT_FALSE(trace.points.empty());
    EXPECT_EQ(trace.points.front().n, 100);
    EXPECT_EQ(trace.points.back().n, 1005);
    EXPECT_EQ(trace.points.size(), 11u);
}

TEST(DensityTrace, PreconditionsThrow) {
    EXPECT_THROW(density_trace([](Index) { return false; }, identity_lambda(), 9, 1), std::invalid_argument);
    EXPECT_THROW(density_trace([](Index) { return false; }, identity_lambda(), 100, 0), std::invalid_argument);
}

TEST(Properties, RatiosMatchBruteForceCounts) {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin(0.3);
    std::vector<bool> bits(3001);
    for (auto&& b : bits) b = coin(rng);
    auto member = [&](Index k) { return static_cast<bool>(bits[static_cast<std::size_t>(k)]); };
    for (const auto& lam : {identity_lambda(), sqrt_lambda(), log_lambda()}) {
        const auto trace = density_trace(member, lam, 3000, 7);
        for (const auto& p : trace.points) {
            const auto w = window(lam, p.n);
            EXPECT_EQ(p.lo, w.lo);
            EXPECT_EQ(p.count, brute_count(member, w.lo, w.hi));
            EXPECT_DOUBLE_EQ(p.ratio, static_cast<double>(p.count) / lam(p.n));
            EXPECT_LE(p.ratio, 1.0 + 1.0 / lam(p.n));
        }
    }
}

TEST(Properties, IdentityIsNaturalDensity) {
    auto member = [](Index k) { return k % 7 == 2 || is_square(k); };
    const auto trace = density_trace(member, identity_lambda(), 5000, 1);
    Index prefix = 0;
    for (const auto& p : trace.points) {
        prefix += member(p.n) ? 1 : 0;
        EXPECT_EQ(p.ratio, static_cast<double>(prefix) / static_cast<double>(p.n));
    }
}

TEST(Properties, ComplementLaw) {
    auto member = [](Index k) { return k % 5 == 1 || k % 11 == 0; };
    auto complement = [&](Index k) { return !member(k); };
    const auto a = density_trace(member, identity_lambda(), 4000, 13);
    const auto b = density_trace(complement, identity_lambda(), 4000, 13);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_NEAR(a.points[i].ratio + b.points[i].ratio, 1.0, 1e-12);
}

TEST(Properties, EvensHorizonStability) {
    for (Index n_max : {10, 11, 12, 57, 100, 1001, 12345, 100000}) {
        const auto trace = density_trace([](Index k) { return k % 2 == 0; }, identity_lambda(), n_max,
                                         stride_for(n_max, 1000));
        ASSERT_TRUE(trace.estimate);
        EXPECT_LE(std::fabs(*trace.estimate - 0.5), 1.0 / static_cast<double>(n_max)) << n_max;
    }
}

TEST(StatisticalLimit, ConvergentSequence) {
    std::vector<double> values(20000);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = 3.0 + std::pow(0.9, static_cast<double>(k + 1));
    EXPECT_EQ(statistical_limit_trace(values, 3.0, 0.01, identity_lambda(), 20).verdict, DensityVerdict::limit_zero);
    EXPECT_EQ(statistical_limit_trace(values, 2.0, 0.01, identity_lambda(), 20).verdict, DensityVerdict::limit_one);
}

TEST(Csv, HeaderAndRows) {
    const auto trace = density_trace([](Index k) { return k % 2 == 0; }, identity_lambda(), 20, 10);
    std::ostringstream os;
    write_csv(os, trace);
    EXPECT_EQ(os.str(), "n,window_lo,window_hi,count,ratio\n10,1,10,5,0.5\n20,1,20,10,0.5\n");
}
