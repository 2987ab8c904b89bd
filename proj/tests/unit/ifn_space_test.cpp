#include "ifnstat/ifn_space.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ifnstat;
using ifnstat::testing::line_ifn;
using ifnstat::testing::plane_ifn;

namespace {

std::vector<Vector> random_vectors(std::size_t dim, std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<Vector> out{Vector(dim, 0.0)};
    while (out.size() < count) {
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = u(rng);
        out.push_back(v);
    }
    return out;
}

std::vector<double> times() {
    std::vector<double> out;
    for (int i = 0; i < 20; ++i) out.push_back(std::pow(10.0, -2.0 + 4.0 * i / 19.0));
    return out;
}

}  // namespace

TEST(StandardIfn, ZeroVector) {
    const auto ifn = line_ifn();
    for (double t : {1e-3, 1.0, 1e3}) {
        EXPECT_EQ(ifn.mu(Vector{0.0}, t), 1.0);
        EXPECT_EQ(ifn.nu(Vector{0.0}, t), 0.0);
    }
}

TEST(StandardIfn, UnitNormUnitTime) {
    const auto ifn = line_ifn();
    EXPECT_DOUBLE_EQ(ifn.mu(Vector{1.0}, 1.0), 0.5);
    EXPECT_DOUBLE_EQ(ifn.nu(Vector{-1.0}, 1.0), 0.5);
}

TEST(StandardIfn, LargeTime) { EXPECT_GE(line_ifn().mu(Vector{1.0}, 1e9), 1.0 - 1e-9); }

TEST(StandardIfn, ScalingIdentity) {
    const auto ifn = line_ifn();
    for (double x : {0.3, 1.0, 7.5}) {
        for (double t : {0.5, 1.0, 4.0}) EXPECT_DOUBLE_EQ(ifn.mu(Vector{2.0 * x}, t), ifn.mu(Vector{x}, t / 2.0));
    }
}

TEST(NormById, Dimensions) {
    EXPECT_DOUBLE_EQ(norm_by_id("euclidean", 2)(Vector{3.0, 4.0}), 5.0);
    EXPECT_DOUBLE_EQ(norm_by_id("abs", 1)(Vector{-2.5}), 2.5);
    EXPECT_THROW(norm_by_id("abs", 2), std::invalid_argument);
    EXPECT_THROW(norm_by_id("sup", 1), std::invalid_argument);
}

TEST(CertifyIfn, StandardLineProductBoundedSum) {
    const auto ifn = standard_ifn(abs_norm(), product_tnorm(), bounded_sum_tconorm());
    const auto reports = certify_ifn(ifn, random_vectors(1, 50, 1), times());
    ASSERT_EQ(reports.size(), 13u);
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.axiom << " " << r.worst_violation;
}

TEST(CertifyIfn, StandardPlane) {
    const auto reports = certify_ifn(plane_ifn(), random_vectors(2, 50, 2), times());
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.axiom;
}

TEST(CertifyIfn, EveryTnormConormPair) {
    const auto samples = random_vectors(1, 20, 3);
    for (const auto& tn : builtin_tnorm_ids()) {
        for (const auto& tc : builtin_tconorm_ids()) {
            const auto ifn = standard_ifn(abs_norm(), op_by_id(tn), op_by_id(tc));
            EXPECT_TRUE(all_passed(certify_ifn(ifn, samples, times()))) << tn << "/" << tc;
        }
    }
}

TEST(CertifyIfn, BrokenNuEqualsMuFailsFirstAxiom) {
    const auto good = line_ifn();
    const IFNorm broken([good](const Vector& x, double t) { return good.mu(x, t); },
                        [good](const Vector& x, double t) { return good.mu(x, t); }, product_tnorm(),
                        prob_sum_tconorm());
    const auto reports = certify_ifn(broken, random_vectors(1, 20, 4), times());
    EXPECT_FALSE(reports[0].passed);
    EXPECT_GT(reports[0].worst_violation, 0.0);
    // At |x| = t, mu = nu = 0.5 sits exactly on the bound.
    EXPECT_DOUBLE_EQ(broken.mu(Vector{1.0}, 1.0) + broken.nu(Vector{1.0}, 1.0), 1.0);
}

TEST(CertifyIfn, PrintedThirteenthAxiomWouldFail) {
    // nu -> 0 as t -> 0 is the printed orientation; a norm built that way is flagged.
    const auto good = line_ifn();
    const IFNorm flipped([good](const Vector& x, double t) { return good.mu(x, t); },
                         [](const Vector& x, double t) {
                             const double n = std::fabs(x[0]);
                             return (n == 0.0 || t < 1e-6) ? 0.0 : n / (t + n);
                         },
                         product_tnorm(), prob_sum_tconorm());
    const auto reports = certify_ifn(flipped, random_vectors(1, 20, 5), times());
    EXPECT_FALSE(reports[12].passed);
}

TEST(Properties, MuPlusNuIsOne) {
    const auto ifn = plane_ifn();
    for (const auto& x : random_vectors(2, 200, 6)) {
        for (double t : times()) EXPECT_NEAR(ifn.mu(x, t) + ifn.nu(x, t), 1.0, 1e-12);
    }
}

TEST(Properties, MonotoneInTime) {
    const auto ifn = line_ifn();
    const auto ts = times();
    for (const auto& x : random_vectors(1, 100, 8)) {
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            EXPECT_LE(ifn.mu(x, ts[i]), ifn.mu(x, ts[i + 1]));
            EXPECT_GE(ifn.nu(x, ts[i]), ifn.nu(x, ts[i + 1]));
        }
    }
}

TEST(Ball, Boundaries) {
    const auto ifn = line_ifn();
    const OpenBall ball{Vector{0.0}, 0.5, 1.0};
    EXPECT_TRUE(ball_contains(ball, ifn, Vector{0.0}));
    EXPECT_FALSE(ball_contains(ball, ifn, Vector{1.0}));
    EXPECT_TRUE(ball_contains(ball, ifn, Vector{0.5}));
}

TEST(Ball, InvalidParametersThrow) {
    const auto ifn = line_ifn();
    EXPECT_THROW(ball_contains({Vector{0.0}, 1.0, 1.0}, ifn, Vector{0.0}), std::domain_error);
    EXPECT_THROW(ball_contains({Vector{0.0}, 0.5, 0.0}, ifn, Vector{0.0}), std::domain_error);
}

TEST(Properties, BallTranslationInvariance) {
    const auto ifn = plane_ifn();
    const auto points = random_vectors(2, 60, 9);
    const auto shifts = random_vectors(2, 10, 10);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        for (const auto& s : shifts) {
            for (double r : {0.1, 0.5, 0.9}) {
                const OpenBall ball{points[i], r, 2.0};
                const OpenBall moved{points[i] + s, r, 2.0};
                EXPECT_EQ(ball_contains(ball, ifn, points[i + 1]), ball_contains(moved, ifn, points[i + 1] + s));
            }
        }
    }
}
