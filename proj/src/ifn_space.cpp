#include "ifnstat/ifn_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifnstat {

Norm abs_norm() {
    return [](const Vector& x) {
        if (x.dimension() != 1) throw std::invalid_argument("abs norm needs dimension 1");
        return std::fabs(x[0]);
    };
}

Norm euclidean_norm() {
    return [](const Vector& x) {
        double s = 0.0;
        for (double c : x) s += c * c;
        return std::sqrt(s);
    };
}

Norm norm_by_id(std::string_view id, std::size_t dimension) {
    if (id == "abs") {
        if (dimension != 1) throw std::invalid_argument("norm 'abs' requires dimension 1");
        return abs_norm();
    }
    if (id == "euclidean") {
        if (dimension < 1) throw std::invalid_argument("dimension must be at least 1");
        return euclidean_norm();
    }
    throw std::invalid_argument("unknown norm id '" + std::string(id) + "'");
}

IFNorm standard_ifn(Norm norm, UnitIntervalOp tnorm, UnitIntervalOp tconorm) {
    auto mu = [norm](const Vector& x, double t) { return t / (t + norm(x)); };
    auto nu = [norm](const Vector& x, double t) {
        const double r = norm(x);
        return r / (t + r);
    };
    return IFNorm(mu, nu, std::move(tnorm), std::move(tconorm));
}

namespace {

bool is_zero(const Vector& x) {
    return std::all_of(x.begin(), x.end(), [](double c) { return c == 0.0; });
}

// Relative step used to probe continuity of t -> mu(x,t), t -> nu(x,t).
constexpr double kTimeStep = 1e-6;

constexpr double kScalars[] = {-2.0, -0.5, 0.5, 3.0};

}  // namespace

std::vector<AxiomReport> certify_ifn(const IFNorm& ifn, std::span<const Vector> samples,
                                     std::span<const double> times) {
    if (samples.empty() || times.empty()) {
        throw std::invalid_argument("certify_ifn: sample sets must be non-empty");
    }
    if (std::any_of(times.begin(), times.end(), [](double t) { return !(t > 0.0); })) {
        throw std::invalid_argument("certify_ifn: time grid must be strictly positive");
    }

    const double tol = kAxiomTolerance;
    ViolationTracker sum_bound(tol), mu_positive(tol), mu_zero(tol), mu_scale(tol), mu_triangle(tol),
        mu_continuous(tol), mu_limits(kLimitTolerance), nu_below_one(tol), nu_zero(tol),
        nu_scale(tol), nu_triangle(tol), nu_continuous(tol), nu_limits(kLimitTolerance);

    const Vector zero(samples.front().dimension(), 0.0);
    for (double t : times) {
        mu_zero.observe_at(std::fabs(ifn.mu(zero, t) - 1.0), t);
        nu_zero.observe_at(std::fabs(ifn.nu(zero, t)), t);
    }

    for (std::size_t si = 0; si < samples.size(); ++si) {
        const Vector& x = samples[si];
        const bool zero_vector = is_zero(x);
        const double idx = static_cast<double>(si);
        for (double t : times) {
            const double mu = ifn.mu(x, t);
            const double nu = ifn.nu(x, t);
            sum_bound.observe_at(std::max(mu + nu - 1.0, 0.0), idx, t);
            mu_positive.observe_at(mu > 0.0 ? 0.0 : 1.0, idx, t);
            nu_below_one.observe_at(nu < 1.0 ? 0.0 : 1.0, idx, t);
            if (!zero_vector) {
                mu_zero.observe_at(mu < 1.0 ? 0.0 : 1.0, idx, t);
                nu_zero.observe_at(nu > 0.0 ? 0.0 : 1.0, idx, t);
            }
            for (double a : kScalars) {
                const Vector ax = a * x;
                const double ts = t / std::fabs(a);
                mu_scale.observe_at(std::fabs(ifn.mu(ax, t) - ifn.mu(x, ts)), idx, t, a);
                nu_scale.observe_at(std::fabs(ifn.nu(ax, t) - ifn.nu(x, ts)), idx, t, a);
            }
            const double tp = t * (1.0 + kTimeStep);
            const double bound = kContinuityModulus * kTimeStep;
            mu_continuous.observe_at(std::max(std::fabs(ifn.mu(x, tp) - mu) - bound, 0.0), idx, t);
            nu_continuous.observe_at(std::max(std::fabs(ifn.nu(x, tp) - nu) - bound, 0.0), idx, t);
        }

        mu_limits.observe_at(std::fabs(1.0 - ifn.mu(x, kLargeTime)), idx, kLargeTime);
        nu_limits.observe_at(std::fabs(ifn.nu(x, kLargeTime)), idx, kLargeTime);
        if (!zero_vector) {
            mu_limits.observe_at(std::fabs(ifn.mu(x, kSmallTime)), idx, kSmallTime);
            nu_limits.observe_at(std::fabs(1.0 - ifn.nu(x, kSmallTime)), idx, kSmallTime);
        }
    }

    // Triangle laws over all sample pairs and time pairs.
    const auto& tnorm = ifn.tnorm();
    const auto& tconorm = ifn.tconorm();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const Vector sum = samples[i] + samples[j];
            for (double t : times) {
                const double mu_x = ifn.mu(samples[i], t);
                const double nu_x = ifn.nu(samples[i], t);
                for (double s : times) {
                    const double lhs_mu = tnorm(mu_x, ifn.mu(samples[j], s));
                    const double lhs_nu = tconorm(nu_x, ifn.nu(samples[j], s));
                    mu_triangle.observe_at(std::max(lhs_mu - ifn.mu(sum, t + s), 0.0),
                                           static_cast<double>(i), static_cast<double>(j), t, s);
                    nu_triangle.observe_at(std::max(ifn.nu(sum, t + s) - lhs_nu, 0.0),
                                           static_cast<double>(i), static_cast<double>(j), t, s);
                }
            }
        }
    }

    return {
        sum_bound.report("(i) mu + nu <= 1"),
        mu_positive.report("(ii) mu > 0"),
        mu_zero.report("(iii) mu = 1 iff x = 0"),
        mu_scale.report("(iv) mu(ax,t) = mu(x,t/|a|)"),
        mu_triangle.report("(v) mu(x,t) * mu(y,s) <= mu(x+y,t+s)"),
        mu_continuous.report("(vi) mu(x,.) continuous"),
        mu_limits.report("(vii) mu -> 1 as t -> inf, mu -> 0 as t -> 0"),
        nu_below_one.report("(viii) nu < 1"),
        nu_zero.report("(ix) nu = 0 iff x = 0"),
        nu_scale.report("(x) nu(ax,t) = nu(x,t/|a|)"),
        nu_triangle.report("(xi) nu(x,t) <> nu(y,s) >= nu(x+y,t+s)"),
        nu_continuous.report("(xii) nu(x,.) continuous"),
        nu_limits.report("(xiii) nu -> 0 as t -> inf, nu -> 1 as t -> 0"),
    };
}

bool ball_contains(const OpenBall& ball, const IFNorm& ifn, const Vector& y) {
    if (!(ball.time > 0.0)) throw std::domain_error("open ball: time must be positive");
    if (!(ball.radius > 0.0 && ball.radius < 1.0)) {
        throw std::domain_error("open ball: radius must lie in (0,1)");
    }
    const Vector d = ball.center - y;
    return ifn.mu(d, ball.time) > 1.0 - ball.radius && ifn.nu(d, ball.time) < ball.radius;
}

}  // namespace ifnstat
