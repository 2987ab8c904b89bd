#include "ifnstat/unit_interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifnstat {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

std::vector<double> unit_grid(std::size_t resolution) {
    std::vector<double> g(resolution);
    const double last = static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) g[i] = static_cast<double>(i) / last;
    return g;
}

}  // namespace

double eval(const UnitIntervalOp& op, double a, double b) {
    if (!in_unit_interval(a) || !in_unit_interval(b)) {
        throw std::domain_error(op.name() + ": arguments must lie in [0,1]");
    }
    const double r = op(a, b);
    if (!in_unit_interval(r)) {
        throw std::domain_error(op.name() + ": result outside [0,1]");
    }
    return r;
}

UnitIntervalOp product_tnorm() {
    return {OpKind::tnorm, "product", [](double a, double b) { return a * b; }};
}

UnitIntervalOp min_tnorm() {
    return {OpKind::tnorm, "min", [](double a, double b) { return std::min(a, b); }};
}

UnitIntervalOp lukasiewicz_tnorm() {
    return {OpKind::tnorm, "lukasiewicz",
            [](double a, double b) { return std::max(a + b - 1.0, 0.0); }};
}

UnitIntervalOp prob_sum_tconorm() {
    return {OpKind::tconorm, "prob-sum", [](double a, double b) {
        if (a == 1.0 || b == 1.0) return 1.0;  // a + 1 - a can round below 1
        return a + b - a * b;
    }};
}

UnitIntervalOp max_tconorm() {
    return {OpKind::tconorm, "max", [](double a, double b) { return std::max(a, b); }};
}

UnitIntervalOp bounded_sum_tconorm() {
    return {OpKind::tconorm, "bounded-sum",
            [](double a, double b) { return std::min(a + b, 1.0); }};
}

UnitIntervalOp op_by_id(std::string_view id) {
    if (id == "product") return product_tnorm();
    if (id == "min") return min_tnorm();
    if (id == "lukasiewicz") return lukasiewicz_tnorm();
    if (id == "prob-sum") return prob_sum_tconorm();
    if (id == "max") return max_tconorm();
    if (id == "bounded-sum") return bounded_sum_tconorm();
    throw std::invalid_argument("unknown t-norm/t-conorm id '" + std::string(id) + "'");
}

std::vector<std::string> builtin_tnorm_ids() { return {"product", "min", "lukasiewicz"}; }

std::vector<std::string> builtin_tconorm_ids() { return {"prob-sum", "max", "bounded-sum"}; }

std::vector<AxiomReport> certify(const UnitIntervalOp& op, std::size_t grid_resolution,
                                 bool check_idempotency, double tolerance) {
    if (grid_resolution < 2) {
        throw std::invalid_argument("certify: grid_resolution must be at least 2");
    }
    const auto g = unit_grid(grid_resolution);
    const std::size_t n = g.size();

    // Tabulate once; every axiom below except associativity reads the table.
    std::vector<double> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = op(g[i], g[j]);
    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

    ViolationTracker closure(tolerance), assoc(tolerance), comm(tolerance), ident(tolerance),
        mono(tolerance), cont(tolerance), idem(tolerance);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = at(i, j);
            const double out = std::isnan(v) ? 1.0 : std::max({v - 1.0, -v, 0.0});
            closure.observe_at(out, g[i], g[j]);
            comm.observe_at(std::fabs(v - at(j, i)), g[i], g[j]);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double ab = at(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const double lhs = op(ab, g[k]);
                const double rhs = op(g[i], at(j, k));
                assoc.observe_at(std::fabs(lhs - rhs), g[i], g[j], g[k]);
            }
        }
    }

    const double e = op.identity();
    for (std::size_t i = 0; i < n; ++i) {
        ident.observe_at(std::fabs(op(g[i], e) - g[i]), g[i], e);
    }

    // On a grid, a ≤ b and c ≤ d chain through unit steps in either argument,
    // so checking adjacent cells is equivalent to the four-point condition.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = at(i, j);
            if (i + 1 < n) mono.observe_at(std::max(v - at(i + 1, j), 0.0), g[i], g[j], g[i + 1], g[j]);
            if (j + 1 < n) mono.observe_at(std::max(v - at(i, j + 1), 0.0), g[i], g[j], g[i], g[j + 1]);
        }
    }

    const double cell_width = g[1] - g[0];
    const double bound = kContinuityModulus * cell_width;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double corners[] = {at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)};
            const auto [lo, hi] = std::minmax_element(std::begin(corners), std::end(corners));
            cont.observe_at(std::max(*hi - *lo - bound, 0.0), g[i], g[j]);
        }
    }

    std::vector<AxiomReport> reports;
    reports.push_back(closure.report("closure"));
    reports.push_back(assoc.report("associativity"));
    reports.push_back(comm.report("commutativity"));
    reports.push_back(ident.report("identity"));
    reports.push_back(mono.report("monotonicity"));
    reports.push_back(cont.report("continuity"));
    if (check_idempotency) {
        for (std::size_t i = 0; i < n; ++i) idem.observe_at(std::fabs(at(i, i) - g[i]), g[i]);
        reports.push_back(idem.report("idempotency"));
    }
    return reports;
}

}  // namespace ifnstat
