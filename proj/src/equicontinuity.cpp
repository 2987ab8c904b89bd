#include "ifnstat/equicontinuity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifnstat {

namespace {

std::vector<double> dyadic(int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j) out.push_back(std::ldexp(1.0, -j));
    return out;
}

bool within(const IFNorm& target, const Vector& gap, double epsilon, double time) {
    return target.mu(gap, time) > 1.0 - epsilon && target.nu(gap, time) < epsilon;
}

struct ProbeResult {
    std::optional<Index> k;
    Vector gap;
    bool broken = false;
};

// Scans the delta grid from the top; the first delta whose (non-empty) ball
// has no broken probe wins.
ContinuityVerdict scan(const ContinuityQuery& q, const IFNorm& ifn_domain, const std::vector<Vector>& probes,
                       const std::vector<ProbeResult>& results) {
    ContinuityVerdict verdict;
    verdict.point = q.point;
    std::optional<std::size_t> last_broken;
    double last_delta = 0.0;
    for (double delta : q.delta_grid) {
        const OpenBall ball{q.point, delta, q.time};
        bool any_inside = false;
        std::optional<std::size_t> broken;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (!ball_contains(ball, ifn_domain, probes[i])) continue;
            any_inside = true;
            if (results[i].broken) {
                broken = i;
                break;
            }
        }
        if (!any_inside) {
            verdict.outcome = ContinuityOutcome::no_delta_found;
            return verdict;
        }
        if (!broken) {
            verdict.outcome = ContinuityOutcome::holds;
            verdict.delta = delta;
            return verdict;
        }
        last_broken = broken;
        last_delta = delta;
    }
    verdict.outcome = ContinuityOutcome::violation;
    verdict.delta = last_delta;
    verdict.k = results[*last_broken].k;
    verdict.x = probes[*last_broken];
    verdict.gap = results[*last_broken].gap;
    return verdict;
}

}  // namespace

std::vector<double> default_delta_grid() { return dyadic(20); }
std::vector<double> default_probe_radii() { return dyadic(30); }

void ContinuityQuery::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    if (!(time > 0.0)) throw std::invalid_argument("time must be positive");
    if (delta_grid.empty()) throw std::invalid_argument("delta grid must not be empty");
    for (std::size_t i = 0; i < delta_grid.size(); ++i) {
        if (!(delta_grid[i] > 0.0 && delta_grid[i] < 1.0)) throw std::invalid_argument("delta outside (0,1)");
        if (i > 0 && !(delta_grid[i] < delta_grid[i - 1])) {
            throw std::invalid_argument("delta grid must be decreasing");
        }
    }
}

std::string_view to_string(ContinuityOutcome o) {
    switch (o) {
        case ContinuityOutcome::holds: return "holds";
        case ContinuityOutcome::violation: return "violation";
        case ContinuityOutcome::no_delta_found: return "no-delta-found";
    }
    return "no-delta-found";
}

std::vector<Vector> probe_points(const ContinuityQuery& q, const std::vector<Vector>& domain) {
    const std::size_t dim = q.point.dimension();
    Vector lo(dim, -INFINITY), hi(dim, INFINITY);
    if (!domain.empty()) {
        lo = hi = domain.front();
        for (const auto& p : domain) {
            if (p.dimension() != dim) throw std::invalid_argument("probe domain dimension mismatch");
            for (std::size_t i = 0; i < dim; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
    }

    std::vector<Vector> probes;
    auto add = [&](const Vector& p) {
        if (p == q.point) return;
        if (std::find(probes.begin(), probes.end(), p) != probes.end()) return;
        probes.push_back(p);
    };
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (double r : q.probe_radius_grid) {
            for (double sign : {-1.0, 1.0}) {
                Vector p = q.point;
                p[axis] = std::clamp(p[axis] + sign * r, lo[axis], hi[axis]);
                add(p);
            }
        }
    }
    for (const auto& p : domain) add(p);
    return probes;
}

ContinuityVerdict check_equicontinuity(const FunctionSequence& fs, const IFNorm& ifn_domain,
                                       const IFNorm& ifn_target, const ContinuityQuery& q, Index k_max) {
    q.validate();
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    const auto& domain = q.domain_grid.empty() ? fs.grid() : q.domain_grid;
    const auto probes = probe_points(q, domain);

    std::vector<Vector> at_point;
    at_point.reserve(static_cast<std::size_t>(k_max));
    for (Index k = 1; k <= k_max; ++k) at_point.push_back(fs(k, q.point));

    std::vector<ProbeResult> results(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        for (Index k = 1; k <= k_max; ++k) {
            Vector gap = at_point[static_cast<std::size_t>(k - 1)] - fs(k, probes[i]);
            if (!within(ifn_target, gap, q.epsilon, q.time)) {
                results[i] = {k, std::move(gap), true};
                break;
            }
        }
    }
    return scan(q, ifn_domain, probes, results);
}

ContinuityVerdict check_limit_continuity(const LimitMap& f, const IFNorm& ifn_domain, const IFNorm& ifn_target,
                                         const ContinuityQuery& q) {
    q.validate();
    const auto probes = probe_points(q, q.domain_grid);
    const Vector fx = f(q.point);
    std::vector<ProbeResult> results(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        Vector gap = fx - f(probes[i]);
        if (!within(ifn_target, gap, q.epsilon, q.time)) results[i] = {std::nullopt, std::move(gap), true};
    }
    return scan(q, ifn_domain, probes, results);
}

std::vector<ContinuityVerdict> check_equicontinuity_on(const FunctionSequence& fs, const IFNorm& ifn_domain,
                                                       const IFNorm& ifn_target, ContinuityQuery q, Index k_max,
                                                       const std::vector<Vector>& points) {
    std::vector<ContinuityVerdict> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        q.point = p;
        out.push_back(check_equicontinuity(fs, ifn_domain, ifn_target, q, k_max));
    }
    return out;
}

std::vector<ContinuityVerdict> check_limit_continuity_on(const LimitMap& f, const IFNorm& ifn_domain,
                                                         const IFNorm& ifn_target, ContinuityQuery q,
                                                         const std::vector<Vector>& points) {
    std::vector<ContinuityVerdict> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        q.point = p;
        out.push_back(check_limit_continuity(f, ifn_domain, ifn_target, q));
    }
    return out;
}

}  // namespace ifnstat
