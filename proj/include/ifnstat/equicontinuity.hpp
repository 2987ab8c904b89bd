#pragma once

#include "ifnstat/convergence.hpp"
#include "ifnstat/ifn_space.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ifnstat {

/// {2^-1, 2^-2, ..., 2^-20}.
std::vector<double> default_delta_grid();
/// {2^-1, ..., 2^-30}.
std::vector<double> default_probe_radii();

struct ContinuityQuery {
    Vector point;
    double epsilon = 0.1;
    double time = 1.0;
    /// Candidate deltas, scanned from the first entry on. Must be decreasing.
    std::vector<double> delta_grid = default_delta_grid();
    /// Probes are point +- r along each axis for every r here.
    std::vector<double> probe_radius_grid = default_probe_radii();
    /// Extra probe points; the sequence grid when empty. Also fixes the
    /// bounding box that displaced probes are clipped to.
    std::vector<Vector> domain_grid;

    /// Throws std::invalid_argument on epsilon outside (0,1), time <= 0, an
    /// empty or non-decreasing delta grid, or deltas outside (0,1).
    void validate() const;
};

enum class ContinuityOutcome {
    holds,
    /// Even the smallest delta admits a probe that breaks the condition.
    violation,
    /// Every delta with a non-empty ball was broken before the balls emptied.
    no_delta_found,
};

std::string_view to_string(ContinuityOutcome o);

struct ContinuityVerdict {
    ContinuityOutcome outcome = ContinuityOutcome::no_delta_found;
    Vector point;
    std::optional<double> delta;
    /// Index of the breaking member; absent for a single limit map.
    std::optional<Index> k;
    /// Probe point of the violation.
    std::optional<Vector> x;
    /// Gap f(x0) - f(x) at the violation.
    std::optional<Vector> gap;
};

/// Probe set for q: displaced copies of q.point clipped to the bounding box
/// of `domain`, plus the points of `domain`; q.point itself excluded.
std::vector<Vector> probe_points(const ContinuityQuery& q, const std::vector<Vector>& domain);

/// One delta for every f_k with k <= k_max at q.point. Throws
/// std::invalid_argument for k_max < 1.
ContinuityVerdict check_equicontinuity(const FunctionSequence& fs, const IFNorm& ifn_domain,
                                       const IFNorm& ifn_target, const ContinuityQuery& q, Index k_max);

ContinuityVerdict check_limit_continuity(const LimitMap& f, const IFNorm& ifn_domain, const IFNorm& ifn_target,
                                         const ContinuityQuery& q);

/// Runs a check at every point of `points`, reusing q for the remaining fields.
std::vector<ContinuityVerdict> check_equicontinuity_on(const FunctionSequence& fs, const IFNorm& ifn_domain,
                                                       const IFNorm& ifn_target, ContinuityQuery q, Index k_max,
                                                       const std::vector<Vector>& points);

std::vector<ContinuityVerdict> check_limit_continuity_on(const LimitMap& f, const IFNorm& ifn_domain,
                                                         const IFNorm& ifn_target, ContinuityQuery q,
                                                         const std::vector<Vector>& points);

}  // namespace ifnstat
