#pragma once

#include "ifnstat/axiom_report.hpp"
#include "ifnstat/convergence.hpp"
#include "ifnstat/equicontinuity.hpp"
#include "ifnstat/lambda_density.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ifnstat {

using Json = nlohmann::json;

Json to_json(const Vector& v);
Json to_json(const AxiomReport& r);
/// Points are stored as [n, window_lo, window_hi, count, ratio] rows.
Json to_json(const DensityTrace& t);

/// Verdict envelope:
/// {mode, epsilon, time, lambda, n_max, verdict, traces, witnesses}.
Json to_json(const ConvergenceVerdict& v, const ConvergenceQuery& q);

/// The same envelope for continuity checks; `mode` is "equicontinuity" or
/// "limit-continuity" and each trace entry holds one base point.
Json continuity_envelope(std::string_view mode, const std::vector<ContinuityVerdict>& verdicts,
                         const ContinuityQuery& q);

Json to_json(const LemmaReport& r);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace ifnstat
