#include "ifnstat/report.hpp"

namespace ifnstat {

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (double c : v) out.push_back(c);
    return out;
}

Json to_json(const AxiomReport& r) {
    return {{"axiom", r.axiom},
            {"passed", r.passed},
            {"worst_violation", r.worst_violation},
            {"tolerance", r.tolerance},
            {"witness", r.witness}};
}

Json to_json(const DensityTrace& t) {
    Json points = Json::array();
    for (const auto& p : t.points) points.push_back({p.n, p.lo, p.hi, p.count, p.ratio});
    Json out{{"n_max", t.n_max},
             {"verdict", to_string(t.verdict)},
             {"estimate", t.estimate ? Json(*t.estimate) : Json()},
             {"total_members", t.total_members},
             {"sample_members", t.sample_members},
             {"last_member", t.last_member ? Json(*t.last_member) : Json()},
             {"columns", {"n", "window_lo", "window_hi", "count", "ratio"}},
             {"points", std::move(points)}};
    return out;
}

Json to_json(const ConvergenceVerdict& v, const ConvergenceQuery& q) {
    Json traces = Json::array();
    for (const auto& pt : v.traces) {
        Json entry = to_json(pt.trace);
        entry["point"] = pt.point ? to_json(*pt.point) : Json();
        entry["anchor"] = pt.anchor ? Json(*pt.anchor) : Json();
        traces.push_back(std::move(entry));
    }
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) witnesses.push_back({{"k", w.k}, {"x", to_json(w.x)}});
    return {{"mode", to_string(v.mode)},
            {"epsilon", q.epsilon},
            {"time", q.time},
            {"lambda", q.lambda.name()},
            {"n_max", q.n_max},
            {"verdict", to_string(v.verdict)},
            {"traces", std::move(traces)},
            {"witnesses", std::move(witnesses)}};
}

Json continuity_envelope(std::string_view mode, const std::vector<ContinuityVerdict>& verdicts,
                         const ContinuityQuery& q) {
    Json traces = Json::array();
    Json witnesses = Json::array();
    bool all_hold = true;
    bool any_violation = false;
    for (const auto& v : verdicts) {
        traces.push_back({{"point", to_json(v.point)},
                          {"outcome", to_string(v.outcome)},
                          {"delta", v.delta ? Json(*v.delta) : Json()}});
        all_hold = all_hold && v.outcome == ContinuityOutcome::holds;
        any_violation = any_violation || v.outcome == ContinuityOutcome::violation;
        if (v.outcome == ContinuityOutcome::violation) {
            witnesses.push_back({{"point", to_json(v.point)},
                                 {"k", v.k ? Json(*v.k) : Json()},
                                 {"x", to_json(*v.x)},
                                 {"gap", to_json(*v.gap)}});
        }
    }
    const std::string_view verdict = all_hold ? "holds" : any_violation ? "violation" : "no-delta-found";
    return {{"mode", mode},   {"epsilon", q.epsilon}, {"time", q.time},
            {"verdict", verdict}, {"traces", std::move(traces)}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const LemmaReport& r) {
    Json statements = Json::array();
    for (Verdict v : r.statements) statements.push_back(to_string(v));
    return {{"statements", std::move(statements)}, {"agree", r.agree}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ifnstat
