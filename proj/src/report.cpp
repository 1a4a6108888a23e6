#include "birkit/report.hpp"

namespace birkit {

Json to_json(const Cx& z) {
    if (z.imag() == 0.0) return z.real();
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const std::vector<Cx>& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const GaussNorm& g, long long p) {
    Json j;
    j["zero"] = g.zero;
    if (!g.zero) {
        j["exponent"] = g.exponent;
        j["value"] = g.value(p);
    }
    return j;
}

Json to_json(const ConvergenceReport& r) {
    Json j;
    j["schema"] = 1;
    j["d"] = r.d;
    j["verdict"] = verdict_name(r.verdict);
    if (r.limit)
        j["limit"] = print_map(r.limit->tuple());
    else
        j["limit"] = nullptr;
    if (r.cofactor)
        j["cofactor"] = r.cofactor->str();
    else
        j["cofactor"] = nullptr;
    j["reduced_limit_is_identity"] = r.reduced_limit_is_identity;
    Json trace = Json::array();
    for (const auto& [k, dist] : r.distance_trace) trace.push_back(Json::array({k, dist}));
    j["distance_trace"] = trace;
    if (!r.degree_trace.empty()) j["degree_trace"] = r.degree_trace;
    return j;
}

Json to_json(const RegionCertificate& c) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "Certificate";
    j["chart"] = c.chart;
    j["center"] = to_json(c.center);
    j["radius"] = c.radius;
    j["grid_size"] = c.sample_grid.size();
    Json grid = Json::array();
    for (const auto& pt : c.sample_grid) grid.push_back(to_json(pt));
    j["sample_grid"] = grid;
    Json sup = Json::array();
    for (const auto& [m, e] : c.sup_errors) sup.push_back(Json::array({m, e}));
    j["sup_errors"] = sup;
    j["denominator_floor"] = c.denominator_floor;
    return j;
}

Json to_json(const Refutation& r) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "Refuted";
    switch (r.reason) {
        case RefutationReason::RegularityFailure: j["reason"] = "RegularityFailure"; break;
        case RefutationReason::PersistentError: j["reason"] = "PersistentError"; break;
        case RefutationReason::NotCertified: j["reason"] = "NotCertified"; break;
    }
    j["witness"] = to_json(r.witness);
    j["floor"] = r.floor;
    return j;
}

Json to_json(const CartanVerdict& v) {
    Json j;
    j["schema"] = 1;
    switch (v.kind) {
        case GateKind::ForcedIdentity: j["verdict"] = "ForcedIdentity"; break;
        case GateKind::NotForced: j["verdict"] = "NotForced"; break;
        case GateKind::NotApplicable: j["verdict"] = "NotApplicable"; break;
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["eigenvalues"] = to_json(v.eigenvalues);
    j["fixed_point"] = to_json(v.fixed_point);
    j["differential_deviation"] = v.differential_deviation;
    j["fixed_point_residual"] = v.fixed_point_residual;
    j["invariance_residual"] = v.invariance_residual;
    j["order_residual"] = v.order_residual;
    return j;
}

Json to_json(const PadicGateVerdict& v, long long p) {
    Json j;
    j["schema"] = 1;
    j["verdict"] = gate_kind_name(v.kind);
    if (!v.reason.empty()) j["reason"] = v.reason;
    j["distance"] = to_json(v.distance, p);
    if (v.kind == PadicGateKind::ForcedIdentity) j["verified_order"] = v.verified_order;
    return j;
}

Json to_json(const CloudResult& c, bool include_points) {
    Json j;
    j["schema"] = 1;
    j["count"] = c.points.size();
    j["net_size"] = c.net_size;
    j["covering_radius"] = c.covering_radius;
    if (include_points) {
        Json pts = Json::array();
        for (const auto& q : c.points) pts.push_back(to_json(q));
        j["points"] = pts;
    }
    return j;
}

Json to_json(const ObstructionReport& r) {
    Json j;
    j["schema"] = 1;
    j["symbolic_vanishing"] = r.symbolic_vanishing;
    Json lims = Json::array();
    for (const auto& l : r.limits) {
        lims.push_back(Json{{"s", l.s},
                            {"match_residual", l.match_residual},
                            {"fiber_residual", l.fiber_residual}});
    }
    j["limits"] = lims;
    j["pairwise"] = r.pairwise;
    j["diameter"] = r.diameter;
    return j;
}

Json to_json(const SmallSubgroupSample& s) {
    Json j;
    j["schema"] = 1;
    j["p"] = s.p;
    j["m"] = s.m;
    Json qs = Json::array();
    for (const auto& q : s.qs) qs.push_back(rat_str(q));
    j["qs"] = qs;
    j["distance_exponents"] = s.distance_exponents;
    j["all_in_ball"] = s.all_in_ball;
    j["closure_ok"] = s.closure_ok;
    j["gate_outcomes"] = s.gate_outcomes;
    return j;
}

Json to_json(const SweepStats& s) {
    Json j;
    j["schema"] = 1;
    j["count"] = s.count;
    j["violations"] = s.violations;
    j["orders"] = s.orders;
    j["distance_exponents"] = s.distance_exponents;
    return j;
}

}  // namespace birkit
