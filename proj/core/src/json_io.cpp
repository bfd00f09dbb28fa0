#include "revtorus/json_io.hpp"

namespace revtorus {

using nlohmann::json;

namespace {

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw Error("matrix_from_json: entry must be a decimal string or integer");
}

json solution_list(const std::vector<PellSolution>& v) {
    json out = json::array();
    for (const PellSolution& s : v) out.push_back(to_json(s));
    return out;
}

}  // namespace

json to_json(const IntMatrix2& m) {
    return json::array({json::array({m.a.str(), m.b.str()}), json::array({m.c.str(), m.d.str()})});
}

IntMatrix2 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw Error("matrix_from_json: expected [[a,b],[c,d]]");
    return {int_from_json(j[0][0]), int_from_json(j[0][1]), int_from_json(j[1][0]),
            int_from_json(j[1][1])};
}

json to_json(const InvolutionClass& cls) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TrivialPlus>) {
                return {{"branch", "TrivialPlus"}, {"params", json::object()}};
            } else if constexpr (std::is_same_v<T, TrivialMinus>) {
                return {{"branch", "TrivialMinus"}, {"params", json::object()}};
            } else if constexpr (std::is_same_v<T, LowerTriangular>) {
                return {{"branch", "LowerTriangular"},
                        {"params",
                         {{"sign", v.sign > 0 ? "+" : "-"}, {"gamma", v.gamma.str()}}}};
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                return {{"branch", "UpperTriangular"},
                        {"params", {{"sign", v.sign > 0 ? "+" : "-"}, {"beta", v.beta.str()}}}};
            } else {
                return {{"branch", "Generic"},
                        {"params", {{"alpha", v.alpha.str()}, {"beta", v.beta.str()}}}};
            }
        },
        cls);
}

json to_json(const FixedLine& line) {
    return {{"direction", json::array({line.p.str(), line.q.str()})},
            {"through_origin", true}};
}

json to_json(const PellProblem& p) { return {{"D", p.D.str()}, {"N", p.N.str()}}; }

json to_json(const PellSolution& s) { return json::array({s.x.str(), s.y.str()}); }

json to_json(const PellSolutionSet& set) {
    json out;
    out["problem"] = to_json(set.problem);
    switch (set.kind) {
        case PellKind::Empty: out["kind"] = "Empty"; break;
        case PellKind::Finite: out["kind"] = "Finite"; break;
        case PellKind::InfiniteClasses: out["kind"] = "InfiniteClasses"; break;
        case PellKind::DegenerateLines: out["kind"] = "DegenerateLines"; break;
    }
    out["complete"] = set.complete;
    out["solutions"] = solution_list(set.solutions);
    if (set.unit)
        out["fundamental_unit"] = json::array({set.unit->t.str(), set.unit->u.str()});
    if (!set.class_representatives.empty())
        out["class_representatives"] = solution_list(set.class_representatives);
    if (!set.lines.empty()) {
        json lines = json::array();
        for (const SolutionLine& line : set.lines)
            lines.push_back({{"x_const", line.x_const.str()}, {"x_per_y", line.x_per_y.str()}});
        out["lines"] = lines;
    }
    return out;
}

json to_json(const ObstructionRecord& rec) {
    return {{"map", to_json(rec.map)},
            {"constraint1", rec.constraint_one},
            {"constraint2", rec.constraint_two},
            {"derived", rec.derived},
            {"conclusion", rec.conclusion},
            {"trace", rec.trace.str()},
            {"verdict", rec.empty_verdict ? "empty" : "undetermined"}};
}

json to_json(const ReversorReport& report) {
    json out;
    out["map"] = to_json(report.map);
    out["orientation"] = report.orientation_preserving ? "preserving" : "reversing";
    out["conic_discriminant"] = report.conic_discriminant.str();
    out["pell_problem"] = to_json(report.pell);
    out["pell_solutions"] = to_json(report.pell_set);
    json tri = json::array();
    for (const TriangularReversor& t : report.triangular)
        tri.push_back({{"branch", to_string(t.branch)},
                       {"gamma", t.gamma.str()},
                       {"matrix", to_json(t.matrix)}});
    out["triangular_solutions"] = tri;
    json gen = json::array();
    for (const GenericReversor& g : report.generic)
        gen.push_back({{"alpha", g.alpha.str()},
                       {"beta", g.beta.str()},
                       {"matrix", to_json(g.matrix)},
                       {"found_by", to_string(g.found_by)},
                       {"conic_point", to_json(g.conic_point)}});
    out["generic_solutions"] = gen;
    out["generic_truncated"] = report.generic_truncated;
    out["limits"] = {{"scan_bound", report.scan_bound.str()},
                     {"pell_class_limit", report.class_limit}};
    if (report.obstruction) out["obstruction"] = to_json(*report.obstruction);
    return out;
}

json to_json(const LyapunovEstimate& est) {
    return {{"lambda_plus", est.lambda_plus},
            {"n", est.n},
            {"transient", est.transient},
            {"renorm_interval", est.renorm_interval},
            {"initial_point", json::array({est.initial_point.x, est.initial_point.y})},
            {"initial_angle", est.initial_angle},
            {"seed", est.seed}};
}

json to_json(const ReversibilityResidual& res) {
    return {{"conjugacy_residual", res.conjugacy}, {"involution_residual", res.involution}};
}

json to_json(const SplittingEstimate& est) {
    return {{"e_u_angle", est.e_u_angle}, {"e_s_angle", est.e_s_angle},
            {"m", est.m},               {"ratio", est.ratio},
            {"orbit_length", est.orbit_length}, {"dominated", est.dominated}};
}

json to_json(const IntegratedExponentEstimate& est) {
    json per_n = json::array();
    for (const auto& [n, avg] : est.per_n) per_n.push_back({{"n", n}, {"average", avg}});
    return {{"value", est.value},
            {"per_n", per_n},
            {"monotone_nonincreasing", est.monotone_nonincreasing}};
}

json to_json(const FreeOrbitVerdict& verdict) {
    json out;
    out["verdict"] = verdict.free ? "Free" : "NotFreeAt";
    if (!verdict.free) out["hit_index"] = verdict.hit_index;
    if (verdict.period > 0) out["period"] = verdict.period;
    out["exhaustive"] = verdict.exhaustive;
    return out;
}

json to_json(const FixSet& fs) {
    if (const auto* lf = std::get_if<LinearFixSet>(&fs)) {
        return {{"kind", "closed_geodesic"},
                {"direction", json::array({lf->line.p.str(), lf->line.q.str()})},
                {"through_origin", true}};
    }
    const auto& circles = std::get<ReflectionCircles>(fs);
    return {{"kind", "vertical_circles"}, {"x_values", circles.x_values}};
}

}  // namespace revtorus
