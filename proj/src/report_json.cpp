#include "factorlab/report_json.hpp"

namespace factorlab {

namespace {

nlohmann::json vertices_1indexed(VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s.to_vector()) arr.push_back(v + 1);
    return arr;
}

nlohmann::json edges_1indexed(const std::vector<Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : edges) arr.push_back({e.u + 1, e.v + 1});
    return arr;
}

} // namespace

nlohmann::json params_to_json(const ScenarioParams& p) {
    return {{"a", p.a}, {"b", p.b}, {"delta", p.delta}, {"nprime", p.nprime}, {"m", p.m}};
}

nlohmann::json stats_to_json(const DegreeStats& stats) {
    nlohmann::json j{{"min_degree", stats.min_degree}};
    if (stats.sigma2)
        j["sigma2"] = *stats.sigma2;
    else
        j["sigma2"] = "infinity";
    return j;
}

nlohmann::json witness_to_json(const DeficiencyWitness& w) {
    return {{"S", vertices_1indexed(w.s)},
            {"T", vertices_1indexed(w.t)},
            {"U", vertices_1indexed(w.u)},
            {"H", edges_1indexed(w.h)},
            {"slack", w.slack}};
}

nlohmann::json assignment_to_json(const Graph& g, const FractionalAssignment& h) {
    nlohmann::json arr = nlohmann::json::array();
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        arr.push_back({{"edge", {edges[i].u + 1, edges[i].v + 1}},
                       {"value", h.value_string(static_cast<int>(i))}});
    return arr;
}

nlohmann::json counterexample_to_json(const PropertyCounterexample& ce) {
    nlohmann::json j{{"removed_vertices", vertices_1indexed(ce.removed_vertices)},
                     {"removed_edges", edges_1indexed(ce.removed_edges)}};
    if (ce.defect) j["witness"] = witness_to_json(*ce.defect);
    return j;
}

nlohmann::json condition_verdict_to_json(const ConditionVerdict& v) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const Clause& c : v.clauses)
        clauses.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    nlohmann::json j{{"condition", to_string(v.id)},
                     {"clauses", clauses},
                     {"hypotheses_hold", v.hypotheses_hold}};
    j["conclusion"] = v.conclusion ? nlohmann::json(*v.conclusion) : nlohmann::json();
    j["consistent"] = v.consistent ? nlohmann::json(*v.consistent) : nlohmann::json();
    if (!v.skipped_reason.empty()) j["skipped_reason"] = v.skipped_reason;
    if (v.counterexample) j["counterexample"] = counterexample_to_json(*v.counterexample);
    return j;
}

} // namespace factorlab
