#include "doctest.h"

#include <algorithm>

#include "factorlab/experiments.hpp"
#include "factorlab/rational.hpp"
#include "factorlab/rng.hpp"
#include "factorlab/theorems.hpp"

using namespace factorlab;

namespace {

const Clause& clause_named(const ConditionVerdict& v, const std::string& name) {
    for (const Clause& c : v.clauses)
        if (c.name == name) return c;
    REQUIRE(false);
    return v.clauses.front();
}

} // namespace

TEST_SUITE("theorems") {

TEST_CASE("clique-join instance narrowly fails T1's degree bound") {
    Graph g = join({Graph::complete(5), Graph::empty_graph(7)});
    VertexFuncs vf = VertexFuncs::constant(12, 2, 3);
    ScenarioParams p{2, 3, 1, 1, 1};
    ConditionVerdict v = check_hypotheses(g, vf, p, ConditionId::T1);
    CHECK_FALSE(v.hypotheses_hold);
    CHECK(clause_named(v, "params").holds);
    CHECK(clause_named(v, "order").holds);          // 3*11 = 33 > 25
    CHECK_FALSE(clause_named(v, "min-degree").holds); // 5*5 = 25 < 27
}

TEST_CASE("complete graph of order 12 satisfies T1 and its conclusion") {
    Graph g = Graph::complete(12);
    VertexFuncs vf = VertexFuncs::constant(12, 2, 3);
    ScenarioParams p{2, 3, 1, 1, 1};
    ConditionVerdict v = verify_implication(g, vf, p, ConditionId::T1);
    CHECK(v.hypotheses_hold); // 5*11 = 55 >= 27
    REQUIRE(v.conclusion.has_value());
    CHECK(*v.conclusion);
    CHECK(v.consistent == true);
}

TEST_CASE("three-part join narrowly fails T4's degree bound") {
    Graph g = join({Graph::empty_graph(4), Graph::complete(2), Graph::empty_graph(4)});
    VertexFuncs vf = VertexFuncs::constant(10, 2, 3);
    ScenarioParams p{2, 3, 1, 0, 0};
    ConditionVerdict v = verify_implication(g, vf, p, ConditionId::T4);
    CHECK(clause_named(v, "order").holds);            // 3*10 = 30 > 24
    CHECK_FALSE(clause_named(v, "min-degree").holds); // 8*6 = 48 < 50
    CHECK_FALSE(v.hypotheses_hold);
    // conclusion is not required, and indeed fails: that is the point of
    // the construction
    REQUIRE(v.conclusion.has_value());
    CHECK_FALSE(*v.conclusion);
    CHECK(v.consistent == true);
}

TEST_CASE("parameters violating the standing hypothesis give a failed clause") {
    Graph g = Graph::complete(6);
    VertexFuncs vf = VertexFuncs::constant(6, 3, 3);
    ScenarioParams p{3, 3, 1, 0, 0}; // b - delta < a
    ConditionVerdict v = check_hypotheses(g, vf, p, ConditionId::T1);
    CHECK_FALSE(clause_named(v, "params").holds);
    CHECK_FALSE(v.hypotheses_hold);
}

TEST_CASE("condition id parsing") {
    CHECK(parse_condition_id("T1") == ConditionId::T1);
    CHECK(parse_condition_id("t5-ab") == ConditionId::T5Const);
    CHECK(parse_condition_id("complete-ab-del") == ConditionId::CompleteConstDeleted);
    CHECK_FALSE(parse_condition_id("T9").has_value());
    for (ConditionId id : all_condition_ids()) CHECK(parse_condition_id(to_string(id)) == id);
}

TEST_CASE("deleted rows equal the base conditions at nprime = 0") {
    const std::pair<ConditionId, ConditionId> pairs[] = {
        {ConditionId::T1, ConditionId::T1Deleted},
        {ConditionId::T2, ConditionId::T2Deleted},
        {ConditionId::T3, ConditionId::T3Deleted},
    };
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(derive_seed(616, seed));
        int n = rng.uniform_int(6, 12);
        Graph g = random_graph(n, rng.uniform_int(0, n - 1), rng.next(), 0.5);
        ScenarioParams p{2, rng.uniform_int(3, 5), rng.uniform_int(0, 1), 0,
                         rng.uniform_int(0, 2)};
        if (p.b - p.delta < p.a) continue;
        VertexFuncs vf = random_vertex_funcs(g, p, rng.next());
        for (auto [base, row] : pairs) {
            ConditionVerdict vb = check_hypotheses(g, vf, p, base);
            ConditionVerdict vr = check_hypotheses(g, vf, p, row);
            CHECK(vb.hypotheses_hold == vr.hypotheses_hold);
            REQUIRE(vb.clauses.size() == vr.clauses.size());
            for (std::size_t i = 0; i < vb.clauses.size(); ++i)
                CHECK(vb.clauses[i].holds == vr.clauses[i].holds);
        }
    }
}

TEST_CASE("constant-function rows require g = a and f = b") {
    Graph g = Graph::complete(10);
    ScenarioParams p{2, 4, 1, 0, 0};
    VertexFuncs banded = VertexFuncs({2, 2, 3, 2, 2, 3, 2, 2, 2, 2},
                                     {4, 4, 4, 4, 3, 4, 4, 4, 4, 4}, p);
    ConditionVerdict v = check_hypotheses(g, banded, p, ConditionId::T1Const);
    CHECK_FALSE(clause_named(v, "constant-values").holds);
    ConditionVerdict base = check_hypotheses(g, banded, p, ConditionId::T1);
    CHECK(base.hypotheses_hold);
}

TEST_CASE("threshold comparisons match exact rational arithmetic") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(derive_seed(271828, seed));
        int n = rng.uniform_int(5, 14);
        Graph g = random_graph(n, rng.uniform_int(0, n - 1), rng.next(), 0.5);
        ScenarioParams p{rng.uniform_int(2, 3), rng.uniform_int(3, 6), rng.uniform_int(0, 2),
                         rng.uniform_int(0, 2), rng.uniform_int(0, 2)};
        if (p.b - p.delta < p.a) continue;
        DegreeStats stats = g.degree_stats();

        ConditionVerdict v = check_hypotheses(g, VertexFuncs::constant(n, p.a, p.b), p,
                                              ConditionId::T1);
        Rational threshold(static_cast<long long>(p.b - p.delta) * n +
                               static_cast<long long>(p.delta + p.a) * p.nprime,
                           p.a + p.b);
        CHECK(clause_named(v, "min-degree").holds == (Rational(stats.min_degree) >= threshold));

        ConditionVerdict v4 = check_hypotheses(g, VertexFuncs::constant(n, p.a, p.b), p,
                                               ConditionId::T4);
        if (p.nprime == 0) {
            Rational id_threshold(static_cast<long long>(p.a + p.b) * n,
                                  p.b + 2 * p.a + p.delta);
            CHECK(clause_named(v4, "min-degree").holds ==
                  (Rational(stats.min_degree) >= id_threshold));
        }
    }
}

TEST_CASE("T1 hypotheses survive edge additions") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(derive_seed(99999, seed));
        ScenarioParams p{2, 3, 1, 0, 0};
        int n = rng.uniform_int(6, 10);
        Graph g = random_graph(n, condition_degree_floor(ConditionId::T1, p, n), rng.next());
        VertexFuncs vf = VertexFuncs::constant(n, 2, 3);
        if (!check_hypotheses(g, vf, p, ConditionId::T1).hypotheses_hold) continue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                CHECK(check_hypotheses(g.with_edge(u, v), vf, p, ConditionId::T1)
                          .hypotheses_hold);
            }
    }
}

TEST_CASE("generator bounds match the clauses they force") {
    for (ConditionId id : all_condition_ids()) {
        ScenarioParams p{2, 3, 1, conclusion_kind(id) == ConclusionKind::CriticalDeleted ? 1 : 0,
                         conclusion_kind(id) == ConclusionKind::IdDeleted ? 0 : 1};
        int n_min = condition_min_order(id, p);
        // order clause flips exactly at n_min
        Graph below = Graph::complete(std::max(2, n_min - 1));
        Graph at = Graph::complete(n_min);
        VertexFuncs vf_at = VertexFuncs::constant(n_min, p.a, p.b);
        ConditionVerdict v_at = check_hypotheses(at, vf_at, p, id);
        CHECK(clause_named(v_at, "order").holds);
        if (n_min >= 3) {
            VertexFuncs vf_below = VertexFuncs::constant(below.order(), p.a, p.b);
            ConditionVerdict v_below = check_hypotheses(below, vf_below, p, id);
            CHECK_FALSE(clause_named(v_below, "order").holds);
        }
        // a complete graph of degree floor order satisfies every degree clause
        int n = std::max(n_min, 8);
        int floor_all = condition_degree_floor(id, p, n);
        if (floor_all + 1 > n) continue;
        Graph forced = Graph::complete(n);
        ConditionVerdict v = check_hypotheses(forced, VertexFuncs::constant(n, p.a, p.b), p, id);
        for (const Clause& c : v.clauses)
            if (c.name != "order") CHECK(c.holds);
    }
}

} // TEST_SUITE
