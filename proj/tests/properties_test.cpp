#include "doctest.h"

#include <stdexcept>

#include "factorlab/deficiency.hpp"
#include "factorlab/experiments.hpp"
#include "factorlab/properties.hpp"
#include "factorlab/rng.hpp"
#include "factorlab/solver.hpp"

using namespace factorlab;

namespace {

Graph cycle4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

} // namespace

TEST_SUITE("properties") {

TEST_CASE("cycle survives any single edge deletion") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    VertexFuncs vf = VertexFuncs::constant(4, 1, 1);
    // the path keeps a factor: h = (1, 0, 1)
    CHECK(verify_assignment(p4, vf, FractionalAssignment({2, 0, 2})));
    CHECK(is_deleted(cycle4(), vf, 1).holds);
}

TEST_CASE("large complete graph is deleted") {
    CHECK(is_deleted(Graph::complete(9), VertexFuncs::constant(9, 2, 3), 1).holds);
}

TEST_CASE("star fails already at m = 0") {
    Graph star = join({Graph::complete(1), Graph::empty_graph(3)});
    PropertyCheck check = is_deleted(star, VertexFuncs::constant(4, 1, 1), 0);
    CHECK_FALSE(check.holds);
    REQUIRE(check.counterexample.has_value());
    CHECK(check.counterexample->removed_edges.empty());
    REQUIRE(check.counterexample->defect.has_value());
    CHECK(check.counterexample->defect->slack == -2);
}

TEST_CASE("clique-join instance is not critical-deleted") {
    Graph g = join({Graph::complete(5), Graph::empty_graph(7)});
    VertexFuncs vf = VertexFuncs::constant(12, 2, 3);
    PropertyCheck check = is_critical_deleted(g, vf, 1, 1);
    CHECK_FALSE(check.holds);
    REQUIRE(check.counterexample.has_value());
    CHECK(check.counterexample->removed_vertices.size() == 1);
    CHECK(check.counterexample->removed_edges.size() == 1);
}

TEST_CASE("complete graph above the bound is critical-deleted") {
    CHECK(is_critical_deleted(Graph::complete(12), VertexFuncs::constant(12, 2, 3), 1, 1).holds);
}

TEST_CASE("critical-deleted at (0,0) collapses to factor existence") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(derive_seed(99, seed));
        int n = rng.uniform_int(2, 7);
        Graph g = random_graph(n, 0, rng.next(), 0.4);
        VertexFuncs vf = VertexFuncs::constant(n, rng.uniform_int(0, 2), 2);
        CHECK(is_critical_deleted(g, vf, 0, 0).holds == has_fractional_factor(g, vf).exists);
    }
}

TEST_CASE("three-part join is not ID-deleted and fails at one full side") {
    Graph g = join({Graph::empty_graph(4), Graph::complete(2), Graph::empty_graph(4)});
    VertexFuncs vf = VertexFuncs::constant(10, 2, 3);
    PropertyCheck check = is_id_deleted(g, vf, 0);
    CHECK_FALSE(check.holds);
    REQUIRE(check.counterexample.has_value());
    // lexicographically first failing independent set is the first side
    CHECK(check.counterexample->removed_vertices == VertexSet::of({0, 1, 2, 3}));
    REQUIRE(check.counterexample->defect.has_value());
    CHECK(check.counterexample->defect->slack == -2);
}

TEST_CASE("complete graph is ID-deleted") {
    CHECK(is_id_deleted(Graph::complete(5), VertexFuncs::constant(5, 1, 2), 0).holds);
}

TEST_CASE("edgeless graph fails at the empty set") {
    PropertyCheck check = is_id_deleted(Graph::empty_graph(3), VertexFuncs::constant(3, 1, 1), 0);
    CHECK_FALSE(check.holds);
    CHECK(check.counterexample->removed_vertices.empty());
}

TEST_CASE("id-deleted implies deleted") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(derive_seed(2211, seed));
        int n = rng.uniform_int(4, 8);
        Graph g = random_graph(n, 2, rng.next(), 0.6);
        VertexFuncs vf = VertexFuncs::constant(n, 1, 2);
        int m = rng.uniform_int(0, 1);
        if (is_id_deleted(g, vf, m).holds) CHECK(is_deleted(g, vf, m).holds);
    }
}

TEST_CASE("deleted is antitone in m") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Rng rng(derive_seed(7171, seed));
        int n = rng.uniform_int(4, 8);
        Graph g = random_graph(n, 2, rng.next(), 0.7);
        VertexFuncs vf = VertexFuncs::constant(n, 1, 2);
        if (g.edge_count() > 1 && is_deleted(g, vf, 2).holds) {
            CHECK(is_deleted(g, vf, 1).holds);
            CHECK(is_deleted(g, vf, 0).holds);
        }
    }
}

TEST_CASE("brute force agrees with the criterion verdict") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(derive_seed(31415, seed));
        int n = rng.uniform_int(4, 8);
        Graph g = random_graph(n, 2, rng.next(), 0.6);
        int nprime = rng.uniform_int(0, 2);
        int m = rng.uniform_int(0, 1);
        ScenarioParams band{2, 4, rng.uniform_int(0, 2), nprime, m};
        VertexFuncs vf = random_vertex_funcs(g, band, rng.next());
        // dense enough that every removal leaves m edges
        CHECK(is_critical_deleted(g, vf, nprime, m).holds ==
              check_criterion(g, vf, nprime, m).holds);
    }
}

TEST_CASE("removal bookkeeping stays in original labels") {
    // star whose center is vertex 3: deleting vertex 0 must not confuse ids
    Graph g = Graph::from_edges(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}});
    VertexFuncs vf = VertexFuncs::constant(5, 1, 1);
    PropertyCheck check = is_critical_deleted(g, vf, 1, 0);
    CHECK_FALSE(check.holds);
    REQUIRE(check.counterexample.has_value());
    REQUIRE(check.counterexample->defect.has_value());
    const DeficiencyWitness& w = *check.counterexample->defect;
    // witness vertices must avoid the removed one and recompute in the
    // reduced graph
    CHECK_FALSE(w.s.intersects(check.counterexample->removed_vertices));
    CHECK_FALSE(w.t.intersects(check.counterexample->removed_vertices));
}

TEST_CASE("errors") {
    Graph g = cycle4();
    VertexFuncs vf = VertexFuncs::constant(4, 1, 1);
    CHECK_THROWS_AS(is_critical_deleted(g, vf, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_critical_deleted(g, vf, -1, 0), std::invalid_argument);
}

} // TEST_SUITE
