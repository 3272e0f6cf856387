#include "doctest.h"

#include <stdexcept>

#include "factorlab/deficiency.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/experiments.hpp"
#include "factorlab/rng.hpp"
#include "factorlab/solver.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

Graph cycle4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// K_5 joined to 7 isolated vertices, g = 2, f = 3 (a=2, b=3, delta=1).
struct CliqueJoin {
    Graph g = join({Graph::complete(5), Graph::empty_graph(7)});
    VertexFuncs vf = VertexFuncs::constant(12, 2, 3);
    VertexSet clique = VertexSet::of({0, 1, 2, 3, 4});
    VertexSet singles = VertexSet::of({5, 6, 7, 8, 9, 10, 11});
};

} // namespace

TEST_SUITE("deficiency") {

TEST_CASE("inner max on the clique-join instance") {
    CliqueJoin inst;
    // every edge weighs 0 here, so the inner max is f(U) = b * nprime = 3
    auto oracle = test::oracle_inner_max(inst.g, inst.vf, inst.clique, inst.singles, 1, 1);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == 3);

    InnerMax im = inner_max(inst.g, inst.vf, inst.clique, inst.singles, 1, 1);
    CHECK(im.value == 3);
    CHECK(im.u.size() == 1);
    CHECK(im.h.size() == 1);
}

TEST_CASE("inner max trivial and single-edge cases") {
    Graph g = cycle4();
    VertexFuncs vf = VertexFuncs::constant(4, 1, 1);

    InnerMax empty = inner_max(g, vf, VertexSet::of({0}), VertexSet{}, 0, 0);
    CHECK(empty.value == 0);
    CHECK(empty.u.empty());
    CHECK(empty.h.empty());

    // S empty, T = {0}, m = 1: one edge at vertex 0 with its other end
    // outside S and T weighs 1 (frozen from the exhaustive oracle)
    auto oracle = test::oracle_inner_max(g, vf, VertexSet{}, VertexSet::of({0}), 0, 1);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == 1);
    CHECK(inner_max(g, vf, VertexSet{}, VertexSet::of({0}), 0, 1).value == 1);
}

TEST_CASE("inner max errors") {
    Graph g = cycle4();
    VertexFuncs vf = VertexFuncs::constant(4, 1, 1);
    CHECK_THROWS_AS(inner_max(g, vf, VertexSet::of({0}), VertexSet{}, 2, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(inner_max(g, vf, VertexSet::of({0}), VertexSet::of({0, 1}), 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(inner_max(g, vf, VertexSet{}, VertexSet{}, 0, 5), InsufficientEdgesError);
}

TEST_CASE("pair slack values") {
    CliqueJoin inst;
    CHECK(pair_slack(inst.g, inst.vf, inst.clique, inst.singles, 1, 1) == -2);
    CHECK(pair_slack(inst.g, inst.vf, VertexSet{}, VertexSet{}, 0, 0) == 0);

    Graph star = join({Graph::complete(1), Graph::empty_graph(3)});
    VertexFuncs unit = VertexFuncs::constant(4, 1, 1);
    CHECK(pair_slack(star, unit, VertexSet::of({0}), VertexSet::of({1, 2, 3}), 0, 0) == -2);
}

TEST_CASE("criterion verdict on the clique-join instance") {
    CliqueJoin inst;
    CriterionVerdict v = check_criterion(inst.g, inst.vf, 1, 1);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->slack == -2);
    CHECK(v.witness->s == inst.clique);
    CHECK(v.witness->t == inst.singles);
    CHECK(recompute_slack(inst.g, inst.vf, *v.witness) == -2);
}

TEST_CASE("large complete graphs satisfy the criterion") {
    // order 9 with (a,b,delta) = (2,3,1) and m = 1: above the deleted bound
    Graph k9 = Graph::complete(9);
    CHECK(check_criterion(k9, VertexFuncs::constant(9, 2, 3), 0, 1).holds);
    CHECK(check_criterion_ab(k9, 2, 3, 0, 1).holds);
    // order 12 clears the critical-deleted bound with nprime = m = 1
    Graph k12 = Graph::complete(12);
    CHECK(check_criterion(k12, VertexFuncs::constant(12, 2, 3), 1, 1).holds);
}

TEST_CASE("criterion matches the solver at nprime = m = 0") {
    CHECK(check_criterion(cycle4(), VertexFuncs::constant(4, 1, 1), 0, 0).holds);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(derive_seed(4242, seed));
        int n = rng.uniform_int(2, 7);
        Graph g = random_graph(n, 0, rng.next(), 0.15 * rng.uniform_int(1, 5));
        std::vector<int> gv, fv;
        for (int v = 0; v < n; ++v) {
            int gx = rng.uniform_int(0, 3);
            gv.push_back(gx);
            fv.push_back(rng.uniform_int(gx, 3));
        }
        VertexFuncs vf = VertexFuncs::from_values(gv, fv);
        CHECK(check_criterion(g, vf, 0, 0).holds == has_fractional_factor(g, vf).exists);
    }
}

TEST_CASE("criterion_ab specializations") {
    Graph g = join({Graph::complete(2), Graph::empty_graph(4)});
    CriterionVerdict v = check_criterion_ab(g, 2, 3, 0, 0);
    CHECK_FALSE(v.holds);
    CHECK(v.witness->slack == -2);

    CHECK(check_criterion_ab(Graph::complete(1), 0, 0, 0, 0).holds);
    CHECK_THROWS_AS(check_criterion_ab(g, 3, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("greedy inner max equals exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(derive_seed(5555, seed));
        int n = rng.uniform_int(3, 6);
        Graph g = random_graph(n, 0, rng.next(), 0.5);
        VertexFuncs vf = random_vertex_funcs(g, ScenarioParams{0, 3, 0, 0, 0}, rng.next());
        for (int trial = 0; trial < 12; ++trial) {
            // random disjoint S, T
            VertexSet s, t;
            for (int v = 0; v < n; ++v) {
                switch (rng.uniform_int(0, 2)) {
                case 1: s.add(v); break;
                case 2: t.add(v); break;
                default: break;
                }
            }
            int nprime = rng.uniform_int(0, std::min(2, s.size()));
            int m = rng.uniform_int(0, 2);
            auto expected = test::oracle_inner_max(g, vf, s, t, nprime, m);
            if (!expected) {
                CHECK_THROWS_AS(inner_max(g, vf, s, t, nprime, m), InsufficientEdgesError);
            } else {
                CHECK(inner_max(g, vf, s, t, nprime, m).value == *expected);
            }
        }
    }
}

TEST_CASE("slack is antitone in m and nprime") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(derive_seed(8811, seed));
        Graph g = random_graph(7, 2, rng.next(), 0.6);
        VertexFuncs vf = VertexFuncs::constant(7, 1, 2);
        VertexSet s = VertexSet::of({0, 1, 2});
        VertexSet t = VertexSet::of({4, 5});
        long long prev_m = pair_slack(g, vf, s, t, 0, 0);
        for (int m = 1; m <= 2; ++m) {
            long long cur = pair_slack(g, vf, s, t, 0, m);
            CHECK(cur <= prev_m);
            prev_m = cur;
        }
        long long prev_np = pair_slack(g, vf, s, t, 0, 1);
        for (int np = 1; np <= 2; ++np) {
            long long cur = pair_slack(g, vf, s, t, np, 1);
            CHECK(cur <= prev_np);
            prev_np = cur;
        }
    }
}

TEST_CASE("parallel scan returns the serial witness") {
    CliqueJoin inst;
    CriterionVerdict serial = check_criterion(inst.g, inst.vf, 1, 1, 1);
    for (int threads : {2, 3, 8}) {
        CriterionVerdict parallel = check_criterion(inst.g, inst.vf, 1, 1, threads);
        CHECK(parallel.holds == serial.holds);
        REQUIRE(parallel.witness.has_value());
        CHECK(parallel.witness->s == serial.witness->s);
        CHECK(parallel.witness->t == serial.witness->t);
        CHECK(parallel.witness->u == serial.witness->u);
        CHECK(parallel.witness->h == serial.witness->h);
        CHECK(parallel.witness->slack == serial.witness->slack);
    }
}

TEST_CASE("criterion errors") {
    Graph g = Graph::empty_graph(3);
    VertexFuncs vf = VertexFuncs::constant(3, 1, 1);
    CHECK_THROWS_AS(check_criterion(g, vf, 0, 1), InsufficientEdgesError);
    CHECK_THROWS_AS(check_criterion(g, vf, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_criterion(Graph::complete(17), VertexFuncs::constant(17, 1, 1), 0, 0),
                    SizeLimitError);
}

} // TEST_SUITE
