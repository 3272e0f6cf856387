#include "doctest.h"

#include <stdexcept>

#include "factorlab/deficiency.hpp"
#include "factorlab/extremal.hpp"
#include "factorlab/properties.hpp"
#include "factorlab/rational.hpp"

using namespace factorlab;

TEST_SUITE("extremal") {

TEST_CASE("clique-join family at (2,1,1,1,2)") {
    CriticalSharpness s = build_critical_sharpness(2, 1, 1, 1, 2);
    CHECK(s.graph.order() == 12);
    CHECK(s.stats.min_degree == 5);
    CHECK(s.expected.slack == -2);
    CHECK(s.expected.s == VertexSet::of({0, 1, 2, 3, 4}));
    CHECK(s.expected.t.size() == 7);
    CHECK(recompute_slack(s.graph, s.funcs, s.expected) == -2);

    // Lemma-style check finds the same witness
    CriterionVerdict v = check_criterion(s.graph, s.funcs, 1, 1);
    CHECK_FALSE(v.holds);
    CHECK(v.witness->slack == -2);
    CHECK(v.witness->s == s.expected.s);
    CHECK(v.witness->t == s.expected.t);
}

TEST_CASE("clique-join family at (2,1,0,0,2)") {
    CriticalSharpness s = build_critical_sharpness(2, 1, 0, 0, 2);
    CHECK(s.graph.order() == 11);
    CHECK(s.stats.min_degree == 4);
    CHECK(s.degree_threshold() == Rational(22, 5));
}

TEST_CASE("too small t is rejected with the minimal t named") {
    CHECK_THROWS_AS(build_critical_sharpness(2, 1, 1, 1, 1), std::invalid_argument);
    CHECK(min_critical_sharpness_t(2, 1, 1, 1) == 2);
    CHECK_NOTHROW(build_critical_sharpness(2, 1, 1, 1, min_critical_sharpness_t(2, 1, 1, 1)));
}

TEST_CASE("three-part family at (2,1,0,1)") {
    IdSharpness s = build_id_sharpness(2, 1, 0, 1);
    CHECK(s.graph.order() == 10);
    CHECK(s.stats.min_degree == 6);
    CHECK(s.stats.sigma2 == 12);
    CHECK(s.degree_threshold() == Rational(50, 8));
    CHECK(s.expected_independent == VertexSet::of({0, 1, 2, 3}));
    CHECK(s.expected.slack == -2);

    // witness lives in the reduced graph's labels
    VertexFuncs reduced_funcs = VertexFuncs::constant(s.reduced.order(), 2, 3);
    CHECK(recompute_slack(s.reduced, reduced_funcs, s.expected) == -2);
    CriterionVerdict v = check_criterion(s.reduced, reduced_funcs, 0, 0);
    CHECK_FALSE(v.holds);
    CHECK(v.witness->slack == -2);
    CHECK(v.witness->s == s.expected.s);
    CHECK(v.witness->t == s.expected.t);
}

TEST_CASE("three-part family with delta = 0") {
    IdSharpness s = build_id_sharpness(2, 0, 0, 1);
    CHECK(s.params.b == 2);
    // parts 3K_1, K_2, 3K_1
    CHECK(s.graph.order() == 8);
    CHECK(s.expected_independent.size() == 3);
    CHECK(s.reduced.order() == 5);
}

TEST_CASE("constructed families indeed fail the concluded property") {
    CriticalSharpness c = build_critical_sharpness(2, 1, 1, 1, 2);
    CHECK_FALSE(is_critical_deleted(c.graph, c.funcs, 1, 1).holds);

    IdSharpness i = build_id_sharpness(2, 1, 0, 1);
    CHECK_FALSE(is_id_deleted(i.graph, i.funcs, 0).holds);
}

TEST_CASE("slack is -a across the parameter grid") {
    for (int a = 2; a <= 4; ++a)
        for (int delta = 0; delta <= 2; ++delta)
            for (int nprime = 0; nprime <= 1; ++nprime)
                for (int m = 0; m <= 1; ++m) {
                    int t = min_critical_sharpness_t(a, delta, nprime, m);
                    if ((a + a + delta) * t + 1 + nprime > 20) continue;
                    CriticalSharpness s = build_critical_sharpness(a, delta, nprime, m, t);
                    CHECK(s.expected.slack == -a);
                    CHECK(recompute_slack(s.graph, s.funcs, s.expected) == -a);
                    CHECK(s.stats.min_degree == nprime + a * t);
                    CHECK(s.stats.sigma2 == 2 * (a * t + nprime));
                    // chains: threshold - 1 < delta(G) < threshold
                    Rational thr = s.degree_threshold();
                    CHECK(Rational(s.stats.min_degree) < thr);
                    CHECK(thr - Rational(1) < Rational(s.stats.min_degree));
                }
    for (int a = 2; a <= 3; ++a)
        for (int delta = 0; delta <= 1; ++delta)
            for (int m = 0; m <= 1; ++m) {
                int t = min_id_sharpness_t(a, delta, m);
                if ((2 * (a + delta) + a) * t + 2 > 20) continue;
                IdSharpness s = build_id_sharpness(a, delta, m, t);
                CHECK(s.expected.slack == -a);
                CHECK(s.stats.min_degree == (2 * a + delta) * t + 1);
                CHECK(s.stats.sigma2 == 2 * ((2 * a + delta) * t + 1));
            }
}

TEST_CASE("minimal t is minimal") {
    for (int a = 2; a <= 3; ++a)
        for (int delta = 0; delta <= 1; ++delta) {
            int t = min_critical_sharpness_t(a, delta, 1, 1);
            CHECK_NOTHROW(build_critical_sharpness(a, delta, 1, 1, t));
            if (t > 1)
                CHECK_THROWS_AS(build_critical_sharpness(a, delta, 1, 1, t - 1),
                                std::invalid_argument);
            int ti = min_id_sharpness_t(a, delta, 1);
            CHECK_NOTHROW(build_id_sharpness(a, delta, 1, ti));
            if (ti > 1)
                CHECK_THROWS_AS(build_id_sharpness(a, delta, 1, ti - 1), std::invalid_argument);
        }
    CHECK_THROWS_AS(build_critical_sharpness(1, 1, 0, 0, 5), std::invalid_argument);
}

} // TEST_SUITE
