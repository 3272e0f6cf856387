#pragma once

#include <vector>

#include "factorlab/deficiency.hpp"
#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

/// K_{at+n'} joined to (bt+1) isolated vertices with g = a, f = b = a+delta:
/// the minimum degree n' + at falls strictly between threshold-1 and the
/// degree threshold, yet the instance is not critical-deleted; the witness
/// (S = clique side, T = independent side) has slack exactly -a.
struct CriticalSharpness {
    Graph graph;
    VertexFuncs funcs;
    ScenarioParams params;
    int t = 1;
    DeficiencyWitness expected;
    DegreeStats stats;

    /// ((b-delta) n + (delta+a) n') / (a+b), the minimum-degree and
    /// max-pair threshold this family narrowly misses.
    Rational degree_threshold() const;
};

/// Three-part join side | K_{at} | side with sides of bt+1 isolated
/// vertices, g = a, f = b = a+delta: deleting one side leaves a graph
/// whose (S = clique, T = other side) slack is -a, so the graph is not
/// ID-deleted although its degrees miss the threshold by less than 1.
struct IdSharpness {
    Graph graph;
    VertexFuncs funcs;
    ScenarioParams params;
    int t = 1;
    /// The first side; deleting it produces the violating instance.
    VertexSet expected_independent;
    Graph reduced;
    std::vector<int> reduced_to_original;
    /// Witness inside `reduced` (its labels).
    DeficiencyWitness expected;
    DegreeStats stats;

    /// (a+b) n / (b+2a+delta).
    Rational degree_threshold() const;
};

/// Throws std::invalid_argument naming the violated inequality (and the
/// minimal valid t) when t is too small.
CriticalSharpness build_critical_sharpness(int a, int delta, int nprime, int m, int t);
IdSharpness build_id_sharpness(int a, int delta, int m, int t);

/// Smallest t accepted by the corresponding constructor.
int min_critical_sharpness_t(int a, int delta, int nprime, int m);
int min_id_sharpness_t(int a, int delta, int m);

} // namespace factorlab
