#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "factorlab/deficiency.hpp"
#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"

namespace factorlab {

/// Visits every independent set of g in lexicographic order, the empty
/// set first, by backtracking with adjacency pruning. Stops early when
/// the visitor returns false.
void for_each_independent_set(const Graph& g, const std::function<bool(VertexSet)>& visit);

/// First failing removal found by a brute-force property checker, in the
/// labels of the original graph.
struct PropertyCounterexample {
    VertexSet removed_vertices;
    std::vector<Edge> removed_edges;
    /// Defect of the reduced graph (S, T in original labels); absent only
    /// when the reduced graph is too large for the witness search.
    std::optional<DeficiencyWitness> defect;
};

struct PropertyCheck {
    bool holds = true;
    std::optional<PropertyCounterexample> counterexample;
};

/// Definition-level check: a fractional factor survives the deletion of
/// every edge set of size min(m, |E|). Enumerates edge subsets in
/// canonical order and stops at the first failure.
PropertyCheck is_deleted(const Graph& g, const VertexFuncs& vf, int m);

/// is_deleted holds on G - W for every vertex set W of size nprime.
PropertyCheck is_critical_deleted(const Graph& g, const VertexFuncs& vf, int nprime, int m);

/// is_deleted holds on G - I for every independent set I, the empty set
/// included. Independent sets are enumerated by backtracking in
/// lexicographic order.
PropertyCheck is_id_deleted(const Graph& g, const VertexFuncs& vf, int m);

} // namespace factorlab
