#pragma once

#include <optional>
#include <vector>

#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/vertex_set.hpp"

namespace factorlab {

/// Certificate for the exact removal criterion. For disjoint S, T and the
/// inner choice U subset of S (|U| = nprime), H subset of E(G-U) (|H| = m):
///
///   slack = f(S) - g(T) + d_{G-S}(T) - [ f(U) + sum_{x in T} d_H(x) - e_H(T,S) ]
///
/// The instance has the critical-deleted property iff no admissible
/// (S,T,U,H) has negative slack.
struct DeficiencyWitness {
    VertexSet s;
    VertexSet t;
    VertexSet u;
    std::vector<Edge> h;
    long long slack = 0;
};

/// Pure re-evaluation of the slack from the witness components; no
/// maximization. Used to validate reported witnesses.
long long recompute_slack(const Graph& g, const VertexFuncs& vf, const DeficiencyWitness& w);

struct InnerMax {
    long long value = 0;
    VertexSet u;
    std::vector<Edge> h;
};

/// Exact maximum of f(U) + sum_{x in T} d_H(x) - e_H(T,S) over U subset of
/// S with |U| = nprime and H subset of E(G-U) with |H| = m, together with
/// an attaining pair. For fixed U the best H takes the m heaviest edges of
/// E(G-U), where an edge weighs 2 when both ends lie in T, 1 when exactly
/// one end lies in T and the other outside S and T, and 0 otherwise (the
/// +1 of a T-S edge is cancelled by e_H(T,S)).
///
/// Throws InsufficientEdgesError when no U leaves m edges to pick from,
/// and std::invalid_argument when |S| < nprime or S and T intersect.
InnerMax inner_max(const Graph& g, const VertexFuncs& vf, VertexSet s, VertexSet t, int nprime,
                   int m);

/// f(S) - g(T) + d_{G-S}(T) minus the inner maximum.
long long pair_slack(const Graph& g, const VertexFuncs& vf, VertexSet s, VertexSet t, int nprime,
                     int m);

struct CriterionVerdict {
    bool holds = true;
    /// Present iff violated: the minimum-slack witness; ties resolved to
    /// the lexicographically smallest S, then T.
    std::optional<DeficiencyWitness> witness;
    long long pairs_checked = 0;
    /// Pairs whose inner maximization ranged over an empty set (every U
    /// left fewer than m edges); such pairs constrain nothing.
    long long vacuous_pairs = 0;
};

/// Enumerates every disjoint (S, T) with |S| >= nprime and evaluates the
/// slack exactly. Exponential (3^n assignments); rejects graphs above the
/// exhaustive size cap. Parallel and serial runs return identical
/// witnesses. Throws InsufficientEdgesError when every pair is vacuous.
CriterionVerdict check_criterion(const Graph& g, const VertexFuncs& vf, int nprime, int m,
                                 int threads = 0);

/// check_criterion with constant functions g = a, f = b. The inner
/// constant term is then f(U) = b * nprime.
CriterionVerdict check_criterion_ab(const Graph& g, int a, int b, int nprime, int m,
                                    int threads = 0);

} // namespace factorlab
