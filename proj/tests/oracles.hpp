#pragma once

// Brute-force oracles used by the unit and acceptance suites. These stay
// deliberately dumb and independent of the library's solving paths: the
// criterion scan walks all 3^n (S,T) assignments directly, and the inner
// maximization enumerates every (U, H) pair instead of the greedy bucket
// order used by the implementation.

#include <optional>
#include <vector>

#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/vertex_set.hpp"

namespace factorlab::test {

// min over disjoint S, T of f(S) + d_{G-S}(T) - g(T); the instance has a
// fractional factor iff this is nonnegative.
inline long long oracle_min_criterion_slack(const Graph& g, const VertexFuncs& vf) {
    const int n = g.order();
    long long best = 0; // S = T = empty
    for (std::uint64_t sm = 0; sm < (1ull << n); ++sm) {
        std::uint64_t free_mask = ~sm & ((n == 64 ? ~0ull : (1ull << n) - 1));
        // enumerate T over subsets of the complement of S
        std::uint64_t tm = free_mask;
        while (true) {
            long long slack = 0;
            for (int v = 0; v < n; ++v) {
                if ((sm >> v) & 1u)
                    slack += vf.f(v);
                else if ((tm >> v) & 1u)
                    slack += static_cast<long long>(std::popcount(g.adjacency_mask(v) & ~sm)) -
                             vf.g(v);
            }
            if (slack < best) best = slack;
            if (tm == 0) break;
            tm = (tm - 1) & free_mask;
        }
    }
    return best;
}

// Exhaustive inner maximization: all U subsets of S with |U| = nprime, all
// H subsets of E(G-U) with |H| = m. nullopt when no admissible pair exists.
inline std::optional<long long> oracle_inner_max(const Graph& g, const VertexFuncs& vf,
                                                 VertexSet s, VertexSet t, int nprime, int m) {
    const auto& edges = g.edges();
    const int ec = static_cast<int>(edges.size());
    std::optional<long long> best;
    for (std::uint64_t um = 0; um < (1ull << s.size()); ++um) {
        if (std::popcount(um) != nprime) continue;
        VertexSet u;
        {
            int i = 0;
            for (int v : s.to_vector()) {
                if ((um >> i) & 1u) u.add(v);
                ++i;
            }
        }
        std::vector<int> avail;
        for (int e = 0; e < ec; ++e)
            if (!u.contains(edges[e].u) && !u.contains(edges[e].v)) avail.push_back(e);
        if (static_cast<int>(avail.size()) < m) continue;
        // all m-subsets of avail
        std::vector<int> comb(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) comb[i] = i;
        while (true) {
            long long value = vf.f_sum(u);
            for (int i : comb) {
                const Edge& e = edges[avail[i]];
                value += (t.contains(e.u) ? 1 : 0) + (t.contains(e.v) ? 1 : 0);
                if ((t.contains(e.u) && s.contains(e.v)) || (t.contains(e.v) && s.contains(e.u)))
                    value -= 1;
            }
            if (!best || value > *best) best = value;
            if (m == 0) break;
            int i = m - 1;
            while (i >= 0 && comb[i] == static_cast<int>(avail.size()) - m + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return best;
}

// Direct evaluation of one (S,T) pair of the criterion; nullopt = vacuous.
inline std::optional<long long> oracle_pair_slack(const Graph& g, const VertexFuncs& vf,
                                                  VertexSet s, VertexSet t, int nprime, int m) {
    auto inner = oracle_inner_max(g, vf, s, t, nprime, m);
    if (!inner) return std::nullopt;
    return vf.f_sum(s) - vf.g_sum(t) + g.degree_sum_avoiding(t, s) - *inner;
}

// Independent-set check by plain edge scan.
inline bool oracle_is_independent(const Graph& g, VertexSet s) {
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) return false;
    return true;
}

} // namespace factorlab::test
