#include "factorlab/properties.hpp"

#include <algorithm>
#include <stdexcept>

#include "factorlab/errors.hpp"
#include "factorlab/limits.hpp"
#include "factorlab/solver.hpp"

namespace factorlab {

namespace {

// Defect witness of `reduced`, translated back through old_ids. Skipped
// when the reduced graph is above the witness-search cap.
std::optional<DeficiencyWitness> translated_defect(const Graph& reduced, const VertexFuncs& vf,
                                                   const std::vector<int>& old_ids) {
    if (reduced.order() > exhaustive_size_cap()) return std::nullopt;
    DeficiencyWitness w = factor_defect_witness(reduced, vf);
    DeficiencyWitness out;
    out.slack = w.slack;
    for (int v : w.s.to_vector()) out.s.add(old_ids[v]);
    for (int v : w.t.to_vector()) out.t.add(old_ids[v]);
    return out;
}

std::vector<int> identity_ids(int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[i] = i;
    return ids;
}

// is_deleted on a reduced graph, reporting removals in original labels.
PropertyCheck deleted_on(const Graph& g, const VertexFuncs& vf, int m,
                         const std::vector<int>& old_ids, VertexSet removed_vertices) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    const auto& edges = g.edges();
    const int take = std::min<int>(m, static_cast<int>(edges.size()));

    std::vector<int> comb(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) comb[i] = i;
    while (true) {
        std::vector<Edge> removed;
        removed.reserve(static_cast<std::size_t>(take));
        for (int i : comb) removed.push_back(edges[i]);
        Graph reduced = g.without_edges(removed);
        if (!has_fractional_factor(reduced, vf).exists) {
            PropertyCounterexample ce;
            ce.removed_vertices = removed_vertices;
            for (const Edge& e : removed) ce.removed_edges.push_back({old_ids[e.u], old_ids[e.v]});
            ce.defect = translated_defect(reduced, vf, old_ids);
            return {false, std::move(ce)};
        }
        if (take == 0) break;
        int i = take - 1;
        int n = static_cast<int>(edges.size());
        while (i >= 0 && comb[i] == n - take + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
    }
    return {true, std::nullopt};
}

} // namespace

PropertyCheck is_deleted(const Graph& g, const VertexFuncs& vf, int m) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    return deleted_on(g, vf, m, identity_ids(g.order()), VertexSet{});
}

PropertyCheck is_critical_deleted(const Graph& g, const VertexFuncs& vf, int nprime, int m) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    if (nprime < 0 || nprime > g.order())
        throw std::invalid_argument("nprime must lie in [0, order]");
    if (nprime == g.order()) return {true, std::nullopt}; // nothing left to check
    require_within_cap(g.order(), "critical-deleted check");

    const int n = g.order();
    std::vector<int> comb(static_cast<std::size_t>(nprime));
    for (int i = 0; i < nprime; ++i) comb[i] = i;
    while (true) {
        VertexSet w;
        for (int i : comb) w.add(i);
        std::vector<int> old_ids;
        Graph reduced = g.induced(g.vertices() - w, &old_ids);
        PropertyCheck inner = deleted_on(reduced, vf.restricted(g.vertices() - w), m, old_ids, w);
        if (!inner.holds) return inner;
        if (nprime == 0) break;
        int i = nprime - 1;
        while (i >= 0 && comb[i] == n - nprime + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < nprime; ++j) comb[j] = comb[j - 1] + 1;
    }
    return {true, std::nullopt};
}

void for_each_independent_set(const Graph& g, const std::function<bool(VertexSet)>& visit) {
    const int n = g.order();
    auto recurse = [&](auto&& self, VertexSet current, int next) -> bool {
        if (!visit(current)) return false;
        for (int v = next; v < n; ++v) {
            if (g.adjacency_mask(v) & current.mask()) continue;
            if (!self(self, VertexSet(current).add(v), v + 1)) return false;
        }
        return true;
    };
    recurse(recurse, VertexSet{}, 0);
}

PropertyCheck is_id_deleted(const Graph& g, const VertexFuncs& vf, int m) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    require_within_cap(g.order(), "id-deleted check");
    const int n = g.order();

    // Preorder order means the reported counterexample is the first
    // failing independent set, the empty set included.
    std::optional<PropertyCheck> failure;
    for_each_independent_set(g, [&](VertexSet current) {
        if (current == g.vertices()) return true; // nothing left to check
        VertexSet keep = g.vertices() - current;
        std::vector<int> old_ids;
        Graph reduced = current.empty() ? g : g.induced(keep, &old_ids);
        if (current.empty()) old_ids = identity_ids(n);
        PropertyCheck inner =
            deleted_on(reduced, current.empty() ? vf : vf.restricted(keep), m, old_ids, current);
        if (!inner.holds) {
            failure = std::move(inner);
            return false;
        }
        return true;
    });
    if (failure) return *failure;
    return {true, std::nullopt};
}

} // namespace factorlab
