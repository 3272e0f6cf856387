#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "factorlab/vertex_set.hpp"

namespace factorlab {

/// Undirected edge with endpoints normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DegreeStats {
    int min_degree = 0;
    /// Minimum degree sum over nonadjacent vertex pairs; nullopt when the
    /// graph is complete (no such pair), which compares above every bound.
    std::optional<int> sigma2;
};

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// No self-loops, no parallel edges. Order is limited to 64 so vertex
/// subsets fit in a bitmask.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    /// K_n.
    static Graph complete(int n);
    /// n isolated vertices.
    static Graph empty_graph(int n);
    /// Validates ids, rejects self-loops and duplicates.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Canonically sorted: u < v within each edge, edges ascending.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t adjacency_mask(int v) const;
    VertexSet vertices() const { return VertexSet::range(n_); }
    /// Sum of degrees of `vs` counting only neighbors outside `excluded`,
    /// i.e. d_{G-excluded}(vs).
    long long degree_sum_avoiding(VertexSet vs, VertexSet excluded) const;

    Graph with_edge(int u, int v) const;
    Graph without_edges(const std::vector<Edge>& removed) const;
    /// Induced subgraph on `keep`, relabelled to 0..k-1 preserving the
    /// ascending order of the original ids. `old_ids`, when given, receives
    /// the new-index -> original-id map.
    Graph induced(VertexSet keep, std::vector<int>* old_ids = nullptr) const;

    bool is_independent_set(VertexSet s) const;
    DegreeStats degree_stats() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    explicit Graph(int n);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

/// Disjoint union of the parts plus every edge between vertices of
/// distinct parts (pairwise-complete multi-way join). Parts are relabelled
/// in list order, preserving within-part order.
Graph join(const std::vector<Graph>& parts);

} // namespace factorlab
