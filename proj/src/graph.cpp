#include "factorlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace factorlab {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (n > kMaxOrder)
        throw std::invalid_argument("graph order above representation limit of " +
                                    std::to_string(kMaxOrder));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            g.adj_[u] |= 1ull << v;
            g.adj_[v] |= 1ull << u;
            g.edges_.push_back({u, v});
        }
    return g;
}

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    Graph g(n);
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    for (const Edge& e : edges) {
        g.adj_[e.u] |= 1ull << e.v;
        g.adj_[e.v] |= 1ull << e.u;
    }
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
    return (adj_[u] >> v) & 1u;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    return std::popcount(adj_[v]);
}

std::uint64_t Graph::adjacency_mask(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    return adj_[v];
}

long long Graph::degree_sum_avoiding(VertexSet vs, VertexSet excluded) const {
    long long total = 0;
    for (std::uint64_t x = vs.mask(); x; x &= x - 1)
        total += std::popcount(adj_[std::countr_zero(x)] & ~excluded.mask());
    return total;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("self-loop");
    std::vector<Edge> es = edges_;
    es.push_back({std::min(u, v), std::max(u, v)});
    return from_edges(n_, std::move(es));
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
    std::vector<Edge> drop = removed;
    for (Edge& e : drop)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> keep;
    keep.reserve(edges_.size());
    for (const Edge& e : edges_)
        if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
    return from_edges(n_, std::move(keep));
}

Graph Graph::induced(VertexSet keep, std::vector<int>* old_ids) const {
    if (!keep.subset_of(vertices())) throw std::invalid_argument("vertex id out of range");
    std::vector<int> ids = keep.to_vector();
    if (ids.empty()) throw std::invalid_argument("induced subgraph must keep at least one vertex");
    std::vector<int> new_of(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) new_of[ids[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (keep.contains(e.u) && keep.contains(e.v)) es.push_back({new_of[e.u], new_of[e.v]});
    if (old_ids) *old_ids = std::move(ids);
    return from_edges(static_cast<int>(keep.size()), std::move(es));
}

bool Graph::is_independent_set(VertexSet s) const {
    if (!s.subset_of(vertices())) throw std::invalid_argument("vertex id out of range");
    for (std::uint64_t x = s.mask(); x; x &= x - 1)
        if (adj_[std::countr_zero(x)] & s.mask()) return false;
    return true;
}

DegreeStats Graph::degree_stats() const {
    DegreeStats stats;
    stats.min_degree = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) stats.min_degree = std::min(stats.min_degree, degree(v));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            if ((adj_[u] >> v) & 1u) continue;
            int s = degree(u) + degree(v);
            if (!stats.sigma2 || s < *stats.sigma2) stats.sigma2 = s;
        }
    return stats;
}

Graph join(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("join needs at least one part");
    int n = 0;
    for (const Graph& p : parts) n += p.order();
    std::vector<Edge> es;
    int offset = 0;
    std::vector<int> offsets;
    for (const Graph& p : parts) {
        offsets.push_back(offset);
        for (const Edge& e : p.edges()) es.push_back({e.u + offset, e.v + offset});
        offset += p.order();
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = 0; u < parts[i].order(); ++u)
                for (int v = 0; v < parts[j].order(); ++v)
                    es.push_back({offsets[i] + u, offsets[j] + v});
    return Graph::from_edges(n, std::move(es));
}

} // namespace factorlab
