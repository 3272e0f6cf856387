#include "factorlab/solver.hpp"

#include <bit>
#include <stdexcept>

#include "factorlab/errors.hpp"
#include "factorlab/limits.hpp"
#include "factorlab/maxflow.hpp"

namespace factorlab {

FractionalAssignment::FractionalAssignment(std::vector<int> half_units)
    : half_(std::move(half_units)) {
    for (int v : half_)
        if (v < 0 || v > 2)
            throw std::invalid_argument("assignment values must be 0, 1/2 or 1");
}

std::string FractionalAssignment::value_string(int edge_index) const {
    switch (half_[edge_index]) {
    case 0: return "0";
    case 1: return "1/2";
    default: return "1";
    }
}

int weighted_degree_half_units(const Graph& g, const FractionalAssignment& h, int v) {
    int total = 0;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == v || edges[i].v == v) total += h.half_units(static_cast<int>(i));
    return total;
}

FactorResult has_fractional_factor(const Graph& g, const VertexFuncs& vf) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    const int n = g.order();

    // Node layout: 0 = source, 1 = sink, 2+u = left copy u', 2+n+u = right
    // copy u''. Lower bounds are shifted into node excesses, then settled
    // from a supersource/supersink pair.
    const int src = 0, snk = 1;
    const int super_src = 2 + 2 * n, super_snk = 3 + 2 * n;
    MaxFlow net(4 + 2 * n);
    std::vector<long long> excess(static_cast<std::size_t>(2 + 2 * n), 0);

    auto bounded_arc = [&](int from, int to, long long lo, long long hi) {
        int id = net.add_arc(from, to, hi - lo);
        excess[to] += lo;
        excess[from] -= lo;
        return id;
    };

    long long demand_total = 0;
    for (int u = 0; u < n; ++u) {
        bounded_arc(src, 2 + u, vf.g(u), vf.f(u));
        bounded_arc(2 + n + u, snk, vf.g(u), vf.f(u));
        demand_total += 2 * vf.f(u);
    }
    std::vector<std::pair<int, int>> edge_arcs; // (u->v'', v->u'') per edge
    for (const Edge& e : g.edges()) {
        int fwd = net.add_arc(2 + e.u, 2 + n + e.v, 1);
        int bwd = net.add_arc(2 + e.v, 2 + n + e.u, 1);
        edge_arcs.emplace_back(fwd, bwd);
    }
    net.add_arc(snk, src, demand_total + 1);

    long long need = 0;
    for (int v = 0; v < 2 + 2 * n; ++v) {
        if (excess[v] > 0) {
            net.add_arc(super_src, v, excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            net.add_arc(v, super_snk, -excess[v]);
        }
    }

    if (net.run(super_src, super_snk) != need) return {false, std::nullopt};

    std::vector<int> half;
    half.reserve(edge_arcs.size());
    for (auto [fwd, bwd] : edge_arcs)
        half.push_back(static_cast<int>(net.flow_on(fwd) + net.flow_on(bwd)));
    return {true, FractionalAssignment(std::move(half))};
}

bool verify_assignment(const Graph& g, const VertexFuncs& vf, const FractionalAssignment& h) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    if (h.size() != g.edge_count())
        throw std::invalid_argument("assignment does not cover exactly E(G)");
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int units = h.half_units(static_cast<int>(i));
        if (units < 0 || units > 2) return false;
        deg[edges[i].u] += units;
        deg[edges[i].v] += units;
    }
    for (int v = 0; v < g.order(); ++v)
        if (deg[v] < 2 * vf.g(v) || deg[v] > 2 * vf.f(v)) return false;
    return true;
}

DeficiencyWitness factor_defect_witness(const Graph& g, const VertexFuncs& vf) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    require_within_cap(g.order(), "defect witness search");
    const int n = g.order();

    bool found = false;
    long long best_slack = 0;
    VertexSet best_s, best_t;
    // Minimum slack, ties resolved as if S were enumerated by increasing
    // size then lexicographic order and the first minimum kept.
    for (std::uint64_t sm = 0; sm < (1ull << n); ++sm) {
        VertexSet s = VertexSet::from_mask(sm);
        VertexSet t;
        long long slack = vf.f_sum(s);
        for (int x = 0; x < n; ++x) {
            if (s.contains(x)) continue;
            int d = std::popcount(g.adjacency_mask(x) & ~sm);
            if (d < vf.g(x)) {
                t.add(x);
                slack += d - vf.g(x);
            }
        }
        bool better = !found || slack < best_slack ||
                      (slack == best_slack &&
                       (s.size() < best_s.size() ||
                        (s.size() == best_s.size() && set_lex_less(s, best_s))));
        if (better) {
            found = true;
            best_slack = slack;
            best_s = s;
            best_t = t;
        }
    }
    if (best_slack >= 0)
        throw std::logic_error("factor_defect_witness called on a feasible instance");
    return DeficiencyWitness{best_s, best_t, VertexSet{}, {}, best_slack};
}

} // namespace factorlab
