#include "factorlab/extremal.hpp"

#include <stdexcept>
#include <string>

namespace factorlab {

namespace {

void check_common(int a, int delta, int nprime, int m) {
    if (a < 2) throw std::invalid_argument("need a >= 2");
    if (delta < 0 || nprime < 0 || m < 0)
        throw std::invalid_argument("delta, nprime and m must be nonnegative");
}

// Validity of t for the clique-join family: the order bound
// (delta+a)(n - n') > (a+b+2m-2)(a+b) and the auxiliary degree bound
// delta(G) >= m + n' + b(b-delta)/(delta+a), with b = a+delta.
bool critical_t_valid(int a, int delta, int nprime, int m, int t) {
    if (t < 1) return false;
    long long b = a + delta;
    long long n = (a + b) * t + 1 + nprime;
    if ((delta + a) * (n - nprime) <= (a + b + 2 * m - 2) * (a + b)) return false;
    long long min_deg = nprime + static_cast<long long>(a) * t;
    return (delta + a) * (min_deg - m - nprime) >= b * (b - delta);
}

bool id_t_valid(int a, int delta, int m, int t) {
    if (t < 1) return false;
    long long b = a + delta;
    long long n = (2 * b + a) * t + 2;
    // Order bound of the minimum-degree and sigma2 ID conditions.
    return (delta + a) * n > (b + 2 * a + delta) * (a + b + 2 * m - 2);
}

std::vector<Edge> first_edges_avoiding(const Graph& g, VertexSet avoid, int m) {
    std::vector<Edge> h;
    for (const Edge& e : g.edges()) {
        if (static_cast<int>(h.size()) == m) break;
        if (avoid.contains(e.u) || avoid.contains(e.v)) continue;
        h.push_back(e);
    }
    if (static_cast<int>(h.size()) < m)
        throw std::invalid_argument("m exceeds the edges available in the construction");
    return h;
}

} // namespace

Rational CriticalSharpness::degree_threshold() const {
    const auto& p = params;
    return Rational(static_cast<long long>(p.b - p.delta) * graph.order() +
                        static_cast<long long>(p.delta + p.a) * p.nprime,
                    p.a + p.b);
}

Rational IdSharpness::degree_threshold() const {
    const auto& p = params;
    return Rational(static_cast<long long>(p.a + p.b) * graph.order(), p.b + 2 * p.a + p.delta);
}

CriticalSharpness build_critical_sharpness(int a, int delta, int nprime, int m, int t) {
    check_common(a, delta, nprime, m);
    const int b = a + delta;
    if (!critical_t_valid(a, delta, nprime, m, t))
        throw std::invalid_argument(
            "t = " + std::to_string(t) +
            " violates n > (a+b+2m-2)(a+b)/(delta+a) + n' or delta(G) >= m + n' + "
            "b(b-delta)/(delta+a); minimal valid t is " +
            std::to_string(min_critical_sharpness_t(a, delta, nprime, m)));

    const int clique = a * t + nprime;
    const int singles = b * t + 1;
    CriticalSharpness out{
        join({Graph::complete(clique), Graph::empty_graph(singles)}),
        VertexFuncs::constant(clique + singles, a, b),
        ScenarioParams{a, b, delta, nprime, m},
        t,
        {},
        {},
    };
    out.stats = out.graph.degree_stats();

    DeficiencyWitness w;
    for (int v = 0; v < clique; ++v) w.s.add(v);
    for (int v = clique; v < clique + singles; ++v) w.t.add(v);
    for (int v = 0; v < nprime; ++v) w.u.add(v);
    w.h = first_edges_avoiding(out.graph, w.u, m);
    w.slack = -a;
    if (recompute_slack(out.graph, out.funcs, w) != -a)
        throw std::logic_error("sharpness witness does not recompute to -a");
    out.expected = std::move(w);

    if (out.stats.min_degree != nprime + a * t)
        throw std::logic_error("sharpness construction: unexpected minimum degree");
    Rational threshold = out.degree_threshold();
    Rational deg(out.stats.min_degree);
    Rational sigma2(out.stats.sigma2.value());
    Rational two(2);
    if (!(deg < threshold && threshold - Rational(1) < deg))
        throw std::logic_error("sharpness construction: degree chain failed");
    if (!(sigma2 < two * threshold && sigma2 >= two * threshold - Rational(1)))
        throw std::logic_error("sharpness construction: sigma2 chain failed");
    return out;
}

IdSharpness build_id_sharpness(int a, int delta, int m, int t) {
    check_common(a, delta, 0, m);
    const int b = a + delta;
    if (!id_t_valid(a, delta, m, t))
        throw std::invalid_argument(
            "t = " + std::to_string(t) +
            " violates n > (b+2a+delta)(a+b+2m-2)/(delta+a); minimal valid t is " +
            std::to_string(min_id_sharpness_t(a, delta, m)));

    const int side = b * t + 1;
    const int clique = a * t;
    IdSharpness out{
        join({Graph::empty_graph(side), Graph::complete(clique), Graph::empty_graph(side)}),
        VertexFuncs::constant(2 * side + clique, a, b),
        ScenarioParams{a, b, delta, 0, m},
        t,
        {},
        Graph::empty_graph(1),
        {},
        {},
        {},
    };
    for (int v = 0; v < side; ++v) out.expected_independent.add(v);
    out.stats = out.graph.degree_stats();
    out.reduced =
        out.graph.induced(out.graph.vertices() - out.expected_independent, &out.reduced_to_original);

    DeficiencyWitness w;
    for (int v = 0; v < clique; ++v) w.s.add(v);
    for (int v = clique; v < clique + side; ++v) w.t.add(v);
    w.h = first_edges_avoiding(out.reduced, VertexSet{}, m);
    w.slack = -a;
    if (recompute_slack(out.reduced, VertexFuncs::constant(out.reduced.order(), a, b), w) != -a)
        throw std::logic_error("tightness witness does not recompute to -a");
    out.expected = std::move(w);

    if (!out.graph.is_independent_set(out.expected_independent))
        throw std::logic_error("tightness construction: side is not independent");
    if (out.stats.min_degree != (a + b) * t + 1 ||
        out.stats.sigma2 != std::optional<int>(2 * (a + b) * t + 2))
        throw std::logic_error("tightness construction: unexpected degree statistics");
    Rational threshold = out.degree_threshold();
    Rational deg(out.stats.min_degree);
    Rational sigma2(out.stats.sigma2.value());
    Rational two(2);
    if (!(deg < threshold && threshold - Rational(1) < deg))
        throw std::logic_error("tightness construction: degree chain failed");
    if (!(sigma2 < two * threshold && two * threshold - Rational(1) < sigma2))
        throw std::logic_error("tightness construction: sigma2 chain failed");
    return out;
}

int min_critical_sharpness_t(int a, int delta, int nprime, int m) {
    check_common(a, delta, nprime, m);
    for (int t = 1; t < 1 << 20; ++t)
        if (critical_t_valid(a, delta, nprime, m, t)) return t;
    throw std::logic_error("no valid t found");
}

int min_id_sharpness_t(int a, int delta, int m) {
    check_common(a, delta, 0, m);
    for (int t = 1; t < 1 << 20; ++t)
        if (id_t_valid(a, delta, m, t)) return t;
    throw std::logic_error("no valid t found");
}

} // namespace factorlab
