#include "factorlab/deficiency.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "factorlab/errors.hpp"
#include "factorlab/limits.hpp"
#include "parallel.hpp"

namespace factorlab {

namespace {

int edge_weight(const Edge& e, VertexSet s, VertexSet t) {
    bool ut = t.contains(e.u), vt = t.contains(e.v);
    if (ut && vt) return 2;
    if (!ut && !vt) return 0;
    int other = ut ? e.v : e.u;
    return (!s.contains(other) && !t.contains(other)) ? 1 : 0;
}

// Value-only evaluator for the inner maximization, reused across the
// 3^n scan. Buffers are per-instance so each worker owns one.
struct InnerEvaluator {
    const Graph& g;
    const VertexFuncs& vf;
    int nprime;
    int m;

    std::vector<std::uint64_t> edge_masks;
    std::vector<int> order;   // edge indices, heaviest bucket first
    std::vector<int> weights; // parallel to order
    std::vector<int> s_elems;
    std::vector<int> f_sorted;
    std::vector<int> comb;

    InnerEvaluator(const Graph& g_, const VertexFuncs& vf_, int nprime_, int m_)
        : g(g_), vf(vf_), nprime(nprime_), m(m_) {
        edge_masks.reserve(g.edges().size());
        for (const Edge& e : g.edges())
            edge_masks.push_back((1ull << e.u) | (1ull << e.v));
    }

    // nullopt when no U subset of S leaves m edges to choose from.
    std::optional<long long> value(VertexSet s, VertexSet t) {
        if (m == 0) return best_f_only(s);

        const auto& edges = g.edges();
        order.clear();
        weights.clear();
        // Bucket by weight; canonical edge order within buckets keeps the
        // attaining H deterministic.
        for (int w = 2; w >= 0; --w)
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (edge_weight(edges[i], s, t) == w) {
                    order.push_back(static_cast<int>(i));
                    weights.push_back(w);
                }

        if (nprime == 0) {
            if (static_cast<int>(order.size()) < m) return std::nullopt;
            long long total = 0;
            for (int i = 0; i < m; ++i) total += weights[i];
            return total;
        }

        s_elems = s.to_vector();
        std::optional<long long> best;
        for_each_combination(static_cast<int>(s_elems.size()), nprime, [&](const std::vector<int>& idx) {
            std::uint64_t umask = 0;
            long long fu = 0;
            for (int i : idx) {
                umask |= 1ull << s_elems[i];
                fu += vf.f(s_elems[i]);
            }
            long long picked = 0, total = fu;
            for (std::size_t j = 0; j < order.size() && picked < m; ++j) {
                if (edge_masks[order[j]] & umask) continue;
                total += weights[j];
                ++picked;
            }
            if (picked < m) return;
            if (!best || total > *best) best = total;
        });
        return best;
    }

private:
    long long best_f_only(VertexSet s) {
        if (nprime == 0) return 0;
        f_sorted.clear();
        for (int v : s.to_vector()) f_sorted.push_back(vf.f(v));
        std::sort(f_sorted.begin(), f_sorted.end(), std::greater<>());
        long long total = 0;
        for (int i = 0; i < nprime; ++i) total += f_sorted[i];
        return total;
    }

    template <typename Fn>
    void for_each_combination(int n, int k, Fn&& fn) {
        comb.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            fn(comb);
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
};

void check_pair_args(VertexSet s, VertexSet t, int nprime, int m) {
    if (nprime < 0 || m < 0) throw std::invalid_argument("nprime and m must be nonnegative");
    if (s.intersects(t)) throw std::invalid_argument("S and T must be disjoint");
    if (s.size() < nprime) throw std::invalid_argument("|S| must be at least nprime");
}

struct BestPair {
    bool valid = false;
    long long slack = 0;
    VertexSet s, t;

    void offer(long long sl, VertexSet sv, VertexSet tv) {
        if (!valid || sl < slack ||
            (sl == slack && (set_lex_less(sv, s) || (sv == s && set_lex_less(tv, t))))) {
            valid = true;
            slack = sl;
            s = sv;
            t = tv;
        }
    }
    void merge(const BestPair& other) {
        if (other.valid) offer(other.slack, other.s, other.t);
    }
};

int pow3(int k) {
    int r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

} // namespace

long long recompute_slack(const Graph& g, const VertexFuncs& vf, const DeficiencyWitness& w) {
    long long inner = vf.f_sum(w.u);
    for (const Edge& e : w.h) {
        int in_t = (w.t.contains(e.u) ? 1 : 0) + (w.t.contains(e.v) ? 1 : 0);
        inner += in_t;
        if ((w.t.contains(e.u) && w.s.contains(e.v)) || (w.t.contains(e.v) && w.s.contains(e.u)))
            inner -= 1;
    }
    return vf.f_sum(w.s) - vf.g_sum(w.t) + g.degree_sum_avoiding(w.t, w.s) - inner;
}

InnerMax inner_max(const Graph& g, const VertexFuncs& vf, VertexSet s, VertexSet t, int nprime,
                   int m) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    check_pair_args(s, t, nprime, m);

    std::vector<std::pair<int, Edge>> ranked; // (-weight, edge), canonical order within weight
    for (int w = 2; w >= 0; --w)
        for (const Edge& e : g.edges())
            if (edge_weight(e, s, t) == w) ranked.push_back({w, e});

    std::optional<InnerMax> best;
    std::vector<int> elems = s.to_vector();
    std::vector<int> comb(static_cast<std::size_t>(nprime));
    for (int i = 0; i < nprime; ++i) comb[i] = i;
    bool more = true;
    while (more) {
        VertexSet u;
        long long fu = 0;
        for (int i : comb) {
            u.add(elems[i]);
            fu += vf.f(elems[i]);
        }
        std::vector<Edge> h;
        long long total = fu;
        for (const auto& [w, e] : ranked) {
            if (static_cast<int>(h.size()) == m) break;
            if (u.contains(e.u) || u.contains(e.v)) continue;
            h.push_back(e);
            total += w;
        }
        if (static_cast<int>(h.size()) == m && (!best || total > best->value))
            best = InnerMax{total, u, std::move(h)};

        if (nprime == 0) break;
        int i = nprime - 1;
        int n = static_cast<int>(elems.size());
        while (i >= 0 && comb[i] == n - nprime + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++comb[i];
            for (int j = i + 1; j < nprime; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    if (!best)
        throw InsufficientEdgesError("no choice of U leaves " + std::to_string(m) +
                                     " edges in E(G-U)");
    return *best;
}

long long pair_slack(const Graph& g, const VertexFuncs& vf, VertexSet s, VertexSet t, int nprime,
                     int m) {
    InnerMax im = inner_max(g, vf, s, t, nprime, m);
    return vf.f_sum(s) - vf.g_sum(t) + g.degree_sum_avoiding(t, s) - im.value;
}

CriterionVerdict check_criterion(const Graph& g, const VertexFuncs& vf, int nprime, int m,
                                 int threads) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    if (nprime < 0 || m < 0) throw std::invalid_argument("nprime and m must be nonnegative");
    if (nprime > g.order())
        throw std::invalid_argument("nprime exceeds the graph order");
    require_within_cap(g.order(), "criterion check");

    const int n = g.order();
    threads = detail::resolve_threads(threads);
    // Partition the scan by the S/T/neither assignment of a short vertex
    // prefix; each chunk reduces to a local best so results do not depend
    // on scheduling.
    int prefix = 0;
    while (prefix < n && pow3(prefix) < 4 * threads && prefix < 10) ++prefix;
    const int chunks = pow3(prefix);

    std::vector<BestPair> best(static_cast<std::size_t>(chunks));
    std::vector<long long> checked(static_cast<std::size_t>(chunks), 0);
    std::vector<long long> vacuous(static_cast<std::size_t>(chunks), 0);

    detail::for_each_chunk(chunks, threads, [&](int chunk) {
        InnerEvaluator eval(g, vf, nprime, m);
        std::uint64_t smask = 0, tmask = 0;
        long long fs = 0, gt = 0;
        int digits = chunk;
        for (int v = 0; v < prefix; ++v, digits /= 3) {
            switch (digits % 3) {
            case 1:
                smask |= 1ull << v;
                fs += vf.f(v);
                break;
            case 2:
                tmask |= 1ull << v;
                gt += vf.g(v);
                break;
            default:
                break;
            }
        }

        auto evaluate = [&](std::uint64_t sm, std::uint64_t tm, long long fsum, long long gsum) {
            if (std::popcount(sm) < nprime) return;
            ++checked[chunk];
            VertexSet s = VertexSet::from_mask(sm), t = VertexSet::from_mask(tm);
            std::optional<long long> inner = eval.value(s, t);
            if (!inner) {
                ++vacuous[chunk];
                return;
            }
            long long slack = fsum - gsum + g.degree_sum_avoiding(t, s) - *inner;
            best[chunk].offer(slack, s, t);
        };

        auto extend = [&](auto&& self, int v, std::uint64_t sm, std::uint64_t tm, long long fsum,
                          long long gsum) -> void {
            if (v == n) {
                evaluate(sm, tm, fsum, gsum);
                return;
            }
            self(self, v + 1, sm, tm, fsum, gsum);
            self(self, v + 1, sm | (1ull << v), tm, fsum + vf.f(v), gsum);
            self(self, v + 1, sm, tm | (1ull << v), fsum, gsum + vf.g(v));
        };
        extend(extend, prefix, smask, tmask, fs, gt);
    });

    CriterionVerdict verdict;
    BestPair overall;
    for (int c = 0; c < chunks; ++c) {
        overall.merge(best[c]);
        verdict.pairs_checked += checked[c];
        verdict.vacuous_pairs += vacuous[c];
    }
    if (verdict.pairs_checked == verdict.vacuous_pairs)
        throw InsufficientEdgesError("no (S,T) pair admits " + std::to_string(m) +
                                     " edges in E(G-U); criterion undefined");
    if (overall.valid && overall.slack < 0) {
        InnerMax im = inner_max(g, vf, overall.s, overall.t, nprime, m);
        DeficiencyWitness w{overall.s, overall.t, im.u, std::move(im.h), overall.slack};
        verdict.holds = false;
        verdict.witness = std::move(w);
    }
    return verdict;
}

CriterionVerdict check_criterion_ab(const Graph& g, int a, int b, int nprime, int m, int threads) {
    if (a < 0 || b < a) throw std::invalid_argument("need b >= a >= 0");
    return check_criterion(g, VertexFuncs::constant(g.order(), a, b), nprime, m, threads);
}

} // namespace factorlab
