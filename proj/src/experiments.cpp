#include "factorlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "factorlab/deficiency.hpp"
#include "factorlab/limits.hpp"
#include "factorlab/properties.hpp"
#include "factorlab/rng.hpp"
#include "factorlab/solver.hpp"
#include "parallel.hpp"

namespace factorlab {

namespace {

Graph random_graph_floors(int n, const std::vector<int>& floors, Rng& rng,
                          double edge_probability) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_probability)) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, std::move(edges));

    while (true) {
        int worst = -1;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) < floors[v] && (worst < 0 || g.degree(v) < g.degree(worst)))
                worst = v;
        if (worst < 0) break;
        std::vector<int> candidates;
        for (int u = 0; u < n; ++u)
            if (u != worst && !g.has_edge(worst, u)) candidates.push_back(u);
        int pick = candidates[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(candidates.size()) - 1))];
        g = g.with_edge(worst, pick);
    }
    return g;
}

} // namespace

Graph random_graph(int n, int min_degree, std::uint64_t seed, double edge_probability) {
    if (n < 1 || n > Graph::kMaxOrder) throw std::invalid_argument("bad graph order");
    if (min_degree < 0 || min_degree >= n)
        throw std::invalid_argument("min_degree must lie in [0, n-1]");
    Rng rng(seed);
    return random_graph_floors(n, std::vector<int>(static_cast<std::size_t>(n), min_degree), rng,
                               edge_probability);
}

VertexFuncs random_vertex_funcs(const Graph& g, const ScenarioParams& params, std::uint64_t seed) {
    if (params.b - params.delta < params.a || params.a < 0 || params.delta < 0)
        throw std::invalid_argument("empty band: need b - delta >= a >= 0");
    Rng rng(seed);
    std::vector<int> gv, fv;
    for (int v = 0; v < g.order(); ++v) {
        int gx = rng.uniform_int(params.a, params.b - params.delta);
        int fx = rng.uniform_int(gx + params.delta, params.b);
        gv.push_back(gx);
        fv.push_back(fx);
    }
    return VertexFuncs(std::move(gv), std::move(fv), params);
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("nonisomorphic_graphs supports n in [1, 6]");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());
    std::vector<int> pair_index(static_cast<std::size_t>(n * n), -1);
    for (int i = 0; i < np; ++i)
        pair_index[pairs[i].first * n + pairs[i].second] = i;
    auto index_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return pair_index[u * n + v];
    };

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::uint32_t> canonical;
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = mask;
        do {
            std::uint32_t relabeled = 0;
            for (int i = 0; i < np; ++i)
                if ((mask >> i) & 1u)
                    relabeled |= 1u << index_of(perm[pairs[i].first], perm[pairs[i].second]);
            best = std::min(best, relabeled);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canonical.insert(best);
    }

    std::vector<Graph> out;
    for (std::uint32_t mask : canonical) {
        std::vector<Edge> edges;
        for (int i = 0; i < np; ++i)
            if ((mask >> i) & 1u) edges.push_back({pairs[i].first, pairs[i].second});
        out.push_back(Graph::from_edges(n, std::move(edges)));
    }
    return out;
}

namespace {

ScenarioParams params_from_json(const nlohmann::json& j) {
    ScenarioParams p;
    p.a = j.value("a", 0);
    p.b = j.value("b", 0);
    p.delta = j.value("delta", 0);
    p.nprime = j.value("nprime", 0);
    p.m = j.value("m", 0);
    return p;
}

nlohmann::json params_json(const ScenarioParams& p) {
    return {{"a", p.a}, {"b", p.b}, {"delta", p.delta}, {"nprime", p.nprime}, {"m", p.m}};
}

struct TrialOutcome {
    bool skipped = false;
    std::string skip_reason;
    bool hypotheses_held = false;
    bool conclusion_true = false;
    bool inconsistent = false;
    nlohmann::json near_miss; // null unless an attempt failed exactly one clause
};

TrialOutcome run_implication_trial(const PhaseConfig& phase, std::uint64_t trial_seed,
                                   int min_order) {
    TrialOutcome out;
    Rng rng(trial_seed);
    const int lo = std::max(phase.n_min, min_order);
    if (lo > phase.n_max) {
        out.skipped = true;
        out.skip_reason = "order bound leaves no admissible n in range";
        return out;
    }

    for (int attempt = 0; attempt < 8; ++attempt) {
        Rng attempt_rng(derive_seed(trial_seed, static_cast<std::uint64_t>(attempt)));
        int n = attempt_rng.uniform_int(lo, phase.n_max);

        Graph g = Graph::complete(1);
        if (condition_requires_complete(phase.condition)) {
            g = Graph::complete(n);
        } else {
            int floor_all = condition_degree_floor(phase.condition, phase.params, n);
            floor_all = std::min(floor_all, n - 1);
            std::vector<int> floors(static_cast<std::size_t>(n), floor_all);
            if (condition_is_max_pair(phase.condition)) {
                int exempt = attempt_rng.uniform_int(0, n - 1);
                floors[exempt] = std::min(
                    condition_aux_degree_floor(phase.condition, phase.params, n), n - 1);
            }
            g = random_graph_floors(n, floors, attempt_rng, 0.5);
        }
        VertexFuncs vf =
            condition_requires_constants(phase.condition)
                ? VertexFuncs(std::vector<int>(static_cast<std::size_t>(n), phase.params.a),
                              std::vector<int>(static_cast<std::size_t>(n), phase.params.b),
                              phase.params)
                : random_vertex_funcs(g, phase.params, attempt_rng.next());

        ConditionVerdict hyp = check_hypotheses(g, vf, phase.params, phase.condition);
        if (!hyp.hypotheses_hold) {
            std::vector<std::string> failed;
            for (const Clause& c : hyp.clauses)
                if (!c.holds) failed.push_back(c.name + " (" + c.detail + ")");
            if (failed.size() == 1 && out.near_miss.is_null())
                out.near_miss = {{"n", n}, {"failed_clause", failed[0]}};
            continue;
        }
        ConditionVerdict full = verify_implication(g, vf, phase.params, phase.condition);
        out.hypotheses_held = true;
        out.conclusion_true = full.conclusion.value_or(false);
        out.inconsistent = full.consistent.has_value() && !*full.consistent;
        if (!full.conclusion.has_value()) {
            out.skipped = true;
            out.skip_reason = full.skipped_reason;
        }
        return out;
    }
    out.skipped = true;
    out.skip_reason = "failed to force hypotheses after 8 attempts";
    return out;
}

nlohmann::json run_implication_phase(const PhaseConfig& phase, std::uint64_t phase_seed,
                                     int threads) {
    const int min_order =
        std::max(condition_min_order(phase.condition, phase.params),
                 phase.params.nprime + 2);
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(phase.trials));
    detail::for_each_chunk(phase.trials, threads, [&](int trial) {
        outcomes[trial] = run_implication_trial(
            phase, derive_seed(phase_seed, static_cast<std::uint64_t>(trial)), min_order);
    });

    long long held = 0, concluded = 0, inconsistent = 0, skipped = 0;
    nlohmann::json skipped_entries = nlohmann::json::array();
    nlohmann::json near_misses = nlohmann::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const TrialOutcome& o = outcomes[i];
        held += o.hypotheses_held;
        concluded += o.conclusion_true;
        inconsistent += o.inconsistent;
        if (o.skipped) {
            ++skipped;
            if (skipped_entries.size() < 10)
                skipped_entries.push_back({{"trial", i}, {"reason", o.skip_reason}});
        }
        if (!o.near_miss.is_null() && near_misses.size() < 10) {
            nlohmann::json nm = o.near_miss;
            nm["trial"] = i;
            near_misses.push_back(std::move(nm));
        }
    }
    return {{"type", "implication"},
            {"condition", to_string(phase.condition)},
            {"params", params_json(phase.params)},
            {"trials", phase.trials},
            {"hypotheses_held", held},
            {"conclusion_true", concluded},
            {"inconsistent", inconsistent},
            {"skipped", skipped},
            {"skipped_entries", skipped_entries},
            {"near_misses", near_misses}};
}

nlohmann::json describe_disagreement(const Graph& g, const VertexFuncs& vf) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    nlohmann::json gv = nlohmann::json::array(), fv = nlohmann::json::array();
    for (int v = 0; v < g.order(); ++v) {
        gv.push_back(vf.g(v));
        fv.push_back(vf.f(v));
    }
    return {{"n", g.order()}, {"edges", edges}, {"g", gv}, {"f", fv}};
}

nlohmann::json run_solver_oracle_phase(const PhaseConfig& phase, std::uint64_t phase_seed,
                                       int threads) {
    long long agreements = 0, disagreements = 0;
    nlohmann::json payloads = nlohmann::json::array();

    auto compare = [&](const Graph& g, const VertexFuncs& vf) {
        bool via_flow = has_fractional_factor(g, vf).exists;
        bool via_criterion = check_criterion(g, vf, 0, 0, 1).holds;
        if (via_flow == via_criterion) {
            ++agreements;
        } else {
            ++disagreements;
            if (payloads.size() < 5) payloads.push_back(describe_disagreement(g, vf));
        }
    };

    if (phase.mode == "exhaustive") {
        // Every graph up to isomorphism, every g <= f <= value_max.
        const int pair_count = (phase.value_max + 1) * (phase.value_max + 2) / 2;
        std::vector<std::pair<int, int>> value_pairs;
        for (int gv = 0; gv <= phase.value_max; ++gv)
            for (int fv = gv; fv <= phase.value_max; ++fv) value_pairs.emplace_back(gv, fv);

        for (int n = 1; n <= phase.max_n; ++n) {
            std::vector<Graph> graphs = nonisomorphic_graphs(n);
            long long combos = 1;
            for (int i = 0; i < n; ++i) combos *= pair_count;

            std::vector<long long> agree(graphs.size(), 0), disagree(graphs.size(), 0);
            std::vector<nlohmann::json> bad(graphs.size());
            detail::for_each_chunk(static_cast<int>(graphs.size()), threads, [&](int gi) {
                const Graph& g = graphs[static_cast<std::size_t>(gi)];
                std::vector<int> gv(static_cast<std::size_t>(n)), fv(static_cast<std::size_t>(n));
                for (long long code = 0; code < combos; ++code) {
                    long long c = code;
                    for (int v = 0; v < n; ++v, c /= pair_count) {
                        auto [gx, fx] = value_pairs[static_cast<std::size_t>(c % pair_count)];
                        gv[v] = gx;
                        fv[v] = fx;
                    }
                    VertexFuncs vf = VertexFuncs::from_values(gv, fv);
                    bool via_flow = has_fractional_factor(g, vf).exists;
                    bool via_criterion = check_criterion(g, vf, 0, 0, 1).holds;
                    if (via_flow == via_criterion) {
                        ++agree[gi];
                    } else {
                        ++disagree[gi];
                        if (bad[gi].is_null()) bad[gi] = describe_disagreement(g, vf);
                    }
                }
            });
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                agreements += agree[i];
                disagreements += disagree[i];
                if (!bad[i].is_null() && payloads.size() < 5) payloads.push_back(bad[i]);
            }
        }
    } else if (phase.mode == "random") {
        for (int trial = 0; trial < phase.trials; ++trial) {
            Rng rng(derive_seed(phase_seed, static_cast<std::uint64_t>(trial)));
            int n = rng.uniform_int(phase.n_min, phase.n_max);
            double p = 0.2 + 0.15 * rng.uniform_int(0, 4);
            Graph g = random_graph(n, 0, rng.next(), p);
            std::vector<int> gv, fv;
            for (int v = 0; v < n; ++v) {
                int gx = rng.uniform_int(0, phase.value_max);
                gv.push_back(gx);
                fv.push_back(rng.uniform_int(gx, phase.value_max));
            }
            compare(g, VertexFuncs::from_values(gv, fv));
        }
    } else {
        throw std::invalid_argument("solver-oracle mode must be 'exhaustive' or 'random'");
    }

    return {{"type", "solver-oracle"},
            {"mode", phase.mode},
            {"instances", agreements + disagreements},
            {"agreements", agreements},
            {"disagreements", disagreements},
            {"disagreement_payloads", payloads}};
}

// Every nprime-subset removal must leave at least m edges, otherwise the
// exact-size criterion and the delete-what-remains brute force discuss
// different instances.
bool enough_edges_everywhere(const Graph& g, int nprime, int m) {
    if (m == 0) return true;
    std::vector<int> ids(static_cast<std::size_t>(g.order()));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> comb(static_cast<std::size_t>(nprime));
    for (int i = 0; i < nprime; ++i) comb[i] = i;
    while (true) {
        VertexSet u;
        for (int i : comb) u.add(i);
        int remaining = 0;
        for (const Edge& e : g.edges())
            if (!u.contains(e.u) && !u.contains(e.v)) ++remaining;
        if (remaining < m) return false;
        if (nprime == 0) break;
        int i = nprime - 1;
        while (i >= 0 && comb[i] == g.order() - nprime + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < nprime; ++j) comb[j] = comb[j - 1] + 1;
    }
    return true;
}

nlohmann::json run_criterion_oracle_phase(const PhaseConfig& phase, std::uint64_t phase_seed,
                                          int threads) {
    std::vector<std::array<int, 3>> bands;
    for (const auto& band : phase.bands)
        if (band[1] - band[2] >= band[0]) bands.push_back(band); // skip empty bands

    struct Outcome {
        bool skipped = false;
        std::string reason;
        bool agreed = false;
        nlohmann::json payload;
    };
    std::vector<Outcome> outcomes(static_cast<std::size_t>(phase.trials));

    detail::for_each_chunk(phase.trials, threads, [&](int trial) {
        Outcome& out = outcomes[trial];
        Rng rng(derive_seed(phase_seed, static_cast<std::uint64_t>(trial)));
        auto band = bands[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(bands.size()) - 1))];
        ScenarioParams p;
        p.a = band[0];
        p.b = band[1];
        p.delta = band[2];
        p.nprime = rng.uniform_int(0, phase.nprime_max);
        p.m = rng.uniform_int(0, phase.m_max);

        Graph g = Graph::complete(1);
        bool found = false;
        for (int attempt = 0; attempt < 20 && !found; ++attempt) {
            int n = rng.uniform_int(std::max(phase.n_min, p.nprime + 2), phase.n_max);
            g = random_graph(n, 0, rng.next(), 0.5);
            found = enough_edges_everywhere(g, p.nprime, p.m);
        }
        if (!found) {
            out.skipped = true;
            out.reason = "could not sample a graph with enough edges";
            return;
        }
        VertexFuncs vf = random_vertex_funcs(g, p, rng.next());
        bool brute = is_critical_deleted(g, vf, p.nprime, p.m).holds;
        bool criterion = check_criterion(g, vf, p.nprime, p.m, 1).holds;
        out.agreed = brute == criterion;
        if (!out.agreed) {
            out.payload = describe_disagreement(g, vf);
            out.payload["params"] = params_json(p);
        }
    });

    long long agreements = 0, disagreements = 0, skipped = 0;
    nlohmann::json payloads = nlohmann::json::array();
    nlohmann::json skipped_entries = nlohmann::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const Outcome& o = outcomes[i];
        if (o.skipped) {
            ++skipped;
            if (skipped_entries.size() < 10)
                skipped_entries.push_back({{"trial", i}, {"reason", o.reason}});
            continue;
        }
        if (o.agreed) {
            ++agreements;
        } else {
            ++disagreements;
            if (payloads.size() < 5) payloads.push_back(o.payload);
        }
    }
    return {{"type", "criterion-oracle"},
            {"trials", phase.trials},
            {"agreements", agreements},
            {"disagreements", disagreements},
            {"skipped", skipped},
            {"skipped_entries", skipped_entries},
            {"disagreement_payloads", payloads}};
}

} // namespace

BatchConfig BatchConfig::from_json(const nlohmann::json& j) {
    BatchConfig config;
    config.seed = j.value("seed", 1ull);
    config.threads = j.value("threads", 0);
    for (const auto& pj : j.value("phases", nlohmann::json::array())) {
        PhaseConfig phase;
        phase.type = pj.at("type").get<std::string>();
        if (phase.type == "implication") {
            auto id = parse_condition_id(pj.at("condition").get<std::string>());
            if (!id) throw std::invalid_argument("unknown condition id in config");
            phase.condition = *id;
            phase.params = params_from_json(pj);
            phase.n_min = pj.at("n_min").get<int>();
            phase.n_max = pj.at("n_max").get<int>();
            phase.trials = pj.at("trials").get<int>();
        } else if (phase.type == "solver-oracle") {
            phase.mode = pj.value("mode", "random");
            phase.max_n = pj.value("max_n", 5);
            phase.value_max = pj.value("value_max", 3);
            phase.n_min = pj.value("n_min", 6);
            phase.n_max = pj.value("n_max", 7);
            phase.trials = pj.value("trials", 0);
        } else if (phase.type == "criterion-oracle") {
            phase.trials = pj.at("trials").get<int>();
            phase.n_min = pj.value("n_min", 4);
            phase.n_max = pj.value("n_max", 10);
            phase.nprime_max = pj.value("nprime_max", 2);
            phase.m_max = pj.value("m_max", 2);
            for (const auto& band : pj.at("bands"))
                phase.bands.push_back({band.at(0).get<int>(), band.at(1).get<int>(),
                                       band.at(2).get<int>()});
            if (phase.bands.empty()) throw std::invalid_argument("criterion-oracle needs bands");
        } else {
            throw std::invalid_argument("unknown phase type: " + phase.type);
        }
        config.phases.push_back(std::move(phase));
    }
    return config;
}

nlohmann::json ExperimentReport::to_json(bool include_timing) const {
    nlohmann::json j{{"generator", generator},
                     {"seed", seed},
                     {"phases", phases},
                     {"totals", totals}};
    if (include_timing) j["timing"] = timing;
    return j;
}

ExperimentReport ExperimentReport::from_json(const nlohmann::json& j) {
    ExperimentReport r;
    r.generator = j.at("generator").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.phases = j.at("phases");
    r.totals = j.at("totals");
    r.timing = j.value("timing", nlohmann::json::object());
    return r;
}

long long ExperimentReport::total_inconsistent() const {
    return totals.value("inconsistent", 0ll) + totals.value("disagreements", 0ll);
}

ExperimentReport run_batch(const BatchConfig& config) {
    ExperimentReport report;
    report.generator = kGeneratorName;
    report.seed = config.seed;

    long long inconsistent = 0, disagreements = 0, skipped = 0, trials = 0;
    nlohmann::json phase_ms = nlohmann::json::array();
    auto t0 = std::chrono::steady_clock::now();

    for (std::size_t i = 0; i < config.phases.size(); ++i) {
        const PhaseConfig& phase = config.phases[i];
        std::uint64_t phase_seed = derive_seed(config.seed, i);
        auto p0 = std::chrono::steady_clock::now();
        nlohmann::json pj;
        if (phase.type == "implication")
            pj = run_implication_phase(phase, phase_seed, config.threads);
        else if (phase.type == "solver-oracle")
            pj = run_solver_oracle_phase(phase, phase_seed, config.threads);
        else
            pj = run_criterion_oracle_phase(phase, phase_seed, config.threads);
        auto p1 = std::chrono::steady_clock::now();
        phase_ms.push_back(std::chrono::duration<double, std::milli>(p1 - p0).count());

        inconsistent += pj.value("inconsistent", 0ll);
        disagreements += pj.value("disagreements", 0ll);
        skipped += pj.value("skipped", 0ll);
        trials += pj.value("trials", pj.value("instances", 0ll));
        report.phases.push_back(std::move(pj));
    }

    auto t1 = std::chrono::steady_clock::now();
    report.totals = {{"trials", trials},
                     {"inconsistent", inconsistent},
                     {"disagreements", disagreements},
                     {"skipped", skipped}};
    report.timing = {{"phase_ms", phase_ms},
                     {"total_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}};
    return report;
}

} // namespace factorlab
