#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/theorems.hpp"

namespace factorlab {

/// Random simple graph (each pair present with edge_probability), then
/// edges are added at minimum-degree vertices until the minimum degree
/// reaches min_degree. Deterministic for a fixed seed.
Graph random_graph(int n, int min_degree, std::uint64_t seed, double edge_probability = 0.5);

/// Samples g(x) in [a, b-delta] and f(x) in [g(x)+delta, b] independently
/// per vertex. Throws when the band is empty (b - delta < a).
VertexFuncs random_vertex_funcs(const Graph& g, const ScenarioParams& params, std::uint64_t seed);

/// All graphs on exactly n vertices up to isomorphism (canonical
/// representatives, deterministic order). Exhaustive; n <= 6.
std::vector<Graph> nonisomorphic_graphs(int n);

struct PhaseConfig {
    std::string type; // "implication" | "solver-oracle" | "criterion-oracle"

    // implication
    ConditionId condition = ConditionId::T1;
    ScenarioParams params;
    int n_min = 0;
    int n_max = 0;
    int trials = 0;

    // solver-oracle
    std::string mode; // "exhaustive" | "random"
    int max_n = 5;
    int value_max = 3;

    // criterion-oracle
    int nprime_max = 0;
    int m_max = 0;
    std::vector<std::array<int, 3>> bands; // (a, b, delta); infeasible bands are skipped
};

struct BatchConfig {
    std::uint64_t seed = 1;
    int threads = 0;
    std::vector<PhaseConfig> phases;

    static BatchConfig from_json(const nlohmann::json& j);
};

struct ExperimentReport {
    std::string generator;
    std::uint64_t seed = 0;
    nlohmann::json phases = nlohmann::json::array();
    nlohmann::json totals = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();

    /// Stable serialization; wall-time fields are the only part excluded
    /// from determinism comparisons, dropped via include_timing = false.
    nlohmann::json to_json(bool include_timing = true) const;
    static ExperimentReport from_json(const nlohmann::json& j);

    /// Implication inconsistencies plus oracle disagreements; any nonzero
    /// value is a finding, never data.
    long long total_inconsistent() const;
};

/// Runs every phase: implication sweeps build instances whose hypotheses
/// hold by construction and check the concluded property; the oracle
/// phases cross-check the flow solver against the removal criterion and
/// the brute-force property checkers against the criterion verdict.
/// Size-limit and forcing failures become skipped-with-reason entries.
ExperimentReport run_batch(const BatchConfig& config);

} // namespace factorlab
