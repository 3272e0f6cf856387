#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/properties.hpp"

namespace factorlab {

/// Catalog of the sufficient degree conditions this library can test.
///
/// T1..T6 are the band-function conditions: T1-T3 conclude the
/// critical-deleted property (minimum degree, nonadjacent max-degree pair
/// and sigma2 variants), T4-T6 conclude the ID-deleted property. Suffixes
/// mark the specializations: "Const" requires g = a and f = b pointwise,
/// "Deleted" is the nprime = 0 edge-deletion-only setting. The Complete*
/// conditions need no degree clause at all: a large enough complete graph
/// always satisfies the conclusion.
enum class ConditionId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T1Const,
    T2Const,
    T3Const,
    T1Deleted,
    T2Deleted,
    T3Deleted,
    T1ConstDeleted,
    T2ConstDeleted,
    T3ConstDeleted,
    T4Const,
    T5Const,
    T6Const,
    CompleteBand,
    CompleteBandDeleted,
    CompleteConst,
    CompleteConstDeleted,
};

enum class ConclusionKind { CriticalDeleted, Deleted, IdDeleted };

const char* to_string(ConditionId id);
std::optional<ConditionId> parse_condition_id(std::string_view name);
const std::vector<ConditionId>& all_condition_ids();
ConclusionKind conclusion_kind(ConditionId id);

struct Clause {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct ConditionVerdict {
    ConditionId id = ConditionId::T1;
    std::vector<Clause> clauses;
    bool hypotheses_hold = false;
    /// Result of the matching property checker, when it ran.
    std::optional<bool> conclusion;
    /// hypotheses imply conclusion; false would falsify the condition and
    /// must fail any test suite that sees it.
    std::optional<bool> consistent;
    std::string skipped_reason;
    std::optional<PropertyCounterexample> counterexample;
};

/// Evaluates every hypothesis clause of the condition exactly (integer
/// cross-multiplication, never floating point). Parameter sets violating
/// b - delta >= a >= 2 yield a failed clause, not an error.
ConditionVerdict check_hypotheses(const Graph& g, const VertexFuncs& vf,
                                  const ScenarioParams& params, ConditionId id);

/// check_hypotheses plus the conclusion: runs the matching brute-force
/// property checker when the order is within the exhaustive cap and
/// records consistency.
ConditionVerdict verify_implication(const Graph& g, const VertexFuncs& vf,
                                    const ScenarioParams& params, ConditionId id);

/// Support for instance generators.
/// Smallest order satisfying the condition's strict order bound.
int condition_min_order(ConditionId id, const ScenarioParams& params);
/// Smallest minimum degree forcing the main and auxiliary degree clauses
/// at order n (0 for the Complete ids, which have no degree clause).
int condition_degree_floor(ConditionId id, const ScenarioParams& params, int n);
/// Auxiliary-clause floor alone (0 when the condition has none).
int condition_aux_degree_floor(ConditionId id, const ScenarioParams& params, int n);
/// Main clause constrains nonadjacent pairs only, so one vertex may stay
/// below the floor.
bool condition_is_max_pair(ConditionId id);
bool condition_requires_constants(ConditionId id);
bool condition_requires_complete(ConditionId id);

} // namespace factorlab
