#pragma once

#include "json.hpp"

#include "factorlab/deficiency.hpp"
#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/properties.hpp"
#include "factorlab/solver.hpp"
#include "factorlab/theorems.hpp"

namespace factorlab {

// JSON shapes shared by the CLI and the experiment reports. All vertex
// ids are 1-indexed on the wire, matching the graph file format; edge
// values are exact fraction strings.

nlohmann::json params_to_json(const ScenarioParams& p);
nlohmann::json stats_to_json(const DegreeStats& stats); // sigma2: int or "infinity"
nlohmann::json witness_to_json(const DeficiencyWitness& w);
nlohmann::json assignment_to_json(const Graph& g, const FractionalAssignment& h);
nlohmann::json counterexample_to_json(const PropertyCounterexample& ce);
nlohmann::json condition_verdict_to_json(const ConditionVerdict& v);

} // namespace factorlab
