#pragma once

#include <optional>
#include <string>
#include <vector>

#include "factorlab/deficiency.hpp"
#include "factorlab/funcs.hpp"
#include "factorlab/graph.hpp"

namespace factorlab {

/// Edge weighting h: E -> [0,1] stored in half-units, so every value is
/// 0, 1/2 or 1. Indexed parallel to Graph::edges().
class FractionalAssignment {
public:
    explicit FractionalAssignment(std::vector<int> half_units);

    int size() const { return static_cast<int>(half_.size()); }
    int half_units(int edge_index) const { return half_[edge_index]; }
    const std::vector<int>& values() const { return half_; }
    /// "0", "1/2" or "1".
    std::string value_string(int edge_index) const;

private:
    std::vector<int> half_;
};

/// Weighted degree sum_{e at v} h(e), in half-units.
int weighted_degree_half_units(const Graph& g, const FractionalAssignment& h, int v);

struct FactorResult {
    bool exists = false;
    std::optional<FractionalAssignment> assignment;
};

/// Decides whether an edge weighting h with g(x) <= d^h(x) <= f(x) for all
/// x exists, returning a half-integral witness when it does.
///
/// Reduction: every edge uv becomes the unit arcs u'->v'' and v'->u''
/// between two vertex copies; source->u' and u''->sink arcs carry bounds
/// [g(u), f(u)]. The circulation with lower bounds is decided by the
/// excess-supersource transformation over exact integer max-flow, and
/// h(uv) = (flow(u'->v'') + flow(v'->u''))/2, which is half-integral by
/// construction.
FactorResult has_fractional_factor(const Graph& g, const VertexFuncs& vf);

/// Pure recomputation: all edge values in [0,1] and all weighted degrees
/// within [g(x), f(x)]. No solving.
bool verify_assignment(const Graph& g, const VertexFuncs& vf, const FractionalAssignment& h);

/// For an infeasible instance, returns disjoint S, T with
/// f(S) + d_{G-S}(T) - g(T) < 0 (U and H empty). Searches S by increasing
/// size then lexicographic order; for each S the slack-minimizing T is
/// {x not in S : d_{G-S}(x) < g(x)}. Throws std::logic_error if the
/// instance is feasible.
DeficiencyWitness factor_defect_witness(const Graph& g, const VertexFuncs& vf);

} // namespace factorlab
