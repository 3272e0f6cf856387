#pragma once

#include <vector>

#include "factorlab/graph.hpp"
#include "factorlab/vertex_set.hpp"

namespace factorlab {

/// Scenario constants shared by every criterion and degree condition:
/// the band [a, b] for the vertex functions, the required pointwise gap
/// delta between f and g, the number of removable vertices nprime and the
/// number of removable edges m.
struct ScenarioParams {
    int a = 0;
    int b = 0;
    int delta = 0;
    int nprime = 0;
    int m = 0;

    /// b >= a >= 0 with everything nonnegative; enough for raw criterion
    /// and solver calls.
    bool relaxed_valid() const;
    /// b - delta >= a >= 2: the standing hypothesis of the degree
    /// conditions.
    bool strict_valid() const;
};

/// Integer vertex functions g <= f together with the band they live in.
/// Construction enforces a <= g(x) <= f(x) - delta <= b - delta pointwise.
class VertexFuncs {
public:
    VertexFuncs(std::vector<int> g, std::vector<int> f, ScenarioParams params);

    /// g(x) = gv, f(x) = fv everywhere; band inferred as [gv, fv] with
    /// delta = fv - gv.
    static VertexFuncs constant(int order, int gv, int fv);
    /// Band inferred: a = min g, b = max f, delta = min(f - g).
    static VertexFuncs from_values(std::vector<int> g, std::vector<int> f);

    int order() const { return static_cast<int>(g_.size()); }
    int g(int v) const { return g_[v]; }
    int f(int v) const { return f_[v]; }
    long long g_sum(VertexSet vs) const;
    long long f_sum(VertexSet vs) const;
    const ScenarioParams& params() const { return params_; }
    bool is_constant(int gv, int fv) const;

    /// Restriction to the kept vertices, relabelled like Graph::induced.
    VertexFuncs restricted(VertexSet keep) const;

private:
    std::vector<int> g_;
    std::vector<int> f_;
    ScenarioParams params_;
};

} // namespace factorlab
