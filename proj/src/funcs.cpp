#include "factorlab/funcs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace factorlab {

bool ScenarioParams::relaxed_valid() const {
    return a >= 0 && b >= a && delta >= 0 && nprime >= 0 && m >= 0;
}

bool ScenarioParams::strict_valid() const {
    return a >= 2 && b - delta >= a && delta >= 0 && nprime >= 0 && m >= 0;
}

VertexFuncs::VertexFuncs(std::vector<int> g, std::vector<int> f, ScenarioParams params)
    : g_(std::move(g)), f_(std::move(f)), params_(params) {
    if (g_.empty() || g_.size() != f_.size())
        throw std::invalid_argument("vertex functions must cover the same nonempty vertex set");
    for (std::size_t i = 0; i < g_.size(); ++i) {
        if (g_[i] < 0) throw std::invalid_argument("g must be nonnegative");
        if (g_[i] < params_.a || f_[i] > params_.b || g_[i] > f_[i] - params_.delta)
            throw std::invalid_argument(
                "vertex functions violate the band a <= g(x) <= f(x) - delta <= b - delta");
    }
}

VertexFuncs VertexFuncs::constant(int order, int gv, int fv) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    ScenarioParams p;
    p.a = gv;
    p.b = fv;
    p.delta = fv - gv;
    return VertexFuncs(std::vector<int>(static_cast<std::size_t>(order), gv),
                       std::vector<int>(static_cast<std::size_t>(order), fv), p);
}

VertexFuncs VertexFuncs::from_values(std::vector<int> g, std::vector<int> f) {
    if (g.empty() || g.size() != f.size())
        throw std::invalid_argument("vertex functions must cover the same nonempty vertex set");
    ScenarioParams p;
    p.a = *std::min_element(g.begin(), g.end());
    p.b = *std::max_element(f.begin(), f.end());
    p.delta = f[0] - g[0];
    for (std::size_t i = 0; i < g.size(); ++i) p.delta = std::min(p.delta, f[i] - g[i]);
    return VertexFuncs(std::move(g), std::move(f), p);
}

long long VertexFuncs::g_sum(VertexSet vs) const {
    long long total = 0;
    for (std::uint64_t x = vs.mask(); x; x &= x - 1) total += g_[std::countr_zero(x)];
    return total;
}

long long VertexFuncs::f_sum(VertexSet vs) const {
    long long total = 0;
    for (std::uint64_t x = vs.mask(); x; x &= x - 1) total += f_[std::countr_zero(x)];
    return total;
}

bool VertexFuncs::is_constant(int gv, int fv) const {
    return std::all_of(g_.begin(), g_.end(), [&](int x) { return x == gv; }) &&
           std::all_of(f_.begin(), f_.end(), [&](int x) { return x == fv; });
}

VertexFuncs VertexFuncs::restricted(VertexSet keep) const {
    std::vector<int> g2, f2;
    for (int v : keep.to_vector()) {
        if (v >= order()) throw std::invalid_argument("vertex id out of range");
        g2.push_back(g_[v]);
        f2.push_back(f_[v]);
    }
    return VertexFuncs(std::move(g2), std::move(f2), params_);
}

} // namespace factorlab
