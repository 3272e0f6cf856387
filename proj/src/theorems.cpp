#include "factorlab/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "factorlab/limits.hpp"

namespace factorlab {

namespace {

enum class DegreeClause { None, MinDegree, MaxPair, Sigma2 };
enum class AuxClause { None, Critical, Id };
enum class BoundFamily { Critical, Id };

struct ConditionSpec {
    ConditionId id;
    const char* name;
    ConclusionKind kind;
    BoundFamily family;
    int order_extra; // order bound uses (a + b + 2m + order_extra)
    DegreeClause degree;
    AuxClause aux;
    bool constants;
    bool complete;
};

// The n'=0 settings are exactly those whose conclusion ignores vertex
// removal (Deleted and IdDeleted).
constexpr ConditionSpec kSpecs[] = {
    {ConditionId::T1, "T1", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -2,
     DegreeClause::MinDegree, AuxClause::None, false, false},
    {ConditionId::T2, "T2", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -1,
     DegreeClause::MaxPair, AuxClause::Critical, false, false},
    {ConditionId::T3, "T3", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -2,
     DegreeClause::Sigma2, AuxClause::Critical, false, false},
    {ConditionId::T4, "T4", ConclusionKind::IdDeleted, BoundFamily::Id, -2,
     DegreeClause::MinDegree, AuxClause::None, false, false},
    {ConditionId::T5, "T5", ConclusionKind::IdDeleted, BoundFamily::Id, -1,
     DegreeClause::MaxPair, AuxClause::Id, false, false},
    {ConditionId::T6, "T6", ConclusionKind::IdDeleted, BoundFamily::Id, -2, DegreeClause::Sigma2,
     AuxClause::Id, false, false},
    {ConditionId::T1Const, "T1-ab", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -2,
     DegreeClause::MinDegree, AuxClause::None, true, false},
    {ConditionId::T2Const, "T2-ab", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -2,
     DegreeClause::MaxPair, AuxClause::Critical, true, false},
    {ConditionId::T3Const, "T3-ab", ConclusionKind::CriticalDeleted, BoundFamily::Critical, -2,
     DegreeClause::Sigma2, AuxClause::Critical, true, false},
    {ConditionId::T1Deleted, "T1-del", ConclusionKind::Deleted, BoundFamily::Critical, -2,
     DegreeClause::MinDegree, AuxClause::None, false, false},
    {ConditionId::T2Deleted, "T2-del", ConclusionKind::Deleted, BoundFamily::Critical, -1,
     DegreeClause::MaxPair, AuxClause::Critical, false, false},
    {ConditionId::T3Deleted, "T3-del", ConclusionKind::Deleted, BoundFamily::Critical, -2,
     DegreeClause::Sigma2, AuxClause::Critical, false, false},
    {ConditionId::T1ConstDeleted, "T1-ab-del", ConclusionKind::Deleted, BoundFamily::Critical, -2,
     DegreeClause::MinDegree, AuxClause::None, true, false},
    {ConditionId::T2ConstDeleted, "T2-ab-del", ConclusionKind::Deleted, BoundFamily::Critical, -2,
     DegreeClause::MaxPair, AuxClause::Critical, true, false},
    {ConditionId::T3ConstDeleted, "T3-ab-del", ConclusionKind::Deleted, BoundFamily::Critical, -2,
     DegreeClause::Sigma2, AuxClause::Critical, true, false},
    {ConditionId::T4Const, "T4-ab", ConclusionKind::IdDeleted, BoundFamily::Id, -2,
     DegreeClause::MinDegree, AuxClause::None, true, false},
    {ConditionId::T5Const, "T5-ab", ConclusionKind::IdDeleted, BoundFamily::Id, -1,
     DegreeClause::MaxPair, AuxClause::Id, true, false},
    {ConditionId::T6Const, "T6-ab", ConclusionKind::IdDeleted, BoundFamily::Id, -2,
     DegreeClause::Sigma2, AuxClause::Id, true, false},
    {ConditionId::CompleteBand, "complete", ConclusionKind::CriticalDeleted,
     BoundFamily::Critical, -2, DegreeClause::None, AuxClause::None, false, true},
    {ConditionId::CompleteBandDeleted, "complete-del", ConclusionKind::Deleted,
     BoundFamily::Critical, -2, DegreeClause::None, AuxClause::None, false, true},
    {ConditionId::CompleteConst, "complete-ab", ConclusionKind::CriticalDeleted,
     BoundFamily::Critical, -2, DegreeClause::None, AuxClause::None, true, true},
    {ConditionId::CompleteConstDeleted, "complete-ab-del", ConclusionKind::Deleted,
     BoundFamily::Critical, -2, DegreeClause::None, AuxClause::None, true, true},
};

const ConditionSpec& spec_of(ConditionId id) {
    for (const ConditionSpec& s : kSpecs)
        if (s.id == id) return s;
    throw std::invalid_argument("unknown condition id");
}

std::string cmp_detail(long long lhs, const char* op, long long rhs) {
    return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

} // namespace

const char* to_string(ConditionId id) { return spec_of(id).name; }

std::optional<ConditionId> parse_condition_id(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const ConditionSpec& s : kSpecs) {
        std::string candidate(s.name);
        std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (candidate == lower) return s.id;
    }
    return std::nullopt;
}

const std::vector<ConditionId>& all_condition_ids() {
    static const std::vector<ConditionId> ids = [] {
        std::vector<ConditionId> v;
        for (const ConditionSpec& s : kSpecs) v.push_back(s.id);
        return v;
    }();
    return ids;
}

ConclusionKind conclusion_kind(ConditionId id) { return spec_of(id).kind; }

ConditionVerdict check_hypotheses(const Graph& g, const VertexFuncs& vf,
                                  const ScenarioParams& params, ConditionId id) {
    if (vf.order() != g.order()) throw std::invalid_argument("vertex functions do not match graph");
    const ConditionSpec& spec = spec_of(id);
    const bool uses_nprime = spec.kind == ConclusionKind::CriticalDeleted;
    const long long a = params.a, b = params.b, d = params.delta, m = params.m;
    const long long np = uses_nprime ? params.nprime : 0;
    const long long n = g.order();

    ConditionVerdict verdict;
    verdict.id = id;
    auto clause = [&](std::string name, bool holds, std::string detail) {
        verdict.clauses.push_back({std::move(name), holds, std::move(detail)});
    };

    {
        bool ok = params.strict_valid() && (uses_nprime || params.nprime == 0);
        std::string detail = "b - delta >= a >= 2";
        if (!uses_nprime) detail += ", nprime = 0";
        clause("params", ok, std::move(detail));
    }
    {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v)
            ok = vf.g(v) >= params.a && vf.f(v) <= params.b &&
                 vf.g(v) <= vf.f(v) - params.delta;
        clause("band", ok, "a <= g(x) <= f(x) - delta <= b - delta");
    }
    if (spec.constants)
        clause("constant-values", vf.is_constant(params.a, params.b), "g = a and f = b pointwise");
    if (spec.complete) {
        bool ok = 2ll * g.edge_count() == n * (n - 1);
        clause("complete", ok, "every vertex pair adjacent");
    }

    // Order bound, strict. Critical family: (d+a)(n - n') > (a+b+2m+extra)(a+b).
    // Id family: (d+a) n > (b+2a+d)(a+b+2m+extra).
    {
        long long coeff = a + b + 2 * m + spec.order_extra;
        bool ok;
        std::string detail;
        if (spec.family == BoundFamily::Critical) {
            ok = (d + a) * (n - np) > coeff * (a + b);
            detail = cmp_detail((d + a) * (n - np), ">", coeff * (a + b));
        } else {
            ok = (d + a) * n > (b + 2 * a + d) * coeff;
            detail = cmp_detail((d + a) * n, ">", (b + 2 * a + d) * coeff);
        }
        clause("order", ok, std::move(detail));
    }

    DegreeStats stats = g.degree_stats();
    // Scaled main threshold: critical family compares degrees against
    // ((b-d)n + (d+a)n')/(a+b), id family against (a+b)n/(b+2a+d).
    const long long crit_num = (b - d) * n + (d + a) * np;
    const long long id_num = (a + b) * n;
    const long long crit_den = a + b;
    const long long id_den = b + 2 * a + d;
    const long long num = spec.family == BoundFamily::Critical ? crit_num : id_num;
    const long long den = spec.family == BoundFamily::Critical ? crit_den : id_den;

    switch (spec.degree) {
    case DegreeClause::None: break;
    case DegreeClause::MinDegree:
        clause("min-degree", den * stats.min_degree >= num,
               cmp_detail(den * stats.min_degree, ">=", num));
        break;
    case DegreeClause::MaxPair: {
        // min over nonadjacent pairs of max degree; vacuous when complete.
        std::optional<int> worst;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.has_edge(u, v)) continue;
                int mx = std::max(g.degree(u), g.degree(v));
                if (!worst || mx < *worst) worst = mx;
            }
        if (!worst)
            clause("max-pair", true, "no nonadjacent pair");
        else
            clause("max-pair", den * *worst >= num, cmp_detail(den * *worst, ">=", num));
        break;
    }
    case DegreeClause::Sigma2:
        if (!stats.sigma2)
            clause("sigma2", true, "no nonadjacent pair");
        else
            clause("sigma2", den * *stats.sigma2 >= 2 * num,
                   cmp_detail(den * *stats.sigma2, ">=", 2 * num));
        break;
    }

    switch (spec.aux) {
    case AuxClause::None: break;
    case AuxClause::Critical:
        // delta(G) >= b(b-d)/(d+a) + m + n'
        clause("aux-min-degree", (d + a) * (stats.min_degree - m - np) >= b * (b - d),
               cmp_detail((d + a) * (stats.min_degree - m - np), ">=", b * (b - d)));
        break;
    case AuxClause::Id:
        // delta(G) >= (d+a)n/(b+2a+d) + b(b-d)/(d+a) + m
        clause("aux-min-degree",
               (d + a) * id_den * stats.min_degree >=
                   (d + a) * (d + a) * n + b * (b - d) * id_den + m * (d + a) * id_den,
               cmp_detail((d + a) * id_den * stats.min_degree, ">=",
                          (d + a) * (d + a) * n + b * (b - d) * id_den + m * (d + a) * id_den));
        break;
    }

    verdict.hypotheses_hold = std::all_of(verdict.clauses.begin(), verdict.clauses.end(),
                                          [](const Clause& c) { return c.holds; });
    return verdict;
}

int condition_min_order(ConditionId id, const ScenarioParams& params) {
    const ConditionSpec& spec = spec_of(id);
    const long long a = params.a, b = params.b, d = params.delta, m = params.m;
    const long long np = spec.kind == ConclusionKind::CriticalDeleted ? params.nprime : 0;
    const long long coeff = a + b + 2 * m + spec.order_extra;
    if (d + a <= 0) throw std::invalid_argument("delta + a must be positive");
    for (long long n = 1;; ++n) {
        bool ok = spec.family == BoundFamily::Critical
                      ? (d + a) * (n - np) > coeff * (a + b)
                      : (d + a) * n > (b + 2 * a + d) * coeff;
        if (ok) return static_cast<int>(n);
    }
}

int condition_aux_degree_floor(ConditionId id, const ScenarioParams& params, int n) {
    const ConditionSpec& spec = spec_of(id);
    const long long a = params.a, b = params.b, d = params.delta, m = params.m;
    const long long np = spec.kind == ConclusionKind::CriticalDeleted ? params.nprime : 0;
    auto ceil_div = [](long long p, long long q) { return (p + q - 1) / q; };
    switch (spec.aux) {
    case AuxClause::None: return 0;
    case AuxClause::Critical: return static_cast<int>(m + np + ceil_div(b * (b - d), d + a));
    case AuxClause::Id: {
        long long den = (d + a) * (b + 2 * a + d);
        long long num = (d + a) * (d + a) * n + b * (b - d) * (b + 2 * a + d) + m * den;
        return static_cast<int>(ceil_div(num, den));
    }
    }
    return 0;
}

int condition_degree_floor(ConditionId id, const ScenarioParams& params, int n) {
    const ConditionSpec& spec = spec_of(id);
    if (spec.degree == DegreeClause::None) return 0;
    const long long a = params.a, b = params.b, d = params.delta;
    const long long np = spec.kind == ConclusionKind::CriticalDeleted ? params.nprime : 0;
    long long num, den;
    if (spec.family == BoundFamily::Critical) {
        num = (b - d) * n + (d + a) * np;
        den = a + b;
    } else {
        num = (a + b) * static_cast<long long>(n);
        den = b + 2 * a + d;
    }
    // A minimum degree of ceil(num/den) forces the min-degree, max-pair
    // and sigma2 variants alike.
    int main_floor = static_cast<int>((num + den - 1) / den);
    return std::max(main_floor, condition_aux_degree_floor(id, params, n));
}

bool condition_is_max_pair(ConditionId id) { return spec_of(id).degree == DegreeClause::MaxPair; }
bool condition_requires_constants(ConditionId id) { return spec_of(id).constants; }
bool condition_requires_complete(ConditionId id) { return spec_of(id).complete; }

ConditionVerdict verify_implication(const Graph& g, const VertexFuncs& vf,
                                    const ScenarioParams& params, ConditionId id) {
    ConditionVerdict verdict = check_hypotheses(g, vf, params, id);
    if (g.order() > exhaustive_size_cap()) {
        verdict.skipped_reason = "conclusion check skipped: order above exhaustive size cap";
        verdict.consistent = verdict.hypotheses_hold ? std::optional<bool>{} : true;
        return verdict;
    }
    PropertyCheck check;
    switch (conclusion_kind(id)) {
    case ConclusionKind::CriticalDeleted:
        check = is_critical_deleted(g, vf, params.nprime, params.m);
        break;
    case ConclusionKind::Deleted: check = is_deleted(g, vf, params.m); break;
    case ConclusionKind::IdDeleted: check = is_id_deleted(g, vf, params.m); break;
    }
    verdict.conclusion = check.holds;
    verdict.counterexample = std::move(check.counterexample);
    verdict.consistent = !(verdict.hypotheses_hold && !check.holds);
    return verdict;
}

} // namespace factorlab
