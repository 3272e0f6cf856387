// factorlab command line: decides fractional (g,f)-factor existence,
// checks the deleted / critical-deleted / ID-deleted properties exactly,
// evaluates the cataloged degree conditions and builds the tight example
// families. Exit codes: 0 = property holds / hypotheses consistent,
// 1 = property fails (witness printed), 2 = usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "factorlab/deficiency.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/experiments.hpp"
#include "factorlab/extremal.hpp"
#include "factorlab/graph_io.hpp"
#include "factorlab/limits.hpp"
#include "factorlab/properties.hpp"
#include "factorlab/report_json.hpp"
#include "factorlab/solver.hpp"
#include "factorlab/theorems.hpp"

using json = nlohmann::json;
using namespace factorlab;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Graph plus vertex functions from the file and/or constant flags.
// Exactly one source for g, f is required.
struct Instance {
    Graph graph;
    VertexFuncs funcs;
};

Instance load_instance(const std::string& path, std::optional<int> const_g,
                       std::optional<int> const_f, int delta, int nprime, int m) {
    ParsedGraph parsed = parse_graph_file(read_input(path));
    const bool flags_given = const_g.has_value() || const_f.has_value();
    if (flags_given && parsed.funcs)
        throw UsageError("graph file carries 'v' lines and constant flags were also given; "
                         "use one source for g and f");
    if (flags_given) {
        if (!const_g || !const_f) throw UsageError("need both constant flags for g and f");
        ScenarioParams p{*const_g, *const_f, delta, nprime, m};
        if (!p.relaxed_valid() || *const_g > *const_f - delta)
            throw UsageError("constants must satisfy 0 <= g <= f - delta");
        std::vector<int> gv(static_cast<std::size_t>(parsed.graph.order()), *const_g);
        std::vector<int> fv(static_cast<std::size_t>(parsed.graph.order()), *const_f);
        return {parsed.graph, VertexFuncs(std::move(gv), std::move(fv), p)};
    }
    if (!parsed.funcs)
        throw UsageError("graph file has no 'v' lines; pass the constant flags instead");
    ScenarioParams p = parsed.funcs->params();
    p.nprime = nprime;
    p.m = m;
    std::vector<int> gv, fv;
    for (int v = 0; v < parsed.graph.order(); ++v) {
        gv.push_back(parsed.funcs->g(v));
        fv.push_back(parsed.funcs->f(v));
    }
    return {parsed.graph, VertexFuncs(std::move(gv), std::move(fv), p)};
}

json graph_json(const Graph& g) { return {{"n", g.order()}, {"edges", g.edge_count()}}; }

void emit(const json& report, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
}

std::string set_text(VertexSet s) {
    std::string str = "{";
    bool first = true;
    for (int v : s.to_vector()) {
        if (!first) str += ", ";
        str += std::to_string(v + 1);
        first = false;
    }
    return str + "}";
}

std::string witness_text(const DeficiencyWitness& w) {
    std::ostringstream out;
    out << "  slack = " << w.slack << "\n  S = " << set_text(w.s) << "\n  T = " << set_text(w.t)
        << "\n  U = " << set_text(w.u) << "\n  H = {";
    for (std::size_t i = 0; i < w.h.size(); ++i) {
        if (i) out << ", ";
        out << "(" << w.h[i].u + 1 << "," << w.h[i].v + 1 << ")";
    }
    out << "}\n";
    return out.str();
}

std::string counterexample_text(const PropertyCounterexample& ce) {
    std::ostringstream out;
    out << "counterexample:\n  removed vertices = " << set_text(ce.removed_vertices)
        << "\n  removed edges = {";
    for (std::size_t i = 0; i < ce.removed_edges.size(); ++i)
        out << (i ? ", " : "") << "(" << ce.removed_edges[i].u + 1 << ","
            << ce.removed_edges[i].v + 1 << ")";
    out << "}\n";
    if (ce.defect) out << "defect of the reduced graph:\n" << witness_text(*ce.defect);
    return out.str();
}

// ---------------------------------------------------------------- factor

int run_factor(const std::string& path, std::optional<int> g_flag, std::optional<int> f_flag,
               bool as_json) {
    Timer timer;
    Instance inst = load_instance(path, g_flag, f_flag, 0, 0, 0);
    FactorResult result = has_fractional_factor(inst.graph, inst.funcs);

    json report{{"command", "factor"},
                {"params", params_to_json(inst.funcs.params())},
                {"graph", graph_json(inst.graph)}};
    std::ostringstream text;
    int exit_code;
    if (result.exists) {
        report["verdict"] = "holds";
        report["assignment"] = assignment_to_json(inst.graph, *result.assignment);
        text << "verdict: fractional factor exists\n";
        const auto& edges = inst.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            text << "  h(" << edges[i].u + 1 << "," << edges[i].v + 1
                 << ") = " << result.assignment->value_string(static_cast<int>(i)) << "\n";
        exit_code = kExitHolds;
    } else {
        report["verdict"] = "violated";
        text << "verdict: no fractional factor\n";
        if (inst.graph.order() <= exhaustive_size_cap()) {
            DeficiencyWitness w = factor_defect_witness(inst.graph, inst.funcs);
            report["witness"] = witness_to_json(w);
            text << witness_text(w);
        } else {
            report["note"] = "witness search skipped: order above exhaustive size cap";
            text << "(witness search skipped: order above exhaustive size cap)\n";
        }
        exit_code = kExitFails;
    }
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return exit_code;
}

// -------------------------------------------------------------- criterion

int run_criterion(const std::string& path, std::optional<int> a, std::optional<int> b, int delta,
                  int nprime, int m, int threads, bool as_json) {
    Timer timer;
    Instance inst = load_instance(path, a, b, delta, nprime, m);
    CriterionVerdict verdict = check_criterion(inst.graph, inst.funcs, nprime, m, threads);

    json report{{"command", "criterion"},
                {"params", params_to_json(inst.funcs.params())},
                {"graph", graph_json(inst.graph)},
                {"verdict", verdict.holds ? "holds" : "violated"},
                {"pairs_checked", verdict.pairs_checked},
                {"vacuous_pairs", verdict.vacuous_pairs}};
    std::ostringstream text;
    text << "verdict: criterion " << (verdict.holds ? "holds" : "violated") << "\n";
    if (verdict.witness) {
        report["witness"] = witness_to_json(*verdict.witness);
        text << witness_text(*verdict.witness);
    }
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return verdict.holds ? kExitHolds : kExitFails;
}

// ------------------------------------------------------ property commands

enum class PropertyKind { Deleted, CriticalDeleted, IdDeleted };

const char* property_name(PropertyKind kind) {
    switch (kind) {
    case PropertyKind::Deleted: return "deleted";
    case PropertyKind::CriticalDeleted: return "critical-deleted";
    default: return "id-deleted";
    }
}

PropertyCheck brute_property(PropertyKind kind, const Instance& inst, int nprime, int m) {
    switch (kind) {
    case PropertyKind::Deleted: return is_deleted(inst.graph, inst.funcs, m);
    case PropertyKind::CriticalDeleted:
        return is_critical_deleted(inst.graph, inst.funcs, nprime, m);
    default: return is_id_deleted(inst.graph, inst.funcs, m);
    }
}

// Criterion route. For the ID property the criterion runs on G - I for
// every independent set I; the failing witness comes back in original
// labels.
PropertyCheck criterion_property(PropertyKind kind, const Instance& inst, int nprime, int m,
                                 int threads) {
    if (kind != PropertyKind::IdDeleted) {
        CriterionVerdict v = check_criterion(inst.graph, inst.funcs,
                                             kind == PropertyKind::Deleted ? 0 : nprime, m,
                                             threads);
        if (v.holds) return {true, std::nullopt};
        PropertyCounterexample ce;
        ce.defect = v.witness;
        return {false, std::move(ce)};
    }
    std::optional<PropertyCheck> failure;
    for_each_independent_set(inst.graph, [&](VertexSet current) {
        if (current == inst.graph.vertices()) return true;
        VertexSet keep = inst.graph.vertices() - current;
        std::vector<int> old_ids;
        Graph reduced = current.empty() ? inst.graph : inst.graph.induced(keep, &old_ids);
        if (current.empty())
            for (int v = 0; v < inst.graph.order(); ++v) old_ids.push_back(v);
        VertexFuncs funcs = current.empty() ? inst.funcs : inst.funcs.restricted(keep);
        CriterionVerdict v = check_criterion(reduced, funcs, 0, m, threads);
        if (!v.holds) {
            PropertyCounterexample ce;
            ce.removed_vertices = current;
            DeficiencyWitness translated;
            translated.slack = v.witness->slack;
            for (int x : v.witness->s.to_vector()) translated.s.add(old_ids[x]);
            for (int x : v.witness->t.to_vector()) translated.t.add(old_ids[x]);
            for (int x : v.witness->u.to_vector()) translated.u.add(old_ids[x]);
            for (const Edge& e : v.witness->h)
                translated.h.push_back({old_ids[e.u], old_ids[e.v]});
            ce.defect = std::move(translated);
            failure = PropertyCheck{false, std::move(ce)};
            return false;
        }
        return true;
    });
    return failure ? *failure : PropertyCheck{true, std::nullopt};
}

int run_property(PropertyKind kind, const std::string& path, std::optional<int> a,
                 std::optional<int> b, int delta, int nprime, int m, std::string method,
                 int threads, bool as_json) {
    Timer timer;
    Instance inst = load_instance(path, a, b, delta, nprime, m);
    if (method.empty()) method = inst.graph.order() <= 10 ? "both" : "criterion";
    if (method != "brute" && method != "criterion" && method != "both")
        throw UsageError("--method must be brute, criterion or both");

    json report{{"command", property_name(kind)},
                {"params", params_to_json(inst.funcs.params())},
                {"graph", graph_json(inst.graph)},
                {"method", method}};

    std::optional<PropertyCheck> brute, criterion;
    if (method == "brute" || method == "both") brute = brute_property(kind, inst, nprime, m);
    if (method == "criterion" || method == "both")
        criterion = criterion_property(kind, inst, nprime, m, threads);
    if (brute && criterion && brute->holds != criterion->holds)
        throw std::runtime_error(
            "internal disagreement: brute-force and criterion verdicts differ");

    const PropertyCheck& result = brute ? *brute : *criterion;
    report["verdict"] = result.holds ? "holds" : "violated";
    std::ostringstream text;
    text << "verdict: " << property_name(kind) << " " << (result.holds ? "holds" : "violated")
         << "\n";
    if (!result.holds && result.counterexample) {
        const PropertyCounterexample& ce = *result.counterexample;
        // a bare criterion certificate has nothing removed; report it as
        // the witness it is
        if (ce.removed_vertices.empty() && ce.removed_edges.empty() && ce.defect) {
            report["witness"] = witness_to_json(*ce.defect);
            text << witness_text(*ce.defect);
        } else {
            report["counterexample"] = counterexample_to_json(ce);
            text << counterexample_text(ce);
        }
    }
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return result.holds ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------- theorem

int run_theorem(const std::string& path, const std::string& which, std::optional<int> a,
                std::optional<int> b, int delta, int nprime, int m, bool as_json) {
    Timer timer;
    auto id = parse_condition_id(which);
    if (!id) throw UsageError("unknown condition id '" + which + "'");
    Instance inst = load_instance(path, a, b, delta, nprime, m);
    ScenarioParams params = inst.funcs.params();
    ConditionVerdict verdict = verify_implication(inst.graph, inst.funcs, params, *id);

    bool inconsistent = verdict.consistent.has_value() && !*verdict.consistent;
    json report{{"command", "theorem"},
                {"params", params_to_json(params)},
                {"graph", graph_json(inst.graph)},
                {"verdict", inconsistent ? "inconsistent" : "consistent"},
                {"theorem", condition_verdict_to_json(verdict)}};
    std::ostringstream text;
    text << "condition " << to_string(*id) << ": hypotheses "
         << (verdict.hypotheses_hold ? "hold" : "fail") << "\n";
    for (const Clause& c : verdict.clauses)
        text << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    if (verdict.conclusion)
        text << "conclusion: " << (*verdict.conclusion ? "true" : "false") << "\n";
    else if (!verdict.skipped_reason.empty())
        text << verdict.skipped_reason << "\n";
    text << "verdict: " << (inconsistent ? "inconsistent" : "consistent") << "\n";
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return inconsistent ? kExitFails : kExitHolds;
}

// --------------------------------------------------------------- extremal

void write_output_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

int run_extremal_critical(int a, int delta, int nprime, int m, std::optional<int> t,
                          const std::string& out_path, bool as_json) {
    Timer timer;
    int used_t = t ? *t : min_critical_sharpness_t(a, delta, nprime, m);
    CriticalSharpness s = build_critical_sharpness(a, delta, nprime, m, used_t);
    if (!out_path.empty()) write_output_file(out_path, serialize_graph(s.graph));

    json report{{"command", "extremal"},
                {"family", "critical"},
                {"params", params_to_json(s.params)},
                {"graph", graph_json(s.graph)},
                {"verdict", "built"},
                {"witness", witness_to_json(s.expected)},
                {"metrics",
                 {{"t", used_t},
                  {"min_valid_t", min_critical_sharpness_t(a, delta, nprime, m)},
                  {"degree_stats", stats_to_json(s.stats)},
                  {"degree_threshold", s.degree_threshold().str()}}}};
    std::ostringstream text;
    text << "built clique-join instance: n = " << s.graph.order()
         << ", delta(G) = " << s.stats.min_degree
         << ", threshold = " << s.degree_threshold().str()
         << ", expected slack = " << s.expected.slack << "\n";
    if (!out_path.empty()) text << "wrote " << out_path << "\n";
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return kExitHolds;
}

int run_extremal_id(int a, int delta, int m, std::optional<int> t, const std::string& out_path,
                    bool as_json) {
    Timer timer;
    int used_t = t ? *t : min_id_sharpness_t(a, delta, m);
    IdSharpness s = build_id_sharpness(a, delta, m, used_t);
    if (!out_path.empty()) write_output_file(out_path, serialize_graph(s.graph));

    json independent = json::array();
    for (int v : s.expected_independent.to_vector()) independent.push_back(v + 1);
    json report{{"command", "extremal"},
                {"family", "id"},
                {"params", params_to_json(s.params)},
                {"graph", graph_json(s.graph)},
                {"verdict", "built"},
                {"independent_set", independent},
                {"witness", witness_to_json(s.expected)},
                {"metrics",
                 {{"t", used_t},
                  {"min_valid_t", min_id_sharpness_t(a, delta, m)},
                  {"degree_stats", stats_to_json(s.stats)},
                  {"degree_threshold", s.degree_threshold().str()}}}};
    std::ostringstream text;
    text << "built three-part instance: n = " << s.graph.order()
         << ", delta(G) = " << s.stats.min_degree << ", sigma2 = " << *s.stats.sigma2
         << ", threshold = " << s.degree_threshold().str()
         << ", expected slack after deleting one side = " << s.expected.slack << "\n";
    if (!out_path.empty()) text << "wrote " << out_path << "\n";
    report["timing"] = {{"total_ms", timer.ms()}};
    emit(report, as_json, text.str());
    return kExitHolds;
}

// ------------------------------------------------------------- experiment

int run_experiment(const std::string& config_path, const std::string& out_path, int threads,
                   bool as_json) {
    Timer timer;
    json config_json = json::parse(read_input(config_path));
    BatchConfig config = BatchConfig::from_json(config_json);
    if (threads > 0) config.threads = threads;
    ExperimentReport batch = run_batch(config);

    json report{{"command", "experiment"},
                {"verdict", batch.total_inconsistent() == 0 ? "clean" : "inconsistent"},
                {"report", batch.to_json(true)},
                {"timing", {{"total_ms", timer.ms()}}}};
    if (!out_path.empty()) write_output_file(out_path, report.dump(2) + "\n");

    std::ostringstream text;
    text << "experiment: " << batch.totals["trials"] << " trials, "
         << batch.totals["inconsistent"] << " inconsistent, " << batch.totals["disagreements"]
         << " disagreements, " << batch.totals["skipped"] << " skipped\n";
    emit(report, as_json, text.str());
    return batch.total_inconsistent() == 0 ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractional (g,f)-factor toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::optional<int> opt_a, opt_b, opt_g, opt_f, opt_t;
    int delta = 0, nprime = 0, m = 0, threads = 0;
    std::string file, method, which, out_path, config_path;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file in fgf format, or - for stdin")->required();
    };
    auto add_band = [&](CLI::App* cmd) {
        cmd->add_option("--a", opt_a, "constant g(x) = a");
        cmd->add_option("--b", opt_b, "constant f(x) = b");
        cmd->add_option("--delta", delta, "required pointwise gap between f and g");
    };

    auto* factor = app.add_subcommand("factor", "decide fractional (g,f)-factor existence");
    factor->add_option("--g", opt_g, "constant g(x)");
    factor->add_option("--f", opt_f, "constant f(x)");
    add_file(factor);

    auto* criterion =
        app.add_subcommand("criterion", "evaluate the exact removal criterion over all (S,T)");
    add_band(criterion);
    criterion->add_option("--np", nprime, "number of removable vertices");
    criterion->add_option("--m", m, "number of removable edges");
    criterion->add_option("--threads", threads, "worker threads (0 = machine)");
    add_file(criterion);

    auto* deleted = app.add_subcommand("deleted", "check the edge-deletion property");
    add_band(deleted);
    deleted->add_option("--m", m, "number of removable edges");
    deleted->add_option("--method", method, "brute | criterion | both");
    deleted->add_option("--threads", threads, "worker threads");
    add_file(deleted);

    auto* critical =
        app.add_subcommand("critical-deleted", "check the vertex-and-edge-deletion property");
    add_band(critical);
    critical->add_option("--np", nprime, "number of removable vertices");
    critical->add_option("--m", m, "number of removable edges");
    critical->add_option("--method", method, "brute | criterion | both");
    critical->add_option("--threads", threads, "worker threads");
    add_file(critical);

    auto* iddel = app.add_subcommand("id-deleted", "check deletion of every independent set");
    add_band(iddel);
    iddel->add_option("--m", m, "number of removable edges");
    iddel->add_option("--method", method, "brute | criterion | both");
    iddel->add_option("--threads", threads, "worker threads");
    add_file(iddel);

    auto* theorem = app.add_subcommand("theorem", "evaluate a cataloged degree condition");
    theorem->add_option("--which", which, "condition id, e.g. T1 or complete-ab")->required();
    add_band(theorem);
    theorem->add_option("--np", nprime, "number of removable vertices");
    theorem->add_option("--m", m, "number of removable edges");
    add_file(theorem);

    auto* extremal = app.add_subcommand("extremal", "build a tight example family");
    extremal->require_subcommand(1);
    auto* ext_critical = extremal->add_subcommand("critical", "clique joined to singletons");
    ext_critical->add_option("--a", opt_a, "a (g = a)")->required();
    ext_critical->add_option("--delta", delta, "gap; b = a + delta");
    ext_critical->add_option("--np", nprime, "number of removable vertices");
    ext_critical->add_option("--m", m, "number of removable edges");
    ext_critical->add_option("--t", opt_t, "scale (default: minimal valid)");
    ext_critical->add_option("--out", out_path, "write the instance to this file");
    auto* ext_id = extremal->add_subcommand("id", "three-part side | clique | side join");
    ext_id->add_option("--a", opt_a, "a (g = a)")->required();
    ext_id->add_option("--delta", delta, "gap; b = a + delta");
    ext_id->add_option("--m", m, "number of removable edges");
    ext_id->add_option("--t", opt_t, "scale (default: minimal valid)");
    ext_id->add_option("--out", out_path, "write the instance to this file");

    auto* experiment = app.add_subcommand("experiment", "run a batch config");
    experiment->add_option("--config", config_path, "batch config JSON file, or - for stdin")
        ->required();
    experiment->add_option("--out", out_path, "also write the JSON report to this file");
    experiment->add_option("--threads", threads, "worker threads (overrides config)");

    // let --json (and anything else on the parent) appear after the
    // subcommand name
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();
    extremal->fallthrough();
    ext_critical->fallthrough();
    ext_id->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (factor->parsed()) return run_factor(file, opt_g, opt_f, as_json);
        if (criterion->parsed())
            return run_criterion(file, opt_a, opt_b, delta, nprime, m, threads, as_json);
        if (deleted->parsed())
            return run_property(PropertyKind::Deleted, file, opt_a, opt_b, delta, 0, m, method,
                                threads, as_json);
        if (critical->parsed())
            return run_property(PropertyKind::CriticalDeleted, file, opt_a, opt_b, delta, nprime,
                                m, method, threads, as_json);
        if (iddel->parsed())
            return run_property(PropertyKind::IdDeleted, file, opt_a, opt_b, delta, 0, m, method,
                                threads, as_json);
        if (theorem->parsed())
            return run_theorem(file, which, opt_a, opt_b, delta, nprime, m, as_json);
        if (extremal->parsed()) {
            if (!opt_a) throw UsageError("--a is required");
            if (ext_critical->parsed())
                return run_extremal_critical(*opt_a, delta, nprime, m, opt_t, out_path, as_json);
            return run_extremal_id(*opt_a, delta, m, opt_t, out_path, as_json);
        }
        if (experiment->parsed()) return run_experiment(config_path, out_path, threads, as_json);
        throw UsageError("no subcommand given");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
