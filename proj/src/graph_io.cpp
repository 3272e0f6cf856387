#include "factorlab/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "factorlab/errors.hpp"

namespace factorlab {

namespace {

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (...) {
        return false;
    }
    return pos == token.size();
}

} // namespace

ParsedGraph parse_graph_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int header_line = 0;

    long long n = 0, declared_edges = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<int> gv, fv;
    std::vector<bool> have_v;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue; // blank line
        if (kind == "c") continue;

        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);

        if (kind == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            long long a = 0, b = 0;
            if (tokens.size() != 3 || tokens[0] != "fgf" || !parse_int(tokens[1], a) ||
                !parse_int(tokens[2], b))
                throw ParseError(lineno, "malformed header, expected 'p fgf <n> <edges>'");
            if (a < 1 || a > Graph::kMaxOrder)
                throw ParseError(lineno, "vertex count out of range [1, 64]");
            if (b < 0) throw ParseError(lineno, "negative edge count");
            n = a;
            declared_edges = b;
            have_header = true;
            header_line = lineno;
            gv.assign(static_cast<std::size_t>(n), 0);
            fv.assign(static_cast<std::size_t>(n), 0);
            have_v.assign(static_cast<std::size_t>(n), false);
            continue;
        }
        if (!have_header) throw ParseError(lineno, "expected 'p fgf' header first");

        if (kind == "v") {
            long long id = 0, g = 0, f = 0;
            if (tokens.size() != 3 || !parse_int(tokens[0], id) || !parse_int(tokens[1], g) ||
                !parse_int(tokens[2], f))
                throw ParseError(lineno, "malformed vertex line, expected 'v <id> <g> <f>'");
            if (id < 1 || id > n) throw ParseError(lineno, "vertex id out of range");
            if (have_v[static_cast<std::size_t>(id - 1)])
                throw ParseError(lineno, "duplicate vertex line");
            if (g < 0 || f < g) throw ParseError(lineno, "need 0 <= g <= f");
            gv[static_cast<std::size_t>(id - 1)] = static_cast<int>(g);
            fv[static_cast<std::size_t>(id - 1)] = static_cast<int>(f);
            have_v[static_cast<std::size_t>(id - 1)] = true;
        } else if (kind == "e") {
            long long u = 0, v = 0;
            if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
                throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            Edge e{static_cast<int>(std::min(u, v)) - 1, static_cast<int>(std::max(u, v)) - 1};
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw ParseError(lineno, "duplicate edge");
            edges.push_back(e);
        } else {
            throw ParseError(lineno, "unknown line type '" + kind + "'");
        }
    }

    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p fgf' header");
    if (static_cast<long long>(edges.size()) != declared_edges)
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) +
                                          " edges but " + std::to_string(edges.size()) +
                                          " were given");

    ParsedGraph out{Graph::from_edges(static_cast<int>(n), std::move(edges)), std::nullopt};
    const bool any_v = std::find(have_v.begin(), have_v.end(), true) != have_v.end();
    if (any_v) {
        for (std::size_t i = 0; i < have_v.size(); ++i)
            if (!have_v[i])
                throw ParseError(header_line, "vertex " + std::to_string(i + 1) +
                                                  " has no 'v' line; either all vertices or none");
        out.funcs = VertexFuncs::from_values(std::move(gv), std::move(fv));
    }
    return out;
}

std::string serialize_graph(const Graph& g, const VertexFuncs* funcs) {
    std::ostringstream out;
    out << "p fgf " << g.order() << ' ' << g.edge_count() << '\n';
    if (funcs) {
        for (int v = 0; v < g.order(); ++v)
            out << "v " << v + 1 << ' ' << funcs->g(v) << ' ' << funcs->f(v) << '\n';
    }
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

} // namespace factorlab
