#include "cliqueflow/dimacs.hpp"

#include <sstream>
#include <vector>

namespace cliqueflow {

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long n = 0, m = 0;
    std::vector<Edge> edges;
    long edge_lines = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line) || line[0] == 'c') continue;

        std::istringstream ls(line);
        std::string tag;
        ls >> tag;

        if (!have_header) {
            std::string fmt;
            if (tag != "p" || !(ls >> fmt >> n >> m) || fmt != "edge")
                throw DimacsParseError(lineno, "expected header \"p edge <n> <m>\"");
            std::string rest;
            if (ls >> rest) throw DimacsParseError(lineno, "trailing tokens after header");
            if (n < 0 || m < 0) throw DimacsParseError(lineno, "negative count in header");
            have_header = true;
            continue;
        }

        if (tag != "e")
            throw DimacsParseError(lineno, "unexpected line type \"" + tag + "\"");
        long u = 0, v = 0;
        if (!(ls >> u >> v)) throw DimacsParseError(lineno, "malformed edge line");
        std::string rest;
        if (ls >> rest) throw DimacsParseError(lineno, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw DimacsParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
        if (u == v) throw DimacsParseError(lineno, "self-loop at vertex " + std::to_string(u));
        ++edge_lines;
        if (edge_lines > m) throw DimacsParseError(lineno, "more edge lines than declared");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }

    if (!have_header) throw DimacsParseError(lineno, "missing \"p edge\" header");
    if (edge_lines < m)
        throw DimacsParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                           std::to_string(edge_lines));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace cliqueflow
