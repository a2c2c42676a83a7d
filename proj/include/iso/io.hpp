#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "iso/errors.hpp"
#include "iso/graph.hpp"

namespace iso {

// Edge-list text format:
//   p <n> <m>
//   <u> <v>        (m lines, 0-based ids)
// '#'-prefixed lines are comments, tokens are whitespace-separated, LF line
// endings. Serialization emits edges in canonical (min,max) ascending order.

inline Graph parse_edge_list(std::istream& in, const std::string& source = "<stream>") {
    auto fail = [&](int line, const std::string& what) -> void {
        throw Error(errc::parse_error, source + ":" + std::to_string(line) + ": " + what);
    };
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            char p = 0;
            if (!(ss >> p) || p != 'p' || !(ss >> n >> m) || n < 0 || m < 0)
                fail(lineno, "expected header 'p <n> <m>'");
            std::string extra;
            if (ss >> extra) fail(lineno, "trailing tokens after header");
            continue;
        }
        long u, v;
        if (!(ss >> u >> v)) fail(lineno, "expected edge '<u> <v>'");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens after edge");
        if (static_cast<long>(edges.size()) == m) fail(lineno, "more edges than declared");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw Error(errc::parse_error, source + ": missing 'p <n> <m>' header");
    if (static_cast<long>(edges.size()) != m)
        throw Error(errc::parse_error, source + ": declared " + std::to_string(m) +
                                           " edges, found " + std::to_string(edges.size()));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open " + path);
    return parse_edge_list(in, path);
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(errc::parse_error, "cannot write " + path);
    out << serialize_edge_list(g);
}

/// Set file: one vertex id per line, '#' comments allowed.
inline VertexSet parse_vertex_set(std::istream& in, int universe,
                                  const std::string& source = "<stream>") {
    VertexSet s(universe);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        long v;
        if (!(ss >> v))
            throw Error(errc::parse_error,
                        source + ":" + std::to_string(lineno) + ": expected a vertex id");
        if (v < 0 || v >= universe)
            throw Error(errc::vertex_out_of_range,
                        source + ":" + std::to_string(lineno) + ": id " + std::to_string(v));
        s.add(static_cast<int>(v));
    }
    return s;
}

/// Partition file: one set per line, ids whitespace-separated.
inline std::vector<VertexSet> parse_partition(std::istream& in, int universe,
                                              const std::string& source = "<stream>") {
    std::vector<VertexSet> sets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        VertexSet s(universe);
        long v;
        while (ss >> v) {
            if (v < 0 || v >= universe)
                throw Error(errc::vertex_out_of_range,
                            source + ":" + std::to_string(lineno) + ": id " + std::to_string(v));
            s.add(static_cast<int>(v));
        }
        sets.push_back(s);
    }
    return sets;
}

}  // namespace iso
