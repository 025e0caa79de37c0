#pragma once

// Line-oriented text formats.  '#' starts a comment, blank lines are skipped.
//
//   simple graph:  "n m" header, then m lines "u v" with 0 <= u < v < n
//   multigraph:    "n m" header, then m lines "u v k" (k = multiplicity >= 1,
//                  vertex pairs distinct across lines)
//   colouring:     lines "v c", then a summary line "colors k method <name>"

#include "clawsq/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace clawsq {

namespace detail {

// drops any '#' comment and surrounding whitespace; empty result = blank line
inline std::string strip_comment(const std::string& raw) {
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto from = line.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return {};
    auto to = line.find_last_not_of(" \t\r\n");
    return line.substr(from, to - from + 1);
}

// strips comments, returns successive non-blank payload lines
inline bool next_payload_line(std::istream& in, std::string& line) {
    std::string raw;
    while (std::getline(in, raw)) {
        line = strip_comment(raw);
        if (!line.empty()) return true;
    }
    return false;
}

inline std::vector<long long> parse_fields(const std::string& line, size_t want,
                                           const char* what) {
    std::istringstream is(line);
    std::vector<long long> out;
    long long x;
    while (is >> x) out.push_back(x);
    std::string rest;
    if (is.clear(), is >> rest)
        throw std::invalid_argument(std::string("bad token in ") + what + ": " + line);
    if (out.size() != want)
        throw std::invalid_argument(std::string("expected ") + std::to_string(want) +
                                    " fields in " + what + ": " + line);
    return out;
}

}  // namespace detail

inline void write_simple(std::ostream& out, const SimpleGraph& g) {
    auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string to_text(const SimpleGraph& g) {
    std::ostringstream os;
    write_simple(os, g);
    return os.str();
}

inline SimpleGraph read_simple(std::istream& in) {
    std::string line;
    if (!detail::next_payload_line(in, line))
        throw std::invalid_argument("empty graph file");
    auto header = detail::parse_fields(line, 2, "graph header");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw std::invalid_argument("negative header field");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_payload_line(in, line))
            throw std::invalid_argument("truncated edge list");
        auto f = detail::parse_fields(line, 2, "edge line");
        if (!(0 <= f[0] && f[0] < f[1] && f[1] < n))
            throw std::invalid_argument("edge line out of order or range: " + line);
        edges.emplace_back(int(f[0]), int(f[1]));
    }
    return SimpleGraph::from_edges(int(n), edges);
}

inline void write_multigraph(std::ostream& out, const Multigraph& f) {
    out << f.n() << ' ' << f.distinct_pair_count() << '\n';
    for (const auto& [pair, k] : f.pair_multiplicities())
        out << pair.first << ' ' << pair.second << ' ' << k << '\n';
}

inline std::string to_text(const Multigraph& f) {
    std::ostringstream os;
    write_multigraph(os, f);
    return os.str();
}

inline Multigraph read_multigraph(std::istream& in) {
    std::string line;
    if (!detail::next_payload_line(in, line))
        throw std::invalid_argument("empty multigraph file");
    auto header = detail::parse_fields(line, 2, "multigraph header");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw std::invalid_argument("negative header field");
    std::vector<std::tuple<int, int, int>> rows;
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_payload_line(in, line))
            throw std::invalid_argument("truncated multigraph edge list");
        auto f = detail::parse_fields(line, 3, "multigraph edge line");
        if (!(0 <= f[0] && f[0] < f[1] && f[1] < n) || f[2] < 1)
            throw std::invalid_argument("multigraph edge line out of range: " + line);
        rows.emplace_back(int(f[0]), int(f[1]), int(f[2]));
    }
    return Multigraph::from_edge_list(int(n), rows);
}

inline void write_coloring(std::ostream& out, const Coloring& c, const std::string& method) {
    for (size_t v = 0; v < c.color.size(); ++v) out << v << ' ' << c.color[v] << '\n';
    out << "colors " << c.colors_used() << " method " << method << '\n';
}

}  // namespace clawsq
