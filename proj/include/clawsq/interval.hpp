#pragma once

// Integer interval representations (circular and linear), their realized
// graphs, linear interval strips and the iterated strip composition.

#include "clawsq/graph.hpp"
#include "clawsq/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace clawsq {

struct IntervalRep {
    enum class Kind { circular, linear };
    Kind kind = Kind::linear;
    int period = 0;                            // circular only
    std::vector<int> position;                 // vertex -> integer point
    std::vector<std::pair<int, int>> intervals;  // (start, end), clockwise if circular
};

inline void validate_interval_rep(const IntervalRep& rep) {
    if (rep.kind == IntervalRep::Kind::circular) {
        if (rep.period < 1) throw std::invalid_argument("circular rep needs period >= 1");
        for (int p : rep.position)
            if (p < 0 || p >= rep.period)
                throw std::invalid_argument("position outside the circle");
        for (auto [s, e] : rep.intervals)
            if (s < 0 || s >= rep.period || e < 0 || e >= rep.period)
                throw std::invalid_argument("arc endpoint outside the circle");
    } else {
        for (auto [s, e] : rep.intervals)
            if (s > e) throw std::invalid_argument("linear interval with start > end");
    }
}

// closed interval membership; circular arcs run clockwise from start to end
inline bool interval_contains(const IntervalRep& rep, std::pair<int, int> iv, int p) {
    auto [s, e] = iv;
    if (rep.kind == IntervalRep::Kind::linear) return s <= p && p <= e;
    if (s <= e) return s <= p && p <= e;
    return p >= s || p <= e;
}

inline SimpleGraph realize_interval(const IntervalRep& rep) {
    validate_interval_rep(rep);
    int n = int(rep.position.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (auto iv : rep.intervals)
                if (interval_contains(rep, iv, rep.position[u]) &&
                    interval_contains(rep, iv, rep.position[v])) {
                    edges.emplace_back(u, v);
                    break;
                }
    return SimpleGraph::from_edges(n, edges);
}

// rotate a circular rep so that an uncovered point becomes the seam,
// producing a linear rep realizing the same graph
inline IntervalRep cut_circular_at(const IntervalRep& rep, int cut) {
    if (rep.kind != IntervalRep::Kind::circular)
        throw std::invalid_argument("cut_circular_at needs a circular rep");
    validate_interval_rep(rep);
    for (auto iv : rep.intervals)
        if (interval_contains(rep, iv, cut))
            throw std::invalid_argument("cut point is covered by an arc");
    auto shift = [&](int p) { return (p - cut - 1 + rep.period) % rep.period; };
    IntervalRep out;
    out.kind = IntervalRep::Kind::linear;
    for (int p : rep.position) out.position.push_back(shift(p));
    for (auto [s, e] : rep.intervals) out.intervals.emplace_back(shift(s), shift(e));
    validate_interval_rep(out);
    return out;
}

// A linear interval graph with its two end vertices. For any linear rep the
// neighbourhood of an extreme vertex is automatically a clique: intervals
// are closed, so an interval reaching the extreme point spans everything
// between.
struct Strip {
    IntervalRep rep;  // linear
    SimpleGraph graph;
    int a = -1;
    int b = -1;
};

inline Strip make_strip(const IntervalRep& rep) {
    if (rep.kind != IntervalRep::Kind::linear)
        throw std::invalid_argument("a strip needs a linear rep");
    if (rep.position.empty()) throw std::invalid_argument("a strip needs vertices");
    Strip s;
    s.rep = rep;
    s.graph = realize_interval(rep);
    s.a = 0;
    s.b = 0;
    for (int v = 1; v < int(rep.position.size()); ++v) {
        if (rep.position[v] < rep.position[s.a]) s.a = v;
        if (rep.position[v] > rep.position[s.b]) s.b = v;
    }
    if (s.a == s.b) throw std::invalid_argument("strip ends coincide");
    return s;
}

// Which end of which strip a base-clique slot refers to.
struct EndSymbol {
    int strip = 0;
    bool is_b = false;

    friend bool operator==(const EndSymbol&, const EndSymbol&) = default;
    friend auto operator<=>(const EndSymbol&, const EndSymbol&) = default;
};

struct CompositionScheme {
    std::vector<std::vector<EndSymbol>> base_cliques;  // partition of all 2k symbols
    std::vector<Strip> strips;
};

inline void validate_scheme(const CompositionScheme& scheme) {
    int k = int(scheme.strips.size());
    if (k < 3) throw std::invalid_argument("composition needs at least three strips");
    std::set<std::pair<int, int>> seen;
    for (const auto& c : scheme.base_cliques)
        for (auto sym : c) {
            if (sym.strip < 0 || sym.strip >= k)
                throw std::invalid_argument("end symbol refers to a missing strip");
            if (!seen.insert({sym.strip, sym.is_b}).second)
                throw std::invalid_argument("end symbol used twice");
        }
    if (int(seen.size()) != 2 * k)
        throw std::invalid_argument("base cliques must cover every end symbol");
}

struct CompositionResult {
    SimpleGraph graph;
    // per strip: original vertex -> composed vertex, ends mapped to -1
    std::vector<std::vector<int>> strip_vertex_map;
    // per base clique: the composed vertices absorbed into it
    std::vector<std::vector<int>> base_clique_images;
};

// Iterated strip composition: start from disjoint complete graphs on the end
// symbols and replace the two ends of each strip in turn by the strip's
// interior, joining the current neighbourhoods of the ends to the interior
// neighbourhoods of the strip's own ends.
inline CompositionResult compose_strips(const CompositionScheme& scheme) {
    validate_scheme(scheme);
    int k = int(scheme.strips.size());

    // working ids: symbol a_i = 2i, b_i = 2i+1, interiors from 2k upward
    int next_id = 2 * k;
    CompositionResult res;
    res.strip_vertex_map.resize(k);
    std::vector<std::vector<int>> interior_of(k);
    for (int i = 0; i < k; ++i) {
        const Strip& st = scheme.strips[i];
        res.strip_vertex_map[i].assign(st.graph.n(), -1);
        for (int v = 0; v < st.graph.n(); ++v) {
            if (v == st.a || v == st.b) continue;
            res.strip_vertex_map[i][v] = next_id;
            interior_of[i].push_back(v);
            ++next_id;
        }
    }

    std::vector<std::set<int>> adj(next_id);
    std::vector<char> alive(next_id, 0);
    auto connect = [&](int x, int y) {
        if (x == y) return;
        adj[x].insert(y);
        adj[y].insert(x);
    };
    auto sym_id = [&](EndSymbol s) { return 2 * s.strip + (s.is_b ? 1 : 0); };

    for (const auto& c : scheme.base_cliques)
        for (size_t i = 0; i < c.size(); ++i) {
            alive[sym_id(c[i])] = 1;
            for (size_t j = i + 1; j < c.size(); ++j) connect(sym_id(c[i]), sym_id(c[j]));
        }

    for (int i = 0; i < k; ++i) {
        const Strip& st = scheme.strips[i];
        int a_sym = 2 * i, b_sym = 2 * i + 1;
        std::vector<int> hook_a, hook_b;  // current neighbourhoods of the ends
        for (int x : adj[a_sym])
            if (x != b_sym) hook_a.push_back(x);
        for (int x : adj[b_sym])
            if (x != a_sym) hook_b.push_back(x);
        auto is_clique_now = [&](const std::vector<int>& vs) {
            for (size_t p = 0; p < vs.size(); ++p)
                for (size_t q = p + 1; q < vs.size(); ++q)
                    if (!adj[vs[p]].count(vs[q])) return false;
            return true;
        };
        if (!is_clique_now(hook_a) || !is_clique_now(hook_b))
            throw std::invalid_argument("end neighbourhood stopped being a clique");

        for (int x : adj[a_sym]) adj[x].erase(a_sym);
        for (int x : adj[b_sym]) adj[x].erase(b_sym);
        adj[a_sym].clear();
        adj[b_sym].clear();
        alive[a_sym] = alive[b_sym] = 0;

        for (int v : interior_of[i]) alive[res.strip_vertex_map[i][v]] = 1;
        for (int v : interior_of[i])
            for (int w : st.graph.neighbors(v))
                if (w != st.a && w != st.b)
                    connect(res.strip_vertex_map[i][v], res.strip_vertex_map[i][w]);
        for (int v : st.graph.neighbors(st.a))
            if (v != st.b)
                for (int x : hook_a) connect(res.strip_vertex_map[i][v], x);
        for (int v : st.graph.neighbors(st.b))
            if (v != st.a)
                for (int x : hook_b) connect(res.strip_vertex_map[i][v], x);
    }

    // compact to final vertex ids (symbols are gone, interiors stay in order)
    std::vector<int> final_id(next_id, -1);
    int n = 0;
    for (int x = 2 * k; x < next_id; ++x) final_id[x] = n++;
    std::vector<Edge> edges;
    for (int x = 2 * k; x < next_id; ++x)
        for (int y : adj[x])
            if (x < y) edges.emplace_back(final_id[x], final_id[y]);
    res.graph = SimpleGraph::from_edges(n, edges);
    for (int i = 0; i < k; ++i)
        for (int& m : res.strip_vertex_map[i])
            if (m >= 0) m = final_id[m];

    res.base_clique_images.resize(scheme.base_cliques.size());
    for (size_t j = 0; j < scheme.base_cliques.size(); ++j) {
        std::set<int> img;
        for (auto sym : scheme.base_cliques[j]) {
            const Strip& st = scheme.strips[sym.strip];
            int end = sym.is_b ? st.b : st.a;
            int other = sym.is_b ? st.a : st.b;
            for (int v : st.graph.neighbors(end))
                if (v != other) img.insert(res.strip_vertex_map[sym.strip][v]);
        }
        res.base_clique_images[j].assign(img.begin(), img.end());
    }
    return res;
}

// ---- text round-trip ----
//
// interval rep:
//   circular P | linear
//   v p          (one line per vertex)
//   interval s e
// scheme:
//   scheme k
//   clique a<i> b<j> ...
//   strip ... endstrip    (one embedded linear rep per strip, in order)

inline void write_interval_rep(std::ostream& out, const IntervalRep& rep) {
    if (rep.kind == IntervalRep::Kind::circular)
        out << "circular " << rep.period << "\n";
    else
        out << "linear\n";
    for (size_t v = 0; v < rep.position.size(); ++v)
        out << v << " " << rep.position[v] << "\n";
    for (auto [s, e] : rep.intervals) out << "interval " << s << " " << e << "\n";
}

inline std::string interval_rep_to_text(const IntervalRep& rep) {
    std::ostringstream out;
    write_interval_rep(out, rep);
    return out.str();
}

namespace detail {

inline IntervalRep read_interval_rep_lines(const std::vector<std::string>& lines, size_t& at) {
    if (at >= lines.size()) throw std::invalid_argument("missing interval rep header");
    IntervalRep rep;
    {
        std::istringstream head(lines[at++]);
        std::string kind;
        head >> kind;
        if (kind == "circular") {
            rep.kind = IntervalRep::Kind::circular;
            if (!(head >> rep.period)) throw std::invalid_argument("circular needs a period");
        } else if (kind == "linear") {
            rep.kind = IntervalRep::Kind::linear;
        } else {
            throw std::invalid_argument("unknown interval rep kind: " + kind);
        }
        std::string extra;
        if (head >> extra) throw std::invalid_argument("trailing tokens after rep header");
    }
    std::map<int, int> pos;
    while (at < lines.size()) {
        std::istringstream line(lines[at]);
        std::string first;
        line >> first;
        if (first == "interval") {
            int s, e;
            if (!(line >> s >> e)) throw std::invalid_argument("malformed interval line");
            rep.intervals.emplace_back(s, e);
        } else if (first == "endstrip" || first == "strip" || first == "clique" ||
                   first == "scheme") {
            break;  // embedded in a scheme block
        } else {
            int v = 0, p = 0;
            std::istringstream again(lines[at]);
            if (!(again >> v >> p)) throw std::invalid_argument("malformed position line");
            if (!pos.emplace(v, p).second) throw std::invalid_argument("duplicate vertex");
        }
        ++at;
    }
    rep.position.resize(pos.size());
    for (auto [v, p] : pos) {
        if (v < 0 || v >= int(pos.size()))
            throw std::invalid_argument("vertex ids must be 0..n-1");
        rep.position[v] = p;
    }
    validate_interval_rep(rep);
    return rep;
}

}  // namespace detail

inline IntervalRep read_interval_rep(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        auto line = detail::strip_comment(raw);
        if (!line.empty()) lines.push_back(line);
    }
    size_t at = 0;
    auto rep = detail::read_interval_rep_lines(lines, at);
    if (at != lines.size()) throw std::invalid_argument("trailing content after rep");
    return rep;
}

inline IntervalRep interval_rep_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_interval_rep(in);
}

inline void write_scheme(std::ostream& out, const CompositionScheme& scheme) {
    out << "scheme " << scheme.strips.size() << "\n";
    for (const auto& c : scheme.base_cliques) {
        out << "clique";
        for (auto sym : c) out << " " << (sym.is_b ? "b" : "a") << sym.strip;
        out << "\n";
    }
    for (const auto& st : scheme.strips) {
        out << "strip\n";
        write_interval_rep(out, st.rep);
        out << "endstrip\n";
    }
}

inline std::string scheme_to_text(const CompositionScheme& scheme) {
    std::ostringstream out;
    write_scheme(out, scheme);
    return out.str();
}

inline CompositionScheme read_scheme(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        auto line = detail::strip_comment(raw);
        if (!line.empty()) lines.push_back(line);
    }
    size_t at = 0;
    if (at >= lines.size()) throw std::invalid_argument("missing scheme header");
    int k = 0;
    {
        std::istringstream head(lines[at++]);
        std::string tag;
        head >> tag >> k;
        if (tag != "scheme" || k < 1) throw std::invalid_argument("malformed scheme header");
    }
    CompositionScheme scheme;
    while (at < lines.size() && lines[at].rfind("clique", 0) == 0) {
        std::istringstream line(lines[at++]);
        std::string tag, sym;
        line >> tag;
        std::vector<EndSymbol> c;
        while (line >> sym) {
            if (sym.size() < 2 || (sym[0] != 'a' && sym[0] != 'b'))
                throw std::invalid_argument("malformed end symbol: " + sym);
            EndSymbol s;
            s.is_b = sym[0] == 'b';
            s.strip = std::stoi(sym.substr(1));
            c.push_back(s);
        }
        if (c.empty()) throw std::invalid_argument("empty base clique line");
        scheme.base_cliques.push_back(std::move(c));
    }
    for (int i = 0; i < k; ++i) {
        if (at >= lines.size() || lines[at] != "strip")
            throw std::invalid_argument("expected a strip block");
        ++at;
        auto rep = detail::read_interval_rep_lines(lines, at);
        if (at >= lines.size() || lines[at] != "endstrip")
            throw std::invalid_argument("unterminated strip block");
        ++at;
        scheme.strips.push_back(make_strip(rep));
    }
    if (at != lines.size()) throw std::invalid_argument("trailing content after scheme");
    validate_scheme(scheme);
    return scheme;
}

inline CompositionScheme scheme_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_scheme(in);
}

}  // namespace clawsq
