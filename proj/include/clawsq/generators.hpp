#pragma once

// Graph families: five-cycle blow-ups, complete bipartite graphs, vertex
// substitutions, seeded random multigraphs and interval representations,
// and a handful of named fixed instances.

#include "clawsq/graph.hpp"
#include "clawsq/interval.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace clawsq {

// Deterministic across platforms: mt19937_64 output mapped by modulo, and a
// hand-rolled shuffle, so generated corpora are byte-stable.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int below(int n) {
        if (n <= 0) throw std::invalid_argument("below() needs a positive range");
        return int(eng() % std::uint64_t(n));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[size_t(i)], v[size_t(below(i + 1))]);
    }
};

inline long long f_of_delta(int d) {
    if (d < 2) throw std::invalid_argument("f_of_delta needs degree >= 2");
    long long dd = d;
    if (d % 2 == 0) return 5 * dd * dd / 4;
    return (5 * dd * dd - 2 * dd + 1) / 4;
}

// bag sizes around the five-cycle: all d/2 for even d, otherwise two
// consecutive bags of (d+1)/2 followed by three of (d-1)/2
inline std::vector<int> c5_blowup_bags(int d) {
    if (d < 2) throw std::invalid_argument("blow-up needs degree >= 2");
    if (d % 2 == 0) return std::vector<int>(5, d / 2);
    return {(d + 1) / 2, (d + 1) / 2, (d - 1) / 2, (d - 1) / 2, (d - 1) / 2};
}

enum class SubstituteMode { stable, clique };

inline std::vector<int> bag_offsets(const std::vector<int>& sizes) {
    std::vector<int> off(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("bag sizes must be positive");
        off[i + 1] = off[i] + sizes[i];
    }
    return off;
}

inline SimpleGraph substitute(const SimpleGraph& g, const std::vector<int>& sizes,
                              SubstituteMode mode) {
    if (int(sizes.size()) != g.n())
        throw std::invalid_argument("one bag size per vertex required");
    auto off = bag_offsets(sizes);
    std::vector<Edge> edges;
    if (mode == SubstituteMode::clique)
        for (int v = 0; v < g.n(); ++v)
            for (int i = off[v]; i < off[v + 1]; ++i)
                for (int j = i + 1; j < off[v + 1]; ++j) edges.emplace_back(i, j);
    for (auto [u, v] : g.edges())
        for (int i = off[u]; i < off[u + 1]; ++i)
            for (int j = off[v]; j < off[v + 1]; ++j)
                edges.emplace_back(std::min(i, j), std::max(i, j));
    return SimpleGraph::from_edges(off.back(), edges);
}

inline Multigraph c5_blowup(int d) {
    std::vector<Edge> c5;
    for (int i = 0; i < 5; ++i) c5.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    auto g = substitute(SimpleGraph::from_edges(5, c5), c5_blowup_bags(d), SubstituteMode::stable);
    return as_multigraph(g);
}

inline Multigraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("both sides need a vertex");
    std::vector<std::tuple<int, int, int>> rows;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) rows.emplace_back(i, a + j, 1);
    return Multigraph::from_edge_list(a + b, rows);
}

inline Multigraph random_multigraph(int n, int dmax, int mmax, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (dmax < 0 || mmax < 1) throw std::invalid_argument("bad degree or multiplicity cap");
    Rng rng(seed);
    std::map<Edge, int> mult;
    std::vector<int> deg(n, 0);
    for (int t = 0; t < 3 * n * std::max(dmax, 1); ++t) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        auto [x, y] = std::minmax(u, v);
        if (deg[u] >= dmax || deg[v] >= dmax || mult[{x, y}] >= mmax) continue;
        ++mult[{x, y}];
        ++deg[u];
        ++deg[v];
    }
    std::vector<std::tuple<int, int, int>> rows;
    for (auto& [p, k] : mult)
        if (k > 0) rows.emplace_back(p.first, p.second, k);
    return Multigraph::from_edge_list(n, rows);
}

// union of d random perfect matchings (n even), or d/2 random closed tours
// (n odd, d even); repeats collapse into multiplicities
inline Multigraph random_regular_multigraph(int n, int d, std::uint64_t seed) {
    if (n < 2 || d < 1) throw std::invalid_argument("need n >= 2 and degree >= 1");
    if (n % 2 == 1 && d % 2 == 1)
        throw std::invalid_argument("odd vertex count needs even degree");
    Rng rng(seed);
    std::map<Edge, int> mult;
    auto add = [&](int u, int v) { ++mult[{std::min(u, v), std::max(u, v)}]; };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n % 2 == 0) {
        for (int round = 0; round < d; ++round) {
            rng.shuffle(order);
            for (int i = 0; i < n; i += 2) add(order[i], order[i + 1]);
        }
    } else {
        for (int round = 0; round < d / 2; ++round) {
            rng.shuffle(order);
            for (int i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);
        }
    }
    std::vector<std::tuple<int, int, int>> rows;
    for (auto& [p, k] : mult) rows.emplace_back(p.first, p.second, k);
    return Multigraph::from_edge_list(n, rows);
}

inline SimpleGraph named_instance(const std::string& name) {
    if (name == "c5") {
        return SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    }
    if (name == "paw") {
        return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    }
    if (name == "diamond") {
        return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "wheel5") {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
            e.emplace_back(i, 5);
        }
        return SimpleGraph::from_edges(6, e);
    }
    if (name == "icosahedron") {
        // apex 0 over ring 1..5, ring 6..10 over apex 11, rings offset so
        // every face is a triangle
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            int u1 = 1 + i, u2 = 1 + (i + 1) % 5;
            int l1 = 6 + i, l2 = 6 + (i + 1) % 5;
            e.emplace_back(0, u1);
            e.emplace_back(std::min(u1, u2), std::max(u1, u2));
            e.emplace_back(std::min(l1, l2), std::max(l1, l2));
            e.emplace_back(l1, 11);
            e.emplace_back(u1, l1);
            e.emplace_back(std::min(u1, l2), std::max(u1, l2));
        }
        return SimpleGraph::from_edges(12, e);
    }
    if (name == "petersen_line") {
        std::vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
            e.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
            e.emplace_back(i, 5 + i);
        }
        auto petersen = SimpleGraph::from_edges(10, e);
        return line_graph(as_multigraph(petersen)).graph;
    }
    throw std::invalid_argument("unknown instance name: " + name);
}

// ---- random interval representations and composition schemes ----

inline IntervalRep random_circular_rep(int n, int arcs, std::uint64_t seed) {
    if (n < 1 || arcs < 1) throw std::invalid_argument("need vertices and arcs");
    Rng rng(seed);
    IntervalRep rep;
    rep.kind = IntervalRep::Kind::circular;
    rep.period = 3 * n + 1;
    for (int v = 0; v < n; ++v) rep.position.push_back(rng.below(rep.period));
    for (int i = 0; i < arcs; ++i) {
        int s = rng.below(rep.period);
        int len = 1 + rng.below(rep.period / 2);
        rep.intervals.emplace_back(s, (s + len) % rep.period);
    }
    return rep;
}

inline IntervalRep random_linear_rep(int n, int segments, std::uint64_t seed) {
    if (n < 2 || segments < 1) throw std::invalid_argument("need two vertices and a segment");
    Rng rng(seed);
    IntervalRep rep;
    rep.kind = IntervalRep::Kind::linear;
    int span = 2 * n;
    rep.position.push_back(0);
    for (int v = 1; v + 1 < n; ++v) rep.position.push_back(rng.below(span + 1));
    rep.position.push_back(span);
    for (int i = 0; i < segments; ++i) {
        int s = rng.below(span);
        int e = s + 1 + rng.below(span - s);
        rep.intervals.emplace_back(s, e);
    }
    // ends must see somebody for interesting strips; a full-span segment
    // would defeat the point, so bridge each end with a short segment
    rep.intervals.emplace_back(0, 1 + rng.below(span - 1));
    rep.intervals.emplace_back(rng.below(span - 1), span);
    return rep;
}

// every strip's two end symbols land in different base cliques, which keeps
// the end neighbourhoods of the growing composition cliques at every step
inline CompositionScheme random_scheme(int k, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("composition needs at least three strips");
    Rng rng(seed);
    CompositionScheme scheme;
    int cliques = 2 + rng.below(k - 1);
    scheme.base_cliques.resize(cliques);
    for (int i = 0; i < k; ++i) {
        int ca = rng.below(cliques);
        int cb = (ca + 1 + rng.below(cliques - 1)) % cliques;
        scheme.base_cliques[ca].push_back({i, false});
        scheme.base_cliques[cb].push_back({i, true});
    }
    std::erase_if(scheme.base_cliques, [](const auto& c) { return c.empty(); });
    for (int i = 0; i < k; ++i) {
        int interior = 3 + rng.below(3);
        scheme.strips.push_back(make_strip(random_linear_rep(interior, interior, rng.eng())));
    }
    return scheme;
}

}  // namespace clawsq
