#pragma once

// Small graph builders shared by the unit tests.

#include "clawsq/graph.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace test_helpers {

using clawsq::Edge;
using clawsq::Multigraph;
using clawsq::SimpleGraph;

inline SimpleGraph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph::from_edges(n, e);
}

inline SimpleGraph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return SimpleGraph::from_edges(n, e);
}

inline SimpleGraph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph::from_edges(n, e);
}

// hub = 5, rim = C5 on 0..4
inline SimpleGraph wheel5() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        e.emplace_back(i, 5);
    }
    return SimpleGraph::from_edges(6, e);
}

inline Multigraph random_multigraph_adhoc(int n, int tries, int mmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<Edge, int> mult;
    for (int t = 0; t < tries; ++t) {
        int u = int(rng() % std::uint64_t(n));
        int v = int(rng() % std::uint64_t(n));
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (mult[{key.first, key.second}] < mmax) mult[{key.first, key.second}]++;
    }
    std::vector<std::tuple<int, int, int>> rows;
    for (auto& [p, k] : mult)
        if (k > 0) rows.emplace_back(p.first, p.second, k);
    return Multigraph::from_edge_list(n, rows);
}

}  // namespace test_helpers
