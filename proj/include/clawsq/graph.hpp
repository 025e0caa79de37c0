#pragma once

// Core graph value types: immutable simple graphs with sorted adjacency,
// loopless multigraphs with explicit edge multiplicities, and vertex
// colourings.  All derived graphs (square, line graph, induced subgraph)
// are returned as new values.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace clawsq {

using Edge = std::pair<int, int>;

class SimpleGraph {
public:
    SimpleGraph() : n_(0) {}

    explicit SimpleGraph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    static SimpleGraph from_edges(int n, const std::vector<Edge>& edges) {
        SimpleGraph g(n);
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("duplicate edge");
        }
        return g;
    }

    int n() const { return n_; }

    int edge_count() const {
        int deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += int(nb.size());
        return deg_sum / 2;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return int(adj_[v].size());
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_;
    std::vector<std::vector<int>> adj_;
};

// An edge instance of a multigraph: copy = 0 .. multiplicity-1, u < v.
struct EdgeInstance {
    int u;
    int v;
    int copy;

    bool operator==(const EdgeInstance&) const = default;
    auto operator<=>(const EdgeInstance&) const = default;
};

class Multigraph {
public:
    Multigraph() : n_(0) {}

    explicit Multigraph(int n) : n_(n), deg_(n, 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    // rows: (u, v, multiplicity), pairs must be distinct across rows
    static Multigraph from_edge_list(int n, const std::vector<std::tuple<int, int, int>>& rows) {
        Multigraph f(n);
        for (auto [u, v, k] : rows) {
            if (u == v) throw std::invalid_argument("self-loop");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (k < 1) throw std::invalid_argument("multiplicity < 1");
            auto key = std::minmax(u, v);
            if (f.mult_.count({key.first, key.second}))
                throw std::invalid_argument("repeated vertex pair in edge list");
            f.mult_[{key.first, key.second}] = k;
            f.deg_[u] += k;
            f.deg_[v] += k;
        }
        return f;
    }

    int n() const { return n_; }

    int multiplicity(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return 0;
        auto key = std::minmax(u, v);
        auto it = mult_.find({key.first, key.second});
        return it == mult_.end() ? 0 : it->second;
    }

    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }

    int max_degree() const {
        return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
    }

    long long edge_count() const {
        long long total = 0;
        for (const auto& [pair, k] : mult_) total += k;
        return total;
    }

    int distinct_pair_count() const { return int(mult_.size()); }

    const std::map<Edge, int>& pair_multiplicities() const { return mult_; }

    std::vector<EdgeInstance> edge_instances() const {
        std::vector<EdgeInstance> out;
        for (const auto& [pair, k] : mult_)
            for (int c = 0; c < k; ++c) out.push_back({pair.first, pair.second, c});
        return out;
    }

    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && mult_ == other.mult_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    int n_;
    std::map<Edge, int> mult_;
    std::vector<int> deg_;
};

// Vertex colouring; -1 marks an uncoloured vertex.
struct Coloring {
    std::vector<int> color;
    int palette_size = 0;

    bool total() const {
        return std::all_of(color.begin(), color.end(), [](int c) { return c >= 0; });
    }

    int colors_used() const {
        int hi = -1;
        for (int c : color) hi = std::max(hi, c);
        return hi + 1;
    }
};

inline SimpleGraph underlying_simple(const Multigraph& f) {
    std::vector<Edge> edges;
    for (const auto& [pair, k] : f.pair_multiplicities()) edges.push_back(pair);
    return SimpleGraph::from_edges(f.n(), edges);
}

inline Multigraph as_multigraph(const SimpleGraph& g) {
    std::vector<std::tuple<int, int, int>> rows;
    for (auto [u, v] : g.edges()) rows.emplace_back(u, v, 1);
    return Multigraph::from_edge_list(g.n(), rows);
}

// Distance-<=2 graph: u ~ w iff dist_G(u, w) is 1 or 2.
inline SimpleGraph square(const SimpleGraph& g) {
    int n = g.n();
    std::vector<Edge> edges;
    std::vector<char> mark(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> touched;
        for (int u : g.neighbors(v)) {
            if (u > v && !mark[u]) { mark[u] = 1; touched.push_back(u); }
            for (int w : g.neighbors(u)) {
                if (w > v && !mark[w]) { mark[w] = 1; touched.push_back(w); }
            }
        }
        for (int u : touched) { edges.emplace_back(v, u); mark[u] = 0; }
    }
    return SimpleGraph::from_edges(n, edges);
}

// Vertices at distance exactly 2 from v, sorted.
inline std::vector<int> second_neighborhood(const SimpleGraph& g, int v) {
    std::vector<char> mark(g.n(), 0);
    mark[v] = 1;
    for (int u : g.neighbors(v)) mark[u] = 1;
    std::vector<int> out;
    for (int u : g.neighbors(v))
        for (int w : g.neighbors(u))
            if (!mark[w]) { mark[w] = 1; out.push_back(w); }
    std::sort(out.begin(), out.end());
    return out;
}

inline int square_degree(const SimpleGraph& g, int v) {
    return g.degree(v) + int(second_neighborhood(g, v).size());
}

struct LineGraphResult {
    SimpleGraph graph;
    std::vector<EdgeInstance> labels;  // line-graph vertex -> edge instance of F
};

// Line graph of a multigraph: one vertex per edge instance, adjacent iff the
// instances share an endpoint (parallel copies are pairwise adjacent).
inline LineGraphResult line_graph(const Multigraph& f) {
    LineGraphResult res;
    res.labels = f.edge_instances();
    int m = int(res.labels.size());
    std::vector<std::vector<int>> at_vertex(f.n());
    for (int i = 0; i < m; ++i) {
        at_vertex[res.labels[i].u].push_back(i);
        at_vertex[res.labels[i].v].push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& inc : at_vertex)
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b) {
                int i = inc[a], j = inc[b];
                // parallel copies meet at both endpoints; dedup below
                edges.emplace_back(std::min(i, j), std::max(i, j));
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    res.graph = SimpleGraph::from_edges(m, edges);
    return res;
}

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> to_original;  // new index -> original vertex
};

inline InducedSubgraph induced(const SimpleGraph& g, const std::vector<int>& vertices) {
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_index(g.n(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.n())
            throw std::out_of_range("vertex out of range");
        new_index[keep[i]] = int(i);
    }
    std::vector<Edge> edges;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && new_index[v] >= 0)
                edges.emplace_back(new_index[u], new_index[v]);
    return {SimpleGraph::from_edges(int(keep.size()), edges), keep};
}

inline InducedSubgraph delete_vertex(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
    std::vector<int> keep;
    keep.reserve(g.n() - 1);
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced(g, keep);
}

inline SimpleGraph complement(const SimpleGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return SimpleGraph::from_edges(g.n(), edges);
}

inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) { seen[v] = 1; q.push(v); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

// Two-colouring of a bipartite graph; empty result if an odd cycle exists.
inline bool bipartition(const SimpleGraph& g, std::vector<int>* side_out = nullptr) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    if (side_out) *side_out = std::move(side);
    return true;
}

}  // namespace clawsq
