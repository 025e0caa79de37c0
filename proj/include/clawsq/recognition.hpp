#pragma once

// Structure recognition: claw search, two-clique covers of neighbourhoods,
// quasi-line testing, Krausz-style edge-clique covers with two memberships
// per vertex (line graphs of multigraphs), stable triples and homogeneous
// clique pairs.

#include "clawsq/graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>

namespace clawsq {

struct Claw {
    int center;
    std::array<int, 3> leaves;  // pairwise non-adjacent neighbours of center
};

inline bool is_clique(const SimpleGraph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// First claw in scan order (ascending center, then lexicographic leaves).
inline std::optional<Claw> find_claw(const SimpleGraph& g) {
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        int d = int(nb.size());
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (int c = b + 1; c < d; ++c) {
                    if (g.has_edge(nb[a], nb[c]) || g.has_edge(nb[b], nb[c])) continue;
                    return Claw{v, {nb[a], nb[b], nb[c]}};
                }
            }
    }
    return std::nullopt;
}

inline std::optional<std::array<int, 3>> find_stable_triple(const SimpleGraph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            for (int w = v + 1; w < g.n(); ++w)
                if (!g.has_edge(u, w) && !g.has_edge(v, w))
                    return std::array<int, 3>{u, v, w};
        }
    return std::nullopt;
}

// Partition of V(H) into two cliques; exists iff complement(H) is bipartite.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> two_clique_cover(
    const SimpleGraph& h) {
    auto comp = complement(h);
    std::vector<int> side;
    if (!bipartition(comp, &side)) return std::nullopt;
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < h.n(); ++v)
        (side[v] == 0 ? out.first : out.second).push_back(v);
    return out;
}

struct QuasiLineCheck {
    bool ok;
    int failing_vertex;  // -1 when ok
};

inline QuasiLineCheck is_quasi_line(const SimpleGraph& g) {
    for (int v = 0; v < g.n(); ++v) {
        auto nbhd = induced(g, g.neighbors(v));
        if (!two_clique_cover(nbhd.graph)) return {false, v};
    }
    return {true, -1};
}

// Krausz certificate: cliques partitioning E(G) with every vertex in exactly
// two listed cliques (singletons pad deficient vertices), plus the root
// multigraph whose line graph reproduces G vertex-for-vertex.
struct KrauszCertificate {
    std::vector<std::vector<int>> cliques;
    std::vector<std::pair<int, int>> vertex_cliques;  // the two clique ids per vertex
    Multigraph root;
    std::vector<int> vertex_to_root_instance;  // G vertex -> line_graph(root) vertex
};

namespace detail {

// Phase 1: exact edge partition into cliques, vertex memberships at most two.
// Succeeds exactly when G is the line graph of a simple graph.
struct KrauszSearch {
    const SimpleGraph& g;
    std::vector<Edge> edge_list;
    std::vector<int> edge_id;  // n*n lookup
    std::vector<std::vector<int>> cliques;
    std::vector<int> membership;
    std::vector<char> covered;
    int uncovered_left;

    explicit KrauszSearch(const SimpleGraph& graph)
        : g(graph),
          edge_list(graph.edges()),
          edge_id(size_t(graph.n()) * size_t(graph.n()), -1),
          membership(graph.n(), 0),
          covered(edge_list.size(), 0),
          uncovered_left(int(edge_list.size())) {
        for (size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            edge_id[size_t(u) * g.n() + v] = int(i);
            edge_id[size_t(v) * g.n() + u] = int(i);
        }
    }

    int eid(int u, int v) const { return edge_id[size_t(u) * g.n() + v]; }

    // most constrained uncovered edge: max endpoint membership, lowest id
    int pick_edge() const {
        int best = -1, best_score = -1;
        for (size_t i = 0; i < edge_list.size(); ++i) {
            if (covered[i]) continue;
            int score = membership[edge_list[i].first] + membership[edge_list[i].second];
            if (score > best_score) { best_score = score; best = int(i); }
        }
        return best;
    }

    // try to put edge (u,v) into clique c by adding the missing endpoints
    bool can_absorb(int c, int u, int v, std::vector<int>& add) const {
        add.clear();
        bool has_u = false, has_v = false;
        for (int x : cliques[c]) {
            if (x == u) has_u = true;
            if (x == v) has_v = true;
        }
        if (!has_u) add.push_back(u);
        if (!has_v) add.push_back(v);
        if (add.empty()) return false;  // edge would already be covered
        for (int x : add) {
            if (membership[x] >= 2) return false;
            for (int y : cliques[c]) {
                int id = g.has_edge(x, y) ? eid(x, y) : -1;
                if (id < 0 || covered[id]) return false;
            }
        }
        return true;
    }

    void apply_absorb(int c, const std::vector<int>& add, std::vector<int>& covered_now) {
        // when both endpoints join, the second sees the first already in the
        // clique, so the edge between them is covered by the loop itself
        for (int x : add) {
            for (int y : cliques[c]) covered_now.push_back(eid(x, y));
            cliques[c].push_back(x);
            ++membership[x];
        }
        for (int id : covered_now) { covered[id] = 1; --uncovered_left; }
    }

    void undo_absorb(int c, const std::vector<int>& add, const std::vector<int>& covered_now) {
        for (int id : covered_now) { covered[id] = 0; ++uncovered_left; }
        for (int x : add) {
            --membership[x];
            cliques[c].pop_back();
        }
    }

    bool solve() {
        if (uncovered_left == 0) return true;
        int e = pick_edge();
        auto [u, v] = edge_list[e];
        std::vector<int> add, covered_now;
        for (int c = 0; c < int(cliques.size()); ++c) {
            if (!can_absorb(c, u, v, add)) continue;
            covered_now.clear();
            std::vector<int> added = add;
            apply_absorb(c, added, covered_now);
            if (solve()) return true;
            undo_absorb(c, added, covered_now);
        }
        if (membership[u] < 2 && membership[v] < 2) {
            cliques.push_back({u, v});
            ++membership[u];
            ++membership[v];
            covered[e] = 1;
            --uncovered_left;
            if (solve()) return true;
            ++uncovered_left;
            covered[e] = 0;
            --membership[u];
            --membership[v];
            cliques.pop_back();
        }
        return false;
    }
};

// Phase 2: edge-clique cover, vertex memberships at most two, edges covered
// at least once. Parallel root edges show up as vertex pairs sharing both
// cliques, so their connecting edge is covered twice and an exact partition
// cannot exist. Succeeds exactly when G is the line graph of a multigraph.
struct KrauszCoverSearch {
    const SimpleGraph& g;
    std::vector<Edge> edge_list;
    std::vector<int> edge_id;  // n*n lookup
    std::vector<std::vector<int>> cliques;
    std::vector<int> membership;
    std::vector<int> sat;  // number of chosen cliques containing both endpoints
    int unsat_left;

    explicit KrauszCoverSearch(const SimpleGraph& graph)
        : g(graph),
          edge_list(graph.edges()),
          edge_id(size_t(graph.n()) * size_t(graph.n()), -1),
          membership(graph.n(), 0),
          sat(edge_list.size(), 0),
          unsat_left(int(edge_list.size())) {
        for (size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            edge_id[size_t(u) * g.n() + v] = int(i);
            edge_id[size_t(v) * g.n() + u] = int(i);
        }
    }

    int eid(int u, int v) const { return edge_id[size_t(u) * g.n() + v]; }

    int pick_edge() const {
        int best = -1, best_score = -1;
        for (size_t i = 0; i < edge_list.size(); ++i) {
            if (sat[i]) continue;
            int score = membership[edge_list[i].first] + membership[edge_list[i].second];
            if (score > best_score) { best_score = score; best = int(i); }
        }
        return best;
    }

    // unlike the partition search, edges between the added endpoints and the
    // clique only need to exist; covering them a second time is allowed
    bool can_absorb(int c, int u, int v, std::vector<int>& add) const {
        add.clear();
        bool has_u = false, has_v = false;
        for (int x : cliques[c]) {
            if (x == u) has_u = true;
            if (x == v) has_v = true;
        }
        if (!has_u) add.push_back(u);
        if (!has_v) add.push_back(v);
        if (add.empty()) return false;
        for (int x : add) {
            if (membership[x] >= 2) return false;
            for (int y : cliques[c])
                if (!g.has_edge(x, y)) return false;
        }
        return true;
    }

    void apply_absorb(int c, const std::vector<int>& add, std::vector<int>& bumped) {
        for (int x : add) {
            for (int y : cliques[c]) bumped.push_back(eid(x, y));
            cliques[c].push_back(x);
            ++membership[x];
        }
        for (int id : bumped)
            if (sat[id]++ == 0) --unsat_left;
    }

    void undo_absorb(int c, const std::vector<int>& add, const std::vector<int>& bumped) {
        for (int id : bumped)
            if (--sat[id] == 0) ++unsat_left;
        for (size_t i = 0; i < add.size(); ++i) {
            --membership[cliques[c].back()];
            cliques[c].pop_back();
        }
    }

    bool solve() {
        if (unsat_left == 0) return true;
        int e = pick_edge();
        auto [u, v] = edge_list[e];
        std::vector<int> add, bumped;
        for (int c = 0; c < int(cliques.size()); ++c) {
            if (!can_absorb(c, u, v, add)) continue;
            bumped.clear();
            std::vector<int> added = add;
            apply_absorb(c, added, bumped);
            if (solve()) return true;
            undo_absorb(c, added, bumped);
        }
        if (membership[u] < 2 && membership[v] < 2) {
            cliques.push_back({u, v});
            ++membership[u];
            ++membership[v];
            ++sat[e];
            --unsat_left;
            if (solve()) return true;
            ++unsat_left;
            --sat[e];
            --membership[u];
            --membership[v];
            cliques.pop_back();
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<KrauszCertificate> krausz_partition(const SimpleGraph& g) {
    if (!is_quasi_line(g).ok) return std::nullopt;  // cheap rejection
    std::vector<std::vector<int>> found;
    detail::KrauszSearch partition(g);
    if (partition.solve()) {
        found = partition.cliques;
    } else {
        // no simple root exists; look for a root with parallel edges
        detail::KrauszCoverSearch cover(g);
        if (!cover.solve()) return std::nullopt;
        found = cover.cliques;
    }

    KrauszCertificate cert;
    cert.cliques = found;
    for (auto& c : cert.cliques) std::sort(c.begin(), c.end());
    // pad every vertex to exactly two clique memberships with singletons
    std::vector<std::vector<int>> clique_of(g.n());
    for (int c = 0; c < int(cert.cliques.size()); ++c)
        for (int v : cert.cliques[c]) clique_of[v].push_back(c);
    for (int v = 0; v < g.n(); ++v)
        while (clique_of[v].size() < 2) {
            clique_of[v].push_back(int(cert.cliques.size()));
            cert.cliques.push_back({v});
        }
    cert.vertex_cliques.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto [c1, c2] = std::minmax(clique_of[v][0], clique_of[v][1]);
        cert.vertex_cliques[v] = {c1, c2};
    }
    // root multigraph: one vertex per clique, one edge instance per G vertex
    std::map<Edge, std::vector<int>> pair_vertices;
    for (int v = 0; v < g.n(); ++v) pair_vertices[cert.vertex_cliques[v]].push_back(v);
    std::vector<std::tuple<int, int, int>> rows;
    cert.vertex_to_root_instance.assign(g.n(), -1);
    int next_instance = 0;
    for (auto& [pair, vs] : pair_vertices) {
        rows.emplace_back(pair.first, pair.second, int(vs.size()));
        for (int v : vs) cert.vertex_to_root_instance[v] = next_instance++;
    }
    cert.root = Multigraph::from_edge_list(int(cert.cliques.size()), rows);
    return cert;
}

// Full audit of a certificate against the input graph.
inline bool krausz_certificate_valid(const SimpleGraph& g, const KrauszCertificate& cert) {
    std::vector<int> count(g.n(), 0);
    for (const auto& c : cert.cliques) {
        if (!is_clique(g, c)) return false;
        for (int v : c) ++count[v];
    }
    for (int v = 0; v < g.n(); ++v)
        if (count[v] != 2) return false;
    // every edge inside at least one clique; two is fine and means the
    // endpoints are parallel root edges
    std::map<Edge, int> edge_cover;
    for (const auto& c : cert.cliques)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) ++edge_cover[{c[i], c[j]}];
    auto edges = g.edges();
    if (edge_cover.size() != edges.size()) return false;
    for (auto [u, v] : edges)
        if (!edge_cover.count({u, v})) return false;
    // round trip: the root's line graph reproduces G through the instance map
    auto rebuilt = line_graph(cert.root);
    if (rebuilt.graph.n() != g.n()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int iu = cert.vertex_to_root_instance[u];
            int iv = cert.vertex_to_root_instance[v];
            if (rebuilt.graph.has_edge(iu, iv) != g.has_edge(u, v)) return false;
        }
    return true;
}

// Pair of disjoint cliques (A, B), one of size >= 2, such that every outside
// vertex is complete or anticomplete to A and to B.
struct HomogeneousPair {
    std::vector<int> a_side;
    std::vector<int> b_side;
    bool refined = false;
    // refinement witnesses: a1-b in E(G), a2-b not in E(G)
    int witness_a1 = -1;
    int witness_a2 = -1;
    int witness_b = -1;
};

inline bool mixed_on(const SimpleGraph& g, int x, const std::vector<int>& set) {
    bool has = false, lacks = false;
    for (int y : set) {
        if (y == x) continue;
        (g.has_edge(x, y) ? has : lacks) = true;
    }
    return has && lacks;
}

inline bool is_homogeneous_pair(const SimpleGraph& g, const std::vector<int>& a,
                                const std::vector<int>& b) {
    if (a.size() < 2 && b.size() < 2) return false;
    if (!is_clique(g, a) || !is_clique(g, b)) return false;
    std::vector<char> inside(g.n(), 0);
    for (int v : a) {
        if (inside[v]) return false;
        inside[v] = 1;
    }
    for (int v : b) {
        if (inside[v]) return false;
        inside[v] = 1;
    }
    for (int x = 0; x < g.n(); ++x)
        if (!inside[x] && (mixed_on(g, x, a) || mixed_on(g, x, b))) return false;
    return true;
}

namespace detail {

// grow the unique minimal homogeneous pair containing the seeds, forcing any
// vertex mixed on one side into the other side
inline bool close_homogeneous_pair(const SimpleGraph& g, std::vector<int>& a,
                                   std::vector<int>& b) {
    std::vector<char> in_a(g.n(), 0), in_b(g.n(), 0);
    for (int v : a) in_a[v] = 1;
    for (int v : b) in_b[v] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.n() && !changed; ++x) {
            if (in_a[x] || in_b[x]) continue;
            bool ma = mixed_on(g, x, a), mb = mixed_on(g, x, b);
            if (!ma && !mb) continue;
            if (ma && mb) return false;
            auto& target = ma ? b : a;
            auto& mark = ma ? in_b : in_a;
            for (int y : target)
                if (!g.has_edge(x, y)) return false;  // side must stay a clique
            target.push_back(x);
            mark[x] = 1;
            changed = true;
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return true;
}

}  // namespace detail

inline std::optional<HomogeneousPair> find_homogeneous_pair(const SimpleGraph& g,
                                                            bool require_refinement) {
    for (int a1 = 0; a1 < g.n(); ++a1)
        for (int a2 = a1 + 1; a2 < g.n(); ++a2) {
            if (!g.has_edge(a1, a2)) continue;
            for (int b = 0; b < g.n(); ++b) {
                if (b == a1 || b == a2) continue;
                std::vector<int> a{a1, a2}, bb{b};
                if (!detail::close_homogeneous_pair(g, a, bb)) continue;
                if (!is_homogeneous_pair(g, a, bb)) continue;
                HomogeneousPair pair;
                pair.a_side = a;
                pair.b_side = bb;
                for (int x : a)
                    for (int y : a)
                        for (int z : bb)
                            if (x != y && g.has_edge(x, z) && !g.has_edge(y, z)) {
                                pair.refined = true;
                                pair.witness_a1 = x;
                                pair.witness_a2 = y;
                                pair.witness_b = z;
                            }
                if (require_refinement && !pair.refined) continue;
                return pair;
            }
        }
    return std::nullopt;
}

}  // namespace clawsq
