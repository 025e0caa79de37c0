#pragma once

// Colouring engines for squares: exact chromatic search, the degenerate
// greedy realizing the quadratic bound, the recursive main procedure, and
// strong edge colourings of multigraphs.

#include "clawsq/clique.hpp"
#include "clawsq/graph.hpp"
#include "clawsq/rational.hpp"
#include "clawsq/recognition.hpp"
#include "clawsq/selector.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clawsq {

// Raised when an exact solve would overrun its size or node budget; callers
// can downgrade to a greedy engine, unlike for invalid inputs.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct ColoringResult {
    enum class Method { exact, greedy_trivial, main_procedure };

    Coloring coloring;
    int colors_used = 0;
    Method method = Method::exact;
    std::string bound_expression;
    int bound_value = 0;
};

namespace detail {

// Deterministic DSATUR greedy: most saturated first, lowest index on ties,
// lowest free colour.  Returns a proper colouring of h.
inline Coloring dsatur_greedy(const SimpleGraph& h) {
    int n = h.n();
    Coloring out;
    out.color.assign(n, -1);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (out.color[v] < 0 && (pick < 0 || sat[v] > sat[pick])) pick = v;
        int c = 0;
        while (seen[pick][c]) ++c;
        out.color[pick] = c;
        for (int u : h.neighbors(pick))
            if (out.color[u] < 0 && !seen[u][c]) {
                seen[u][c] = 1;
                ++sat[u];
            }
    }
    return out;
}

// Branch and bound for the chromatic number.  Colours are 1-based inside the
// search; the ceiling caps how many may be used at all.
struct ChromaticSearch {
    const BitGraph& bits;
    int n;
    long long nodes = 0;
    long long budget;
    int ceiling;
    std::vector<int> color;
    std::vector<std::uint64_t> forbidden;  // bit c-1 set when a neighbour wears c
    int best_k;
    std::vector<int> best;

    ChromaticSearch(const BitGraph& b, long long node_budget, int cap)
        : bits(b),
          n(b.n()),
          budget(node_budget),
          ceiling(cap),
          color(b.n(), 0),
          forbidden(b.n(), 0),
          best_k(cap + 1) {}

    void assign(int v, int c, std::vector<int>& touched) {
        color[v] = c;
        for (int u = 0; u < n; ++u)
            if (bits.adjacent(v, u) && color[u] == 0 &&
                !(forbidden[u] >> (c - 1) & 1)) {
                forbidden[u] |= std::uint64_t(1) << (c - 1);
                touched.push_back(u);
            }
    }

    void expand(int used) {
        if (++nodes > budget) throw BudgetExceeded("chromatic search ran out of nodes");
        int pick = -1;
        int pick_sat = -1;
        for (int v = 0; v < n; ++v)
            if (color[v] == 0) {
                int s = std::popcount(forbidden[v]);
                if (s > pick_sat) {
                    pick_sat = s;
                    pick = v;
                }
            }
        if (pick < 0) {
            best_k = used;
            best = color;
            return;
        }
        // the cap is re-read every iteration so improvements made deeper in
        // the tree prune the remaining colours here too
        for (int c = 1; c <= std::min({best_k - 1, used + 1, ceiling}); ++c) {
            if (forbidden[pick] >> (c - 1) & 1) continue;
            std::vector<int> touched;
            assign(pick, c, touched);
            expand(std::max(used, c));
            color[pick] = 0;
            for (int u : touched) forbidden[u] &= ~(std::uint64_t(1) << (c - 1));
        }
    }
};

}  // namespace detail

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

// Exact chromatic number with witness.  Instant when the clique bound meets
// the DSATUR greedy bound; otherwise branch and bound up to 60 vertices and
// a fixed node budget.  A trusted upper bound focuses the first search pass
// and triggers a full re-run when it turns out wrong.
inline ChromaticResult chromatic_exact(const SimpleGraph& h,
                                       std::optional<int> upper_bound_hint = std::nullopt) {
    constexpr long long node_budget = 4'000'000;
    int n = h.n();
    if (n == 0) return {0, Coloring{}};
    auto clique = max_clique(h);
    Coloring greedy = detail::dsatur_greedy(h);
    int greedy_k = greedy.colors_used();
    if (int(clique.size()) == greedy_k) return {greedy_k, greedy};
    if (n > 60)
        throw BudgetExceeded("chromatic search over the size budget: n = " + std::to_string(n));

    BitGraph bits(h);
    // pinning a maximum clique to distinct colours breaks the colour
    // symmetry without losing any proper colouring class
    auto run = [&](int cap) -> std::optional<ChromaticResult> {
        detail::ChromaticSearch search(bits, node_budget, cap);
        std::vector<int> touched;
        for (size_t i = 0; i < clique.size(); ++i) search.assign(clique[i], int(i) + 1, touched);
        if (int(clique.size()) <= cap) search.expand(int(clique.size()));
        if (search.best.empty()) return std::nullopt;
        Coloring out;
        out.color.resize(n);
        for (int v = 0; v < n; ++v) out.color[v] = search.best[v] - 1;
        return ChromaticResult{search.best_k, out};
    };

    int first_cap = greedy_k - 1;
    if (upper_bound_hint && *upper_bound_hint < first_cap) first_cap = *upper_bound_hint;
    if (auto found = run(first_cap)) return *found;
    if (first_cap < greedy_k - 1)
        if (auto found = run(greedy_k - 1)) return *found;
    return {greedy_k, greedy};
}

namespace detail {

// Colours h by removing a minimum degree vertex until nothing is left, then
// colouring back greedily; writes through to the master array via to_orig.
inline void degeneracy_greedy(const SimpleGraph& h, const std::vector<int>& to_orig,
                              std::vector<int>& color) {
    int m = h.n();
    std::vector<char> gone(m, 0);
    std::vector<int> deg(m);
    for (int v = 0; v < m; ++v) deg[v] = h.degree(v);
    std::vector<int> order;
    order.reserve(m);
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int v = 0; v < m; ++v)
            if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        gone[pick] = 1;
        order.push_back(pick);
        for (int u : h.neighbors(pick))
            if (!gone[u]) --deg[u];
    }
    for (int i = m - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<char> used(m + 1, 0);
        for (int u : h.neighbors(v)) {
            int c = color[to_orig[u]];
            if (c >= 0 && c <= m) used[c] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        color[to_orig[v]] = c;
    }
}

// The quadratic-bound recursion: quasi-line parts are handled by degeneracy
// greedy on the square taken as a plain graph (so adjacencies through
// removed vertices survive); otherwise the selector's vertex comes out, the
// rest is coloured, and the vertex is coloured back last.  Its neighbourhood
// stays a clique in the square of the rest, which keeps re-insertion proper.
inline void trivial_square_rec(const SimpleGraph& g, const std::vector<int>& to_orig,
                               std::vector<int>& color) {
    if (g.n() == 0) return;
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto& comp : comps) {
            auto sub = induced(g, comp);
            std::vector<int> sub_orig;
            sub_orig.reserve(sub.to_original.size());
            for (int v : sub.to_original) sub_orig.push_back(to_orig[v]);
            trivial_square_rec(sub.graph, sub_orig, color);
        }
        return;
    }
    if (is_quasi_line(g).ok) {
        degeneracy_greedy(square(g), to_orig, color);
        return;
    }
    auto w = select_nonquasiline(g);
    auto rem = delete_vertex(g, w.v);
    std::vector<int> rem_orig;
    rem_orig.reserve(rem.to_original.size());
    for (int v : rem.to_original) rem_orig.push_back(to_orig[v]);
    trivial_square_rec(rem.graph, rem_orig, color);
    auto sq = square(g);
    std::vector<char> used(g.n() + 1, 0);
    for (int u : sq.neighbors(w.v)) {
        int c = color[to_orig[u]];
        if (c >= 0 && c <= g.n()) used[c] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    color[to_orig[w.v]] = c;
}

}  // namespace detail

// Proper colouring of square(g) within max(3, 2w^2-2w+1) colours.
inline ColoringResult greedy_trivial_square_coloring(const SimpleGraph& g) {
    if (find_claw(g)) throw std::invalid_argument("input has a claw");
    int w = clique_number(g);
    int bound = std::max(3, 2 * w * w - 2 * w + 1);
    ColoringResult out;
    out.coloring.color.assign(g.n(), -1);
    std::vector<int> identity(g.n());
    std::iota(identity.begin(), identity.end(), 0);
    detail::trivial_square_rec(g, identity, out.coloring.color);
    out.colors_used = g.n() == 0 ? 0 : out.coloring.colors_used();
    out.method = ColoringResult::Method::greedy_trivial;
    out.bound_expression = "max(3, 2w^2-2w+1), w = " + std::to_string(w);
    out.bound_value = bound;
    return out;
}

struct MainColoringReport {
    ColoringResult result;
    std::string case_trace;         // one letter per recursion level: a, b or c
    int palette = 0;                // hard palette every greedy step asserts against
    int omega = 0;
    int epsilon_palette = 0;        // floor((2 - eps) * omega^2)
    bool epsilon_palette_achieved = false;
    long long min_recolor_margin = LLONG_MAX;  // slack low-water mark over recolour steps
    bool counting_ok = true;
};

namespace detail {

struct MainRecursion {
    int palette;
    std::vector<int>& color;
    MainColoringReport& report;

    // lowest palette colour not worn by a coloured square-neighbour of v,
    // plus the count of free colours for the margin bookkeeping
    std::pair<int, int> free_colour(const SimpleGraph& sq, const std::vector<int>& to_orig,
                                    int v) const {
        std::vector<char> used(palette, 0);
        int distinct = 0;
        for (int u : sq.neighbors(v)) {
            int c = color[to_orig[u]];
            if (c >= 0 && !used[c]) {
                used[c] = 1;
                ++distinct;
            }
        }
        int c = 0;
        while (c < palette && used[c]) ++c;
        if (c == palette)
            throw std::logic_error("no free colour left in the quadratic palette");
        return {c, palette - distinct};
    }

    void run(const SimpleGraph& g, const std::vector<int>& to_orig) {
        auto comps = connected_components(g);
        if (comps.size() > 1) {
            for (const auto& comp : comps) {
                auto sub = induced(g, comp);
                std::vector<int> sub_orig;
                sub_orig.reserve(sub.to_original.size());
                for (int v : sub.to_original) sub_orig.push_back(to_orig[v]);
                run_connected(sub.graph, sub_orig);
            }
            return;
        }
        run_connected(g, to_orig);
    }

    void run_connected(const SimpleGraph& g, const std::vector<int>& to_orig) {
        if (g.n() == 0) return;
        if (krausz_partition(g).has_value()) {
            report.case_trace += 'a';
            base_case(g, to_orig);
            return;
        }
        if (is_quasi_line(g).ok) {
            report.case_trace += 'b';
            recolour_case(g, to_orig);
            return;
        }
        report.case_trace += 'c';
        delete_case(g, to_orig);
    }

    void base_case(const SimpleGraph& g, const std::vector<int>& to_orig) {
        auto sq = square(g);
        Coloring base;
        try {
            base = chromatic_exact(sq).coloring;
        } catch (const BudgetExceeded&) {
            base = greedy_trivial_square_coloring(g).coloring;
        }
        if (base.colors_used() > palette)
            throw std::logic_error("base engine overran the quadratic palette");
        for (int v = 0; v < g.n(); ++v) color[to_orig[v]] = base.color[v];
    }

    void recolour_case(const SimpleGraph& g, const std::vector<int>& to_orig) {
        auto w = select_quasiline(g);
        auto rem = delete_vertex(g, w.v);
        std::vector<int> rem_orig;
        rem_orig.reserve(rem.to_original.size());
        for (int v : rem.to_original) rem_orig.push_back(to_orig[v]);
        run(rem.graph, rem_orig);
        for (int u : w.s) color[to_orig[u]] = -1;
        auto sq = square(g);
        int total = int(w.s.size());
        int step = 0;
        for (int u : w.s) {
            ++step;
            auto [c, avail] = free_colour(sq, to_orig, u);
            // one slot per not-yet-recoloured member and one for u itself,
            // everything else of u's square neighbourhood may be taken
            long long predicted = palette - (1LL * w.omega * w.omega + w.omega) + (total - step) + 1;
            long long margin = avail - predicted;
            report.min_recolor_margin = std::min(report.min_recolor_margin, margin);
            if (margin < 0) report.counting_ok = false;
            color[to_orig[u]] = c;
        }
        color[to_orig[w.v]] = free_colour(sq, to_orig, w.v).first;
    }

    void delete_case(const SimpleGraph& g, const std::vector<int>& to_orig) {
        auto w = select_nonquasiline(g);
        auto rem = delete_vertex(g, w.v);
        std::vector<int> rem_orig;
        rem_orig.reserve(rem.to_original.size());
        for (int v : rem.to_original) rem_orig.push_back(to_orig[v]);
        run(rem.graph, rem_orig);
        auto sq = square(g);
        color[to_orig[w.v]] = free_colour(sq, to_orig, w.v).first;
    }
};

}  // namespace detail

// The recursive square-colouring procedure: line graphs of multigraphs go to
// the base engine (exact when affordable, degenerate greedy otherwise),
// other quasi-line graphs lose a vertex and recolour the bounded part of its
// neighbourhood, everything else just loses a vertex.  Colours always fit
// the quadratic palette; the report records whether the (2-eps)w^2 palette
// was met and how much recolouring slack was left.
inline MainColoringReport main_square_coloring_traced(const SimpleGraph& g,
                                                      const Rational& eps = rat(1, 36)) {
    if (find_claw(g)) throw std::invalid_argument("input has a claw");
    if (eps <= rat(0) || eps > rat(3, 4))
        throw std::invalid_argument("epsilon must lie in (0, 3/4]");
    int w = clique_number(g);
    MainColoringReport report;
    report.omega = w;
    report.palette = std::max(3, 2 * w * w - 2 * w + 1);
    report.epsilon_palette = int(floor_of((rat(2) - eps) * rat(1LL * w * w)));
    std::vector<int> colors(g.n(), -1);
    std::vector<int> identity(g.n());
    std::iota(identity.begin(), identity.end(), 0);
    detail::MainRecursion rec{report.palette, colors, report};
    rec.run(g, identity);
    ColoringResult& res = report.result;
    res.coloring.color = std::move(colors);
    res.colors_used = g.n() == 0 ? 0 : res.coloring.colors_used();
    res.method = ColoringResult::Method::main_procedure;
    res.bound_expression = "max(3, 2w^2-2w+1), w = " + std::to_string(w);
    res.bound_value = report.palette;
    report.epsilon_palette_achieved = res.colors_used <= report.epsilon_palette;
    return report;
}

inline ColoringResult main_square_coloring(const SimpleGraph& g,
                                           const Rational& eps = rat(1, 36)) {
    return main_square_coloring_traced(g, eps).result;
}

// Conflict graph for strong edge colouring, built straight from the
// multigraph: edge instances clash when they share an endpoint or some edge
// joins their endpoint pairs.  Kept independent of square(line_graph(f)) so
// the two routes can be compared.
inline SimpleGraph strong_conflict_graph(const Multigraph& f) {
    auto inst = f.edge_instances();
    int m = int(inst.size());
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& a = inst[i];
            const auto& b = inst[j];
            bool clash = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (!clash)
                clash = f.has_edge(a.u, b.u) || f.has_edge(a.u, b.v) ||
                        f.has_edge(a.v, b.u) || f.has_edge(a.v, b.v);
            if (clash) edges.emplace_back(i, j);
        }
    return SimpleGraph::from_edges(m, edges);
}

enum class StrongMode { exact, greedy };

// Colours edge instances of f so that edges within distance one differ.
inline ColoringResult strong_edge_coloring(const Multigraph& f, StrongMode mode) {
    auto h = strong_conflict_graph(f);
    ColoringResult out;
    if (mode == StrongMode::exact) {
        auto ex = chromatic_exact(h);
        out.coloring = ex.coloring;
        out.colors_used = ex.chi;
        out.method = ColoringResult::Method::exact;
        out.bound_expression = "chi = " + std::to_string(ex.chi);
        out.bound_value = ex.chi;
        return out;
    }
    int d = f.max_degree();
    int bound = std::max(1, 2 * d * d - 2 * d + 1);
    out.coloring.color.assign(h.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        std::vector<char> used(h.n() + 1, 0);
        for (int u : h.neighbors(v)) {
            int c = out.coloring.color[u];
            if (c >= 0) used[c] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        out.coloring.color[v] = c;
    }
    out.colors_used = h.n() == 0 ? 0 : out.coloring.colors_used();
    if (out.colors_used > bound)
        throw std::logic_error("greedy strong colouring exceeded the quadratic bound");
    out.method = ColoringResult::Method::greedy_trivial;
    out.bound_expression = "2d^2-2d+1, d = " + std::to_string(d);
    out.bound_value = bound;
    return out;
}

struct ColoringCheck {
    bool ok = false;
    Edge violating{-1, -1};
};

// True when no edge of h joins two equal colours; the first offending edge
// rides along otherwise.
inline ColoringCheck verify_coloring(const SimpleGraph& h, const Coloring& c) {
    if (int(c.color.size()) != h.n())
        throw std::invalid_argument("colouring size does not match the graph");
    if (!c.total()) throw std::invalid_argument("colouring is partial");
    for (auto [u, v] : h.edges())
        if (c.color[u] == c.color[v]) return {false, {u, v}};
    return {true, {-1, -1}};
}

}  // namespace clawsq
