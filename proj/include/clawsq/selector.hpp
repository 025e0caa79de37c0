#pragma once

// Constructive selectors behind the square-colouring recursion: find a vertex
// (and neighbour set) whose removal keeps the remainder safely recolourable.
// Every claimed bound is recorded in the witness for independent re-checking.

#include "clawsq/clique.hpp"
#include "clawsq/graph.hpp"
#include "clawsq/io.hpp"
#include "clawsq/rational.hpp"
#include "clawsq/recognition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace clawsq {

// A failed scan would contradict the structure of claw-free graphs, so it is
// treated as an implementation-bug signal; the instance rides along in file
// format for triage.
class SelectorExhausted : public std::runtime_error {
public:
    SelectorExhausted(const std::string& which, const SimpleGraph& g)
        : std::runtime_error(which + "; offending instance:\n" + to_text(g)) {}
};

struct SelectorWitness {
    enum class Kind { non_quasi_line, quasi_line };
    Kind kind;
    int v;
    std::vector<int> s;                 // empty in the non_quasi_line variant
    int omega;
    int v_square_degree;
    std::vector<int> s_square_degrees;  // aligned with s
    std::vector<int> residual_clique;   // verified clique in square(G\v): N(v), or N(v)\S
};

namespace detail {

inline bool clique_in_square_without(const SimpleGraph& g, int v, const std::vector<int>& set) {
    auto rem = delete_vertex(g, v);
    auto sq = square(rem.graph);
    std::vector<int> mapped;
    mapped.reserve(set.size());
    for (int u : set) mapped.push_back(u < v ? u : u - 1);
    return is_clique(sq, mapped);
}

}  // namespace detail

// Finds v with deg two-step(v) <= w^2 + (w+1)/2 whose neighbourhood stays a
// clique in the square of the deleted graph.  Vertices whose neighbourhood
// needs more than two cliques are scanned first, then the rest, lowest index
// first within each group.
inline SelectorWitness select_nonquasiline(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("selector needs a connected graph");
    if (find_claw(g)) throw std::invalid_argument("input has a claw");
    if (is_quasi_line(g).ok)
        throw std::invalid_argument("input is quasi-line; wrong selector");
    SimpleGraph sq = square(g);
    int w = clique_number(g);
    std::vector<int> scan;
    std::vector<int> covered;
    for (int v = 0; v < g.n(); ++v) {
        auto nbhd = induced(g, g.neighbors(v));
        (two_clique_cover(nbhd.graph) ? covered : scan).push_back(v);
    }
    scan.insert(scan.end(), covered.begin(), covered.end());
    // comparing 2*deg against 2w^2+w+1 keeps the half-integral bound exact
    long long cap2 = 2LL * w * w + w + 1;
    for (int v : scan) {
        int deg = sq.degree(v);
        if (2LL * deg > cap2) continue;
        if (!detail::clique_in_square_without(g, v, g.neighbors(v))) continue;
        return {SelectorWitness::Kind::non_quasi_line, v, {}, w, deg, {}, g.neighbors(v)};
    }
    throw SelectorExhausted("no vertex meets the non-quasi-line degree and clique conditions", g);
}

// Finds v plus the maximal S = {u in N(v) : deg two-step(u) <= w^2+w} such
// that v obeys the same bound and N(v)\S is a clique in the square of the
// deleted graph.  Taking S maximal only shrinks the set that must be a
// clique, so no smaller S needs to be tried.  When require_krausz_failure is
// set the op refuses inputs that are line graphs of multigraphs.
inline SelectorWitness select_quasiline(const SimpleGraph& g, bool require_krausz_failure = false) {
    if (!is_connected(g)) throw std::invalid_argument("selector needs a connected graph");
    if (!is_quasi_line(g).ok) throw std::invalid_argument("input is not quasi-line");
    if (require_krausz_failure && krausz_partition(g))
        throw std::invalid_argument("input is a line graph; nothing to select");
    SimpleGraph sq = square(g);
    int w = clique_number(g);
    long long cap = 1LL * w * w + w;
    for (int v = 0; v < g.n(); ++v) {
        if (sq.degree(v) > cap) continue;
        std::vector<int> s;
        std::vector<int> rest;
        for (int u : g.neighbors(v)) (sq.degree(u) <= cap ? s : rest).push_back(u);
        if (!detail::clique_in_square_without(g, v, rest)) continue;
        std::vector<int> s_degs;
        s_degs.reserve(s.size());
        for (int u : s) s_degs.push_back(sq.degree(u));
        return {SelectorWitness::Kind::quasi_line, v, s, w, sq.degree(v), s_degs, rest};
    }
    throw SelectorExhausted("no vertex meets the quasi-line degree and clique conditions", g);
}

// Re-derives every recorded value of a witness from scratch.
inline bool selector_witness_valid(const SimpleGraph& g, const SelectorWitness& w) {
    if (w.v < 0 || w.v >= g.n()) return false;
    if (w.omega != clique_number(g)) return false;
    SimpleGraph sq = square(g);
    if (w.v_square_degree != sq.degree(w.v)) return false;
    const auto& nb = g.neighbors(w.v);
    if (w.kind == SelectorWitness::Kind::non_quasi_line) {
        if (!w.s.empty() || !w.s_square_degrees.empty()) return false;
        if (w.residual_clique != nb) return false;
        if (2LL * w.v_square_degree > 2LL * w.omega * w.omega + w.omega + 1) return false;
    } else {
        long long cap = 1LL * w.omega * w.omega + w.omega;
        if (w.v_square_degree > cap) return false;
        if (w.s.size() != w.s_square_degrees.size()) return false;
        if (!std::is_sorted(w.s.begin(), w.s.end())) return false;
        std::vector<int> rest;
        for (int u : nb)
            if (!std::binary_search(w.s.begin(), w.s.end(), u)) rest.push_back(u);
        if (w.residual_clique != rest) return false;
        for (size_t i = 0; i < w.s.size(); ++i) {
            int u = w.s[i];
            if (!std::binary_search(nb.begin(), nb.end(), u)) return false;
            if (sq.degree(u) != w.s_square_degrees[i]) return false;
            if (w.s_square_degrees[i] > cap) return false;
        }
    }
    return detail::clique_in_square_without(g, w.v, w.residual_clique);
}

// Counting diagnostic for the square degree of one vertex: every vertex of
// the second neighbourhood sends at least k edges back into N(v), and each
// neighbour of v absorbs at most omega-1 of them, giving
// deg two-step(v) <= (1 + (omega-1)/k) * deg(v).
struct TwoPathDiagnostic {
    int v;
    int k;      // fewest back-edges into N(v) over the second neighbourhood
    int u_min;  // vertex attaining k
    int w;      // lowest common neighbour of u_min and v
    std::vector<int> x;   // remaining common neighbours of u_min and v
    std::vector<int> c1;  // neighbours of w inside N(v)\x, plus w itself
    std::vector<int> c2;  // the rest of N(v)
    Rational bound;
};

inline TwoPathDiagnostic two_path_diagnostic(const SimpleGraph& g, int v) {
    if (find_claw(g)) throw std::invalid_argument("input has a claw");
    auto n2 = second_neighborhood(g, v);
    if (n2.empty()) throw std::invalid_argument("second neighbourhood of v is empty");
    const auto& nb = g.neighbors(v);
    int k = -1;
    int u_min = -1;
    for (int u : n2) {
        int common = 0;
        for (int t : g.neighbors(u))
            if (std::binary_search(nb.begin(), nb.end(), t)) ++common;
        if (k < 0 || common < k) {
            k = common;
            u_min = u;
        }
    }
    std::vector<int> meet;
    for (int t : g.neighbors(u_min))
        if (std::binary_search(nb.begin(), nb.end(), t)) meet.push_back(t);
    int w = meet.front();
    std::vector<int> x(meet.begin() + 1, meet.end());
    std::vector<int> c1{w};
    std::vector<int> c2;
    for (int t : nb) {
        if (t == w || std::binary_search(x.begin(), x.end(), t)) continue;
        (g.has_edge(t, w) ? c1 : c2).push_back(t);
    }
    std::sort(c1.begin(), c1.end());
    int omega = clique_number(g);
    TwoPathDiagnostic d{v,  k,  u_min, w, x, c1, c2,
                        rat(1LL * (k + omega - 1) * g.degree(v), k)};
    if (!is_clique(g, d.c1) || !is_clique(g, d.c2))
        throw std::logic_error("two-path partition produced a non-clique on claw-free input");
    if (rat(square_degree(g, v)) > d.bound)
        throw std::logic_error("two-path degree bound violated");
    return d;
}

}  // namespace clawsq
