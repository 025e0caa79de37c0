#pragma once

// Acceptance corpus builders and criterion runners, shared by the acceptance
// binary and the bench subcommand.  Every corpus is seeded and deterministic.

#include "clawsq/coloring.hpp"
#include "clawsq/generators.hpp"
#include "clawsq/graph.hpp"
#include "clawsq/interval.hpp"
#include "clawsq/recognition.hpp"
#include "clawsq/selector.hpp"
#include "clawsq/verifier.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace clawsq {

struct CriterionResult {
    int index = 0;
    std::string label;
    bool pass = false;
    double seconds = 0.0;
    double limit = 0.0;
    std::string detail;
};

inline std::vector<SimpleGraph> corpus_line_graphs(int count, std::uint64_t seed0) {
    static const int sizes[] = {8, 12, 16, 20, 24, 28, 30};
    static const int degs[] = {3, 4, 5, 6};
    std::vector<SimpleGraph> out;
    std::uint64_t seed = seed0;
    while (int(out.size()) < count) {
        int n = sizes[out.size() % 7];
        int dmax = degs[out.size() % 4];
        int mmax = 1 + int(out.size() % 3);
        auto g = line_graph(random_multigraph(n, dmax, mmax, seed++)).graph;
        if (g.n() == 0) continue;
        out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<SimpleGraph> corpus_interval_graphs(int count, std::uint64_t seed0) {
    std::vector<SimpleGraph> out;
    std::uint64_t seed = seed0;
    while (int(out.size()) < count) {
        int n = 6 + int(out.size() % 9);
        int arcs = 4 + int(out.size() % 5);
        out.push_back(realize_interval(random_circular_rep(n, arcs, seed++)));
    }
    return out;
}

inline std::vector<SimpleGraph> corpus_compositions(int count, std::uint64_t seed0) {
    std::vector<SimpleGraph> out;
    std::uint64_t seed = seed0;
    while (int(out.size()) < count) {
        int strips = 3 + int(out.size() % 3);
        auto g = compose_strips(random_scheme(strips, seed++)).graph;
        if (g.n() == 0) continue;
        out.push_back(std::move(g));
    }
    return out;
}

namespace detail {

inline std::vector<int> random_bags(int n, Rng& rng) {
    std::vector<int> sizes(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i) sizes[size_t(i)] = 1 + int(rng.below(3));
    bool widened = false;
    for (int s : sizes) widened |= s >= 2;
    if (!widened) sizes[rng.below(size_t(n))] = 2;
    return sizes;
}

}  // namespace detail

// Clique substitutions into the wheel and the icosahedron; the shells are
// claw-free but not quasi-line and the substitution preserves both.
inline std::vector<SimpleGraph> corpus_nonquasiline(int count, std::uint64_t seed0) {
    std::vector<SimpleGraph> out;
    Rng rng(seed0);
    const SimpleGraph shells[2] = {named_instance("wheel5"), named_instance("icosahedron")};
    while (int(out.size()) < count) {
        const auto& shell = shells[out.size() % 2];
        auto sizes = detail::random_bags(shell.n(), rng);
        auto g = substitute(shell, sizes, SubstituteMode::clique);
        if (is_quasi_line(g).ok) throw std::logic_error("substitution unexpectedly quasi-line");
        out.push_back(std::move(g));
    }
    return out;
}

// Clique substitutions into squared paths and cycles; the results are
// quasi-line but never line graphs, so the Krausz search must reject them.
inline std::vector<SimpleGraph> corpus_quasiline_nonline(int count, std::uint64_t seed0) {
    std::vector<SimpleGraph> out;
    Rng rng(seed0);
    std::vector<SimpleGraph> shells;
    {
        SimpleGraph p6 = SimpleGraph::from_edges(
            6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
        shells.push_back(square(p6));
        SimpleGraph c7 = SimpleGraph::from_edges(
            7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
        shells.push_back(square(c7));
        SimpleGraph c9 = SimpleGraph::from_edges(
            9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
        shells.push_back(square(c9));
    }
    while (int(out.size()) < count) {
        const auto& shell = shells[out.size() % shells.size()];
        auto sizes = detail::random_bags(shell.n(), rng);
        auto g = substitute(shell, sizes, SubstituteMode::clique);
        if (!is_quasi_line(g).ok) throw std::logic_error("substitution lost quasi-line structure");
        if (krausz_partition(g)) throw std::logic_error("substitution unexpectedly a line graph");
        out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<SimpleGraph> corpus_named_clawfree() {
    std::vector<SimpleGraph> out;
    out.push_back(named_instance("wheel5"));
    out.push_back(named_instance("icosahedron"));
    out.push_back(named_instance("petersen_line"));
    out.push_back(square(SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})));
    out.push_back(square(SimpleGraph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}})));
    return out;
}

// The criterion 3 corpus: 120 line graphs, 40 circular interval graphs and
// 40 compositions of strips, all claw-free by construction.
inline std::vector<SimpleGraph> corpus_greedy(int lines = 120, int intervals = 40,
                                              int comps = 40) {
    auto out = corpus_line_graphs(lines, 5000);
    auto iv = corpus_interval_graphs(intervals, 5200);
    auto cp = corpus_compositions(comps, 5400);
    out.insert(out.end(), iv.begin(), iv.end());
    out.insert(out.end(), cp.begin(), cp.end());
    return out;
}

namespace detail {

template <class Fn>
CriterionResult run_criterion(int index, std::string label, double limit, Fn&& body) {
    CriterionResult r;
    r.index = index;
    r.label = std::move(label);
    r.limit = limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [pass, detail_text] = body();
        r.pass = pass;
        r.detail = detail_text;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit) {
        r.pass = false;
        r.detail += " [over the time budget]";
    }
    return r;
}

}  // namespace detail

inline CriterionResult criterion_blowup_edge_table() {
    return detail::run_criterion(1, "blow-up edge count table", 1.0, [] {
        for (int d = 2; d <= 40; ++d)
            if (c5_blowup(d).edge_count() != f_of_delta(d))
                return std::pair{false, "mismatch at d = " + std::to_string(d)};
        return std::pair{true, std::string("|E(C5(d))| = f(d) for every d in [2,40]")};
    });
}

inline CriterionResult criterion_extremal_squares() {
    return detail::run_criterion(2, "blow-up line graph squares are complete", 10.0, [] {
        for (int d = 2; d <= 10; ++d) {
            auto g = line_graph(c5_blowup(d)).graph;
            if (g.n() != f_of_delta(d))
                return std::pair{false, "line graph order off at d = " + std::to_string(d)};
            auto sq = square(g);
            if (sq.edge_count() != 1LL * g.n() * (g.n() - 1) / 2)
                return std::pair{false, "square not complete at d = " + std::to_string(d)};
        }
        auto two = strong_edge_coloring(c5_blowup(2), StrongMode::exact);
        auto three = strong_edge_coloring(c5_blowup(3), StrongMode::exact);
        if (two.colors_used != 5 || three.colors_used != 10)
            return std::pair{false, "exact strong chromatic index off: got " +
                                        std::to_string(two.colors_used) + " and " +
                                        std::to_string(three.colors_used)};
        return std::pair{true,
                         std::string("complete squares for d in [2,10]; exact values 5 and 10")};
    });
}

inline CriterionResult criterion_greedy_bound() {
    return detail::run_criterion(3, "trivial greedy respects the quadratic bound", 60.0, [] {
        auto corpus = corpus_greedy();
        int max_used = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            const auto& g = corpus[i];
            int w = clique_number(g);
            long long cap = w <= 1 ? 1 : 2LL * w * w - 2 * w + 1;
            auto r = greedy_trivial_square_coloring(g);
            if (r.colors_used > cap)
                return std::pair{false, "bound broken on instance " + std::to_string(i)};
            if (!verify_coloring(square(g), r.coloring).ok)
                return std::pair{false, "improper colouring on instance " + std::to_string(i)};
            max_used = std::max(max_used, r.colors_used);
        }
        return std::pair{true, std::to_string(corpus.size()) +
                                   " instances within bound; max colours used " +
                                   std::to_string(max_used)};
    });
}

inline CriterionResult criterion_selectors() {
    return detail::run_criterion(4, "selector realization with validated witnesses", 120.0, [] {
        auto check_nql = [](const SimpleGraph& g) {
            auto w = select_nonquasiline(g);
            return selector_witness_valid(g, w);
        };
        if (!check_nql(named_instance("wheel5"))) return std::pair{false, std::string("wheel5")};
        if (!check_nql(named_instance("icosahedron")))
            return std::pair{false, std::string("icosahedron")};
        auto hard = corpus_nonquasiline(100, 5600);
        for (size_t i = 0; i < hard.size(); ++i)
            if (!check_nql(hard[i]))
                return std::pair{false, "invalid witness on substitution " + std::to_string(i)};

        auto named = substitute(named_instance("c5"), {2, 1, 1, 1, 1}, SubstituteMode::clique);
        auto w0 = select_quasiline(named);
        if (!selector_witness_valid(named, w0))
            return std::pair{false, std::string("invalid witness on the c5 substitution")};
        auto soft = corpus_quasiline_nonline(100, 5800);
        for (size_t i = 0; i < soft.size(); ++i) {
            auto w = select_quasiline(soft[i], true);
            if (!selector_witness_valid(soft[i], w))
                return std::pair{false, "invalid witness on squared shell " + std::to_string(i)};
        }
        return std::pair{true, std::string("202 non-quasi-line and 101 quasi-line selections, "
                                           "all witnesses re-validated")};
    });
}

inline CriterionResult criterion_main_procedure() {
    return detail::run_criterion(5, "main colouring procedure on the full corpus", 120.0, [] {
        auto corpus = corpus_greedy();
        auto nql = corpus_nonquasiline(100, 5600);
        auto soft = corpus_quasiline_nonline(100, 5800);
        auto named = corpus_named_clawfree();
        corpus.insert(corpus.end(), nql.begin(), nql.end());
        corpus.insert(corpus.end(), soft.begin(), soft.end());
        corpus.insert(corpus.end(), named.begin(), named.end());
        long long recolour_instances = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            const auto& g = corpus[i];
            auto rep = main_square_coloring_traced(g);
            if (!verify_coloring(square(g), rep.result.coloring).ok)
                return std::pair{false, "improper colouring on instance " + std::to_string(i)};
            if (rep.result.colors_used > rep.palette)
                return std::pair{false, "palette exceeded on instance " + std::to_string(i)};
            if (!rep.counting_ok)
                return std::pair{false, "counting inequality failed on instance " + std::to_string(i)};
            if (rep.case_trace.find('b') != std::string::npos) {
                recolour_instances += 1;
                if (rep.min_recolor_margin < 0)
                    return std::pair{false, "negative recolour margin on instance " + std::to_string(i)};
            }
        }
        return std::pair{true, std::to_string(corpus.size()) + " instances coloured; " +
                                   std::to_string(recolour_instances) +
                                   " exercised the recolouring case"};
    });
}

inline CriterionResult criterion_second_neighborhood() {
    return detail::run_criterion(6, "second neighbourhood cliques corpus-wide", 60.0, [] {
        auto corpus = corpus_greedy();
        auto nql = corpus_nonquasiline(100, 5600);
        auto soft = corpus_quasiline_nonline(100, 5800);
        auto named = corpus_named_clawfree();
        corpus.insert(corpus.end(), nql.begin(), nql.end());
        corpus.insert(corpus.end(), soft.begin(), soft.end());
        corpus.insert(corpus.end(), named.begin(), named.end());
        for (size_t i = 0; i < corpus.size(); ++i)
            if (!check_second_neighborhood_cliques(corpus[i]))
                return std::pair{false, "violated on instance " + std::to_string(i)};
        return std::pair{true, std::to_string(corpus.size()) + " claw-free instances checked"};
    });
}

inline CriterionResult criterion_interval_bounds() {
    return detail::run_criterion(7, "interval and strip degree bounds", 60.0, [] {
        std::uint64_t seed = 7000;
        for (int i = 0; i < 1000; ++i) {
            auto rep = random_circular_rep(5 + i % 12, 3 + i % 7, seed++);
            if (!check_interval_bounds(rep).ok)
                return std::pair{false, "circular bound broken at seed " + std::to_string(seed - 1)};
        }
        int strips = 0;
        while (strips < 1000) {
            try {
                auto s = make_strip(random_linear_rep(5 + strips % 12, 3 + strips % 6, seed++));
                if (!check_interval_bounds(s).ok)
                    return std::pair{false, "strip bound broken at seed " + std::to_string(seed - 1)};
                strips += 1;
            } catch (const std::invalid_argument&) {
                // degenerate rep whose ends coincide; try the next seed
            }
        }

        IntervalRep pent;
        pent.kind = IntervalRep::Kind::circular;
        pent.period = 5;
        pent.position = {0, 1, 2, 3, 4};
        pent.intervals = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        auto tight = check_interval_bounds(pent);
        if (!(tight.ok && tight.max_square_degree == tight.bound && tight.bound == 4))
            return std::pair{false, std::string("pentagon tightness witness failed")};

        IntervalRep p4;
        p4.kind = IntervalRep::Kind::linear;
        p4.position = {0, 1, 2, 3};
        p4.intervals = {{0, 1}, {1, 2}, {2, 3}};
        auto anchor = check_interval_bounds(make_strip(p4));
        if (!(anchor.ok && anchor.max_square_degree == anchor.bound && anchor.bound == 3))
            return std::pair{false, std::string("path strip tightness witness failed")};
        return std::pair{true, std::string("1000 circular reps and 1000 strips within bounds; "
                                           "both tightness witnesses hit")};
    });
}

inline CriterionResult criterion_degree_identity() {
    return detail::run_criterion(8, "edge degree identity on regular multigraphs", 60.0, [] {
        static const int sizes[] = {8, 10, 12, 14};
        std::uint64_t seed = 8000;
        long long edges_checked = 0;
        for (int i = 0; i < 500; ++i) {
            int d = 2 + i % 9;
            int n = sizes[i % 4];
            auto f = random_regular_multigraph(n, d, seed++);
            auto h = strong_conflict_graph(f);
            auto instances = f.edge_instances();
            for (size_t k = 0; k < instances.size(); ++k) {
                if (edge_square_degree_formula(f, instances[k]) != h.degree(int(k)))
                    return std::pair{false, "identity broken at seed " + std::to_string(seed - 1)};
                edges_checked += 1;
            }
        }
        return std::pair{true, "exact equality on " + std::to_string(edges_checked) +
                                   " edges across 500 regular multigraphs"};
    });
}

inline CriterionResult criterion_sparsity_cases() {
    return detail::run_criterion(9, "sparsity case analysis on regular multigraphs", 300.0, [] {
        static const int sizes[] = {10, 12, 14, 16};
        Config cfg;
        std::uint64_t seed = 9000;
        std::map<int, Rational> max_ratio;
        for (int i = 0; i < 100; ++i) {
            int d = 8 + i % 7;
            int n = sizes[i % 4];
            auto f = random_regular_multigraph(n, d, seed++);
            auto h = strong_conflict_graph(f);
            for (const auto& e : f.edge_instances()) {
                auto r = sparsity_report(f, e, cfg, &h);
                if (r.case_label < 1 || r.case_label > 3)
                    return std::pair{false, "unclassified edge at seed " + std::to_string(seed - 1)};
                if (!r.failures.empty())
                    return std::pair{false, r.failures.front() + " at seed " +
                                                std::to_string(seed - 1)};
                auto it = max_ratio.find(d);
                if (it == max_ratio.end() || it->second < r.ratio) max_ratio[d] = r.ratio;
            }
        }
        std::ostringstream os;
        os << "all edges classified, sub-inequalities exact; max ratio per d vs 35/36:";
        for (const auto& [d, ratio] : max_ratio) os << " d=" << d << ":" << to_string(ratio);
        return std::pair{true, os.str()};
    });
}

inline CriterionResult criterion_exhaustive_extremal() {
    return detail::run_criterion(10, "exhaustive extremal edge counts", 600.0, [] {
        long long total = 0;
        std::map<std::pair<int, int>, long long> equalities;  // (branch, delta) -> count
        std::string failure;
        enumerate_connected_multigraphs(6, 4, 3, true, [&](const Multigraph& f) {
            if (!failure.empty()) return;
            total += 1;
            auto r = check_extremal_edges(f);
            if (!r.applicable || !r.ok) {
                failure = "instance " + std::to_string(total) + " failed its branch";
                return;
            }
            if (r.equality) {
                equalities[{r.branch, r.delta}] += 1;
                if (!r.extremal_match) failure = "unmatched equality at instance " + std::to_string(total);
            }
        });
        if (!failure.empty()) return std::pair{false, failure};
        std::map<std::pair<int, int>, long long> expected{
            {{1, 2}, 3}, {{1, 3}, 10}, {{2, 2}, 12}};
        if (equalities != expected) {
            std::ostringstream os;
            os << "unexpected equality census:";
            for (const auto& [key, cnt] : equalities)
                os << " branch " << key.first << " d " << key.second << " x" << cnt;
            return std::pair{false, os.str()};
        }
        return std::pair{true, std::to_string(total) +
                                   " multigraphs checked; equalities are exactly the complete "
                                   "bipartite and blown-up pentagon instances"};
    });
}

inline CriterionResult criterion_config_feasibility() {
    return detail::run_criterion(11, "constant feasibility as exact rationals", 1.0, [] {
        Config c;
        Rational gain = -rat(2) * c.eps1 + c.eps1 * c.eps1 / rat(2);
        Rational surplus = rat(1) - c.eps1 - c.eps2 / (rat(2) * (rat(1) - c.eps3));
        if (!(gain < rat(0)))
            return std::pair{false, "case 1 gain not negative: " + to_string(gain)};
        if (!(surplus > rat(0)))
            return std::pair{false, "case 3 surplus not positive: " + to_string(surplus)};
        if (!c.feasible()) return std::pair{false, std::string("default config infeasible")};
        return std::pair{true, "gain " + to_string(gain) + " < 0, surplus " + to_string(surplus) +
                                   " > 0"};
    });
}

inline std::vector<CriterionResult> run_all_criteria() {
    std::vector<CriterionResult> out;
    out.push_back(criterion_blowup_edge_table());
    out.push_back(criterion_extremal_squares());
    out.push_back(criterion_greedy_bound());
    out.push_back(criterion_selectors());
    out.push_back(criterion_main_procedure());
    out.push_back(criterion_second_neighborhood());
    out.push_back(criterion_interval_bounds());
    out.push_back(criterion_degree_identity());
    out.push_back(criterion_sparsity_cases());
    out.push_back(criterion_exhaustive_extremal());
    out.push_back(criterion_config_feasibility());
    return out;
}

}  // namespace clawsq
