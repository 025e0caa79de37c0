#include "clawsq/coloring.hpp"
#include "clawsq/generators.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <climits>
#include <vector>

using namespace clawsq;
using test_helpers::complete;
using test_helpers::cycle;
using test_helpers::path;
using test_helpers::wheel5;

namespace {

bool brute_colorable(const SimpleGraph& g, int v, std::vector<int>& col, int k) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && col[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[v] = c;
        if (brute_colorable(g, v + 1, col, k)) return true;
    }
    col[v] = -1;
    return false;
}

int chromatic_brute(const SimpleGraph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.n(), -1);
        if (brute_colorable(g, 0, col, k)) return k;
    }
}

Multigraph triple_edge() { return Multigraph::from_edge_list(2, {{0, 1, 3}}); }

}  // namespace

TEST_CASE("exact chromatic numbers on fixed squares") {
    auto k5 = chromatic_exact(square(cycle(5)));
    CHECK(k5.chi == 5);
    CHECK(verify_coloring(square(cycle(5)), k5.coloring).ok);

    CHECK(chromatic_exact(square(line_graph(c5_blowup(2)).graph)).chi == 5);
    CHECK(chromatic_exact(square(line_graph(c5_blowup(3)).graph)).chi == 10);

    CHECK(chromatic_exact(cycle(5)).chi == 3);
    CHECK(chromatic_exact(underlying_simple(complete_bipartite(3, 3))).chi == 2);
    CHECK(chromatic_exact(SimpleGraph(4)).chi == 1);
    CHECK(chromatic_exact(SimpleGraph()).chi == 0);
}

TEST_CASE("exact chromatic number agrees with brute force") {
    for (unsigned seed = 0; seed < 25; ++seed) {
        auto g = underlying_simple(test_helpers::random_multigraph_adhoc(9, 22, 1, 50 + seed));
        INFO("seed " << seed);
        auto res = chromatic_exact(g);
        CHECK(res.chi == chromatic_brute(g));
        CHECK(verify_coloring(g, res.coloring).ok);
    }
}

TEST_CASE("exact chromatic search honours hints and budgets") {
    CHECK(chromatic_exact(cycle(9), 3).chi == 3);
    // a hint below the truth burns the first pass and triggers the full one
    CHECK(chromatic_exact(cycle(9), 2).chi == 3);
    CHECK(chromatic_exact(cycle(9), 8).chi == 3);

    // complete inputs collapse to the clique bound at any size
    CHECK(chromatic_exact(complete(70)).chi == 70);

    CHECK_THROWS_AS(chromatic_exact(cycle(61)), BudgetExceeded);
}

TEST_CASE("degenerate greedy colours the pentagon square tightly") {
    auto res = greedy_trivial_square_coloring(cycle(5));
    CHECK(res.colors_used == 5);
    CHECK(res.bound_value == 5);
    CHECK(res.method == ColoringResult::Method::greedy_trivial);
    CHECK(verify_coloring(square(cycle(5)), res.coloring).ok);
}

TEST_CASE("degenerate greedy on small fixed graphs") {
    auto k4 = greedy_trivial_square_coloring(complete(4));
    CHECK(k4.colors_used == 4);
    CHECK(k4.bound_value == 25);
    CHECK(verify_coloring(square(complete(4)), k4.coloring).ok);

    auto lp = greedy_trivial_square_coloring(named_instance("petersen_line"));
    CHECK(lp.colors_used <= 13);
    CHECK(lp.bound_value == 13);
    CHECK(verify_coloring(square(named_instance("petersen_line")), lp.coloring).ok);

    auto w5 = greedy_trivial_square_coloring(wheel5());
    CHECK(w5.colors_used == 6);
    CHECK(verify_coloring(square(wheel5()), w5.coloring).ok);

    auto ico = greedy_trivial_square_coloring(named_instance("icosahedron"));
    CHECK(ico.colors_used <= 13);
    CHECK(verify_coloring(square(named_instance("icosahedron")), ico.coloring).ok);

    CHECK_THROWS_AS(greedy_trivial_square_coloring(
                        SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})),
                    std::invalid_argument);

    auto empty = greedy_trivial_square_coloring(SimpleGraph());
    CHECK(empty.colors_used == 0);
}

TEST_CASE("degenerate greedy respects the quadratic bound across the corpus") {
    std::vector<SimpleGraph> corpus;
    for (unsigned seed = 0; seed < 8; ++seed)
        corpus.push_back(line_graph(random_multigraph(7, 4, 2, 600 + seed)).graph);
    for (unsigned seed = 0; seed < 5; ++seed)
        corpus.push_back(compose_strips(random_scheme(4, 700 + seed)).graph);
    for (unsigned seed = 0; seed < 5; ++seed) {
        Rng rng(800 + seed);
        std::vector<int> sizes(12);
        for (auto& s : sizes) s = 1 + rng.below(2);
        corpus.push_back(substitute(named_instance("icosahedron"), sizes, SubstituteMode::clique));
    }
    corpus.push_back(SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
    for (const auto& g : corpus) {
        auto res = greedy_trivial_square_coloring(g);
        INFO("n " << g.n());
        CHECK(verify_coloring(square(g), res.coloring).ok);
        CHECK(res.colors_used <= res.bound_value);
    }
}

TEST_CASE("main procedure on the wheel peels the hub then solves the rim") {
    auto rep = main_square_coloring_traced(wheel5());
    CHECK(rep.case_trace == "ca");
    CHECK(rep.result.colors_used == 6);
    CHECK(rep.omega == 3);
    CHECK(rep.palette == 13);
    CHECK(rep.epsilon_palette == 17);
    CHECK(rep.epsilon_palette_achieved);
    CHECK(rep.counting_ok);
    CHECK(rep.min_recolor_margin == LLONG_MAX);
    CHECK(verify_coloring(square(wheel5()), rep.result.coloring).ok);
}

TEST_CASE("main procedure recognises a doubled pentagon as a line graph") {
    auto g = substitute(cycle(5), {2, 1, 1, 1, 1}, SubstituteMode::clique);
    auto rep = main_square_coloring_traced(g);
    CHECK(rep.case_trace == "a");
    CHECK(rep.result.colors_used == 6);
    CHECK(verify_coloring(square(g), rep.result.coloring).ok);
}

TEST_CASE("main procedure base case on a doubled-edge pentagon line graph") {
    auto g = line_graph(c5_blowup(2)).graph;
    auto rep = main_square_coloring_traced(g);
    CHECK(rep.case_trace == "a");
    CHECK(rep.result.colors_used == 5);
    CHECK(verify_coloring(square(g), rep.result.coloring).ok);
}

TEST_CASE("main procedure recolours a squared path") {
    auto g = square(path(6));
    auto rep = main_square_coloring_traced(g);
    CHECK(rep.case_trace == "ba");
    CHECK(rep.result.colors_used == 5);
    CHECK(rep.counting_ok);
    CHECK(rep.min_recolor_margin >= 0);
    CHECK(rep.min_recolor_margin != LLONG_MAX);
    CHECK(verify_coloring(square(g), rep.result.coloring).ok);
}

TEST_CASE("main procedure on a squared cycle starts with a recolour step") {
    auto g = square(cycle(7));
    auto rep = main_square_coloring_traced(g);
    REQUIRE_FALSE(rep.case_trace.empty());
    CHECK(rep.case_trace[0] == 'b');
    CHECK(rep.counting_ok);
    CHECK(verify_coloring(square(g), rep.result.coloring).ok);
}

TEST_CASE("main procedure handles large complete base cases") {
    auto g = line_graph(c5_blowup(6)).graph;
    auto rep = main_square_coloring_traced(g);
    CHECK(rep.case_trace == "a");
    CHECK(rep.result.colors_used == 45);
    CHECK(rep.omega == 6);
    CHECK(rep.palette == 61);
    CHECK(rep.epsilon_palette_achieved);
    CHECK(verify_coloring(square(g), rep.result.coloring).ok);
}

TEST_CASE("main procedure validates epsilon and claw-freeness") {
    CHECK_THROWS_AS(main_square_coloring(cycle(5), rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(main_square_coloring(cycle(5), rat(-1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(main_square_coloring(cycle(5), rat(7, 8)), std::invalid_argument);
    CHECK_THROWS_AS(main_square_coloring(SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})),
                    std::invalid_argument);
    CHECK(main_square_coloring(cycle(5), rat(3, 4)).colors_used == 5);
    CHECK(main_square_coloring(SimpleGraph()).colors_used == 0);
}

TEST_CASE("main procedure across a mixed corpus") {
    std::vector<SimpleGraph> corpus;
    corpus.push_back(named_instance("icosahedron"));
    corpus.push_back(square(cycle(9)));
    for (unsigned seed = 0; seed < 6; ++seed)
        corpus.push_back(line_graph(random_multigraph(7, 4, 2, 230 + seed)).graph);
    for (unsigned seed = 0; seed < 4; ++seed)
        corpus.push_back(compose_strips(random_scheme(3, 330 + seed)).graph);
    for (unsigned seed = 0; seed < 4; ++seed) {
        Rng rng(430 + seed);
        std::vector<int> sizes(6);
        for (auto& s : sizes) s = 1 + rng.below(3);
        corpus.push_back(substitute(square(path(6)), sizes, SubstituteMode::clique));
    }
    for (const auto& g : corpus) {
        auto rep = main_square_coloring_traced(g);
        INFO("n " << g.n() << " trace " << rep.case_trace);
        CHECK(verify_coloring(square(g), rep.result.coloring).ok);
        CHECK(rep.result.colors_used <= rep.palette);
        CHECK(rep.counting_ok);
        if (rep.case_trace.find('b') != std::string::npos)
            CHECK(rep.min_recolor_margin >= 0);
    }
}

TEST_CASE("palette arithmetic holds for every clique number up to a thousand") {
    // with eps = 3/4 the floor of (2-eps) w^2 still dominates both recursion
    // degree bounds from clique number six upwards
    for (long long w = 6; w <= 1000; ++w) {
        long long shrunk = floor_of(rat(5 * w * w, 4));
        CHECK(w * w + w + 1 <= shrunk);
        CHECK(2 * w * w + w + 1 <= 2 * shrunk);
    }
}

TEST_CASE("strong edge colouring of fixed multigraphs") {
    auto c5 = strong_edge_coloring(as_multigraph(cycle(5)), StrongMode::exact);
    CHECK(c5.colors_used == 5);
    CHECK(c5.method == ColoringResult::Method::exact);

    CHECK(strong_edge_coloring(triple_edge(), StrongMode::exact).colors_used == 3);
    CHECK(strong_edge_coloring(as_multigraph(cycle(4)), StrongMode::exact).colors_used == 4);
    CHECK(strong_edge_coloring(complete_bipartite(3, 3), StrongMode::exact).colors_used == 9);
    CHECK(strong_edge_coloring(Multigraph(3), StrongMode::exact).colors_used == 0);

    auto greedy = strong_edge_coloring(as_multigraph(cycle(5)), StrongMode::greedy);
    CHECK(greedy.colors_used == 5);
    CHECK(greedy.bound_value == 5);
}

TEST_CASE("strong conflict graph equals the squared line graph") {
    std::vector<Multigraph> corpus;
    corpus.push_back(triple_edge());
    corpus.push_back(c5_blowup(3));
    for (unsigned seed = 0; seed < 12; ++seed)
        corpus.push_back(random_multigraph(7, 4, 3, 1000 + seed));
    for (const auto& f : corpus) {
        auto direct = strong_conflict_graph(f);
        auto via_line = square(line_graph(f).graph);
        CHECK(direct == via_line);
    }
}

TEST_CASE("strong edge colouring greedy stays within the quadratic bound") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        auto f = random_multigraph(8, 5, 3, 2000 + seed);
        auto res = strong_edge_coloring(f, StrongMode::greedy);
        INFO("seed " << seed << " edges " << f.edge_count());
        CHECK(res.colors_used <= res.bound_value);
        CHECK(verify_coloring(strong_conflict_graph(f), res.coloring).ok);
    }
}

TEST_CASE("strong edge colouring budget error leaves greedy available") {
    auto big = as_multigraph(cycle(71));
    CHECK_THROWS_AS(strong_edge_coloring(big, StrongMode::exact), BudgetExceeded);
    auto greedy = strong_edge_coloring(big, StrongMode::greedy);
    CHECK(greedy.colors_used <= greedy.bound_value);
    CHECK(verify_coloring(strong_conflict_graph(big), greedy.coloring).ok);
}

TEST_CASE("exact never beats greedy upwards") {
    for (unsigned seed = 0; seed < 8; ++seed) {
        auto g = line_graph(random_multigraph(6, 4, 2, 3000 + seed)).graph;
        auto greedy = greedy_trivial_square_coloring(g);
        try {
            auto exact = chromatic_exact(square(g));
            INFO("seed " << seed);
            CHECK(exact.chi <= greedy.colors_used);
            CHECK(main_square_coloring(g).colors_used >= exact.chi);
        } catch (const BudgetExceeded&) {
            continue;
        }
    }
}

TEST_CASE("colouring verification reports the first bad edge") {
    Coloring good{{0, 1, 2}};
    CHECK(verify_coloring(complete(3), good).ok);

    Coloring repeat{{0, 1, 1}};
    auto check = verify_coloring(complete(3), repeat);
    CHECK_FALSE(check.ok);
    CHECK(check.violating == Edge{1, 2});

    Coloring flat{{0, 0, 0}};
    CHECK(verify_coloring(SimpleGraph(3), flat).ok);

    Coloring partial{{0, -1, 2}};
    CHECK_THROWS_AS(verify_coloring(complete(3), partial), std::invalid_argument);
    Coloring short_one{{0, 1}};
    CHECK_THROWS_AS(verify_coloring(complete(3), short_one), std::invalid_argument);
}
