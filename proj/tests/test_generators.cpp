#include "clawsq/generators.hpp"

#include "clawsq/io.hpp"
#include "clawsq/recognition.hpp"
#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <set>
#include <sstream>

using namespace clawsq;
using test_helpers::cycle;

namespace {

bool has_triangle(const SimpleGraph& g) {
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return true;
    return false;
}

// no pair of disjoint edges without any connecting edge
bool is_2k2_free_oracle(const SimpleGraph& g) {
    auto es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) &&
                !g.has_edge(b, d))
                return false;
        }
    return true;
}

}  // namespace

TEST_CASE("edge counts of five-cycle blow-ups") {
    CHECK(f_of_delta(2) == 5);
    CHECK(f_of_delta(3) == 10);
    CHECK(f_of_delta(4) == 20);
    CHECK(f_of_delta(5) == 29);
    CHECK(f_of_delta(6) == 45);
    CHECK_THROWS_AS(f_of_delta(1), std::invalid_argument);
    for (int d = 2; d <= 13; ++d) CHECK(c5_blowup(d).edge_count() == f_of_delta(d));
}

TEST_CASE("blow-up structure") {
    CHECK(underlying_simple(c5_blowup(2)) == cycle(5));
    CHECK(c5_blowup_bags(3) == std::vector<int>{2, 2, 1, 1, 1});
    CHECK(c5_blowup_bags(4) == std::vector<int>{2, 2, 2, 2, 2});
    CHECK_THROWS_AS(c5_blowup(1), std::invalid_argument);
    for (int d = 2; d <= 9; ++d) {
        auto f = c5_blowup(d);
        CHECK(f.max_degree() == d);
        auto g = underlying_simple(f);
        CHECK(is_connected(g));
        CHECK_FALSE(has_triangle(g));
        CHECK(is_2k2_free_oracle(g));
        // degrees are exactly d on every vertex of the even blow-up
        if (d % 2 == 0)
            for (int v = 0; v < f.n(); ++v) CHECK(f.degree(v) == d);
    }
}

TEST_CASE("complete bipartite graphs") {
    CHECK(underlying_simple(complete_bipartite(1, 1)) == test_helpers::complete(2));
    auto c4 = complete_bipartite(2, 2);
    CHECK(c4.n() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(underlying_simple(c4) ==
          SimpleGraph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
    CHECK(is_2k2_free_oracle(underlying_simple(complete_bipartite(3, 3))));
    CHECK_THROWS_AS(complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("substitution by stable sets and cliques") {
    auto c5 = named_instance("c5");
    CHECK(substitute(c5, {1, 1, 1, 1, 1}, SubstituteMode::clique) == c5);
    CHECK(substitute(c5, {1, 1, 1, 1, 1}, SubstituteMode::stable) == c5);

    auto doubled = substitute(c5, {2, 1, 1, 1, 1}, SubstituteMode::clique);
    CHECK(doubled == SimpleGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3},
                                                 {3, 4}, {4, 5}, {0, 5}, {1, 5}}));

    CHECK(substitute(c5, {2, 2, 2, 2, 2}, SubstituteMode::stable) ==
          underlying_simple(c5_blowup(4)));

    CHECK_THROWS_AS(substitute(c5, {1, 1}, SubstituteMode::stable), std::invalid_argument);
    CHECK_THROWS_AS(substitute(c5, {1, 0, 1, 1, 1}, SubstituteMode::stable),
                    std::invalid_argument);

    // clique substitution into a claw-free base stays claw-free
    auto w = substitute(named_instance("wheel5"), {2, 1, 3, 1, 2, 2}, SubstituteMode::clique);
    CHECK_FALSE(find_claw(w).has_value());
}

TEST_CASE("random multigraphs respect their caps and seeds") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto f = random_multigraph(10, 5, 2, seed);
        CHECK(f.max_degree() <= 5);
        for (auto& [pair, k] : f.pair_multiplicities()) {
            CHECK(k <= 2);
            CHECK(pair.first < pair.second);
        }
    }
    auto a = random_multigraph(8, 4, 3, 42);
    auto b = random_multigraph(8, 4, 3, 42);
    auto c = random_multigraph(8, 4, 3, 43);
    std::ostringstream sa, sb, sc;
    write_multigraph(sa, a);
    write_multigraph(sb, b);
    write_multigraph(sc, c);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str() != sc.str());
}

TEST_CASE("random regular multigraphs are exactly regular") {
    auto triple = random_regular_multigraph(2, 3, 7);
    CHECK(triple.n() == 2);
    CHECK(triple.edge_count() == 3);
    CHECK(triple.multiplicity(0, 1) == 3);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (int n : {6, 10}) {
            for (int d : {2, 3, 5}) {
                auto f = random_regular_multigraph(n, d, 100 + seed);
                for (int v = 0; v < n; ++v) CHECK(f.degree(v) == d);
            }
        }
        auto odd = random_regular_multigraph(9, 4, 200 + seed);
        for (int v = 0; v < 9; ++v) CHECK(odd.degree(v) == 4);
    }
    CHECK_THROWS_AS(random_regular_multigraph(9, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_regular_multigraph(1, 2, 1), std::invalid_argument);

    std::ostringstream sa, sb;
    write_multigraph(sa, random_regular_multigraph(12, 4, 5));
    write_multigraph(sb, random_regular_multigraph(12, 4, 5));
    CHECK(sa.str() == sb.str());
}

TEST_CASE("named instances") {
    CHECK(named_instance("c5") == cycle(5));
    CHECK(named_instance("paw") ==
          SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
    CHECK(named_instance("diamond") ==
          SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));

    auto w5 = named_instance("wheel5");
    CHECK(w5.n() == 6);
    CHECK(w5.edge_count() == 10);
    CHECK_FALSE(find_claw(w5).has_value());
    CHECK_FALSE(is_quasi_line(w5).ok);

    auto ico = named_instance("icosahedron");
    CHECK(ico.n() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    CHECK(is_connected(ico));
    CHECK_FALSE(find_claw(ico).has_value());
    CHECK_FALSE(is_quasi_line(ico).ok);

    auto pl = named_instance("petersen_line");
    CHECK(pl.n() == 15);
    CHECK(pl.edge_count() == 30);
    for (int v = 0; v < 15; ++v) CHECK(pl.degree(v) == 4);
    CHECK_FALSE(find_claw(pl).has_value());
    CHECK(is_quasi_line(pl).ok);
    CHECK(krausz_partition(pl).has_value());

    CHECK_THROWS_AS(named_instance("petersen"), std::invalid_argument);
}

TEST_CASE("random interval representations realize claw-free graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto rep = random_circular_rep(5 + int(seed % 5), 4 + int(seed % 3), 4000 + seed);
        CHECK_FALSE(find_claw(realize_interval(rep)).has_value());
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto st = make_strip(random_linear_rep(4 + int(seed % 5), 6, 4300 + seed));
        CHECK_FALSE(find_claw(st.graph).has_value());
    }
}
