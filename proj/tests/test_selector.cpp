#include "clawsq/generators.hpp"
#include "clawsq/selector.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace clawsq;
using test_helpers::complete;
using test_helpers::cycle;
using test_helpers::path;
using test_helpers::wheel5;

namespace {

SimpleGraph claw() { return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

SimpleGraph two_triangles() {
    return SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

int clique_brute(const SimpleGraph& g) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
        std::vector<int> vs;
        for (int i = 0; i < g.n(); ++i)
            if (mask >> i & 1) vs.push_back(i);
        if (int(vs.size()) > best && is_clique(g, vs)) best = int(vs.size());
    }
    return best;
}

bool clique_survives_deletion(const SimpleGraph& g, int v, const std::vector<int>& set) {
    auto rem = delete_vertex(g, v);
    auto sq = square(rem.graph);
    std::vector<int> mapped;
    for (int u : set) mapped.push_back(u < v ? u : u - 1);
    return is_clique(sq, mapped);
}

std::vector<SimpleGraph> claw_free_corpus() {
    std::vector<SimpleGraph> out;
    out.push_back(cycle(5));
    out.push_back(complete(4));
    out.push_back(wheel5());
    out.push_back(named_instance("icosahedron"));
    out.push_back(named_instance("petersen_line"));
    out.push_back(square(path(6)));
    out.push_back(square(cycle(7)));
    for (unsigned seed = 0; seed < 8; ++seed)
        out.push_back(line_graph(random_multigraph(6, 4, 2, seed)).graph);
    for (unsigned seed = 0; seed < 6; ++seed)
        out.push_back(compose_strips(random_scheme(4, 900 + seed)).graph);
    return out;
}

}  // namespace

TEST_CASE("clique number on named instances and against brute force") {
    CHECK(clique_number(line_graph(c5_blowup(4)).graph) == 4);
    CHECK(clique_number(wheel5()) == 3);
    CHECK(clique_number(underlying_simple(complete_bipartite(3, 3))) == 2);
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(SimpleGraph(3)) == 1);
    CHECK(clique_number(SimpleGraph()) == 0);

    auto witness = max_clique(named_instance("icosahedron"));
    REQUIRE(witness.size() == 3);
    CHECK(is_clique(named_instance("icosahedron"), witness));

    for (unsigned seed = 0; seed < 25; ++seed) {
        auto g = underlying_simple(test_helpers::random_multigraph_adhoc(10, 30, 1, seed));
        INFO("seed " << seed);
        CHECK(clique_number(g) == clique_brute(g));
        auto w = max_clique(g);
        CHECK(is_clique(g, w));
        CHECK(int(w.size()) == clique_brute(g));
    }
}

TEST_CASE("non-quasi-line selector picks the wheel hub") {
    auto g = wheel5();
    auto w = select_nonquasiline(g);
    CHECK(w.kind == SelectorWitness::Kind::non_quasi_line);
    CHECK(w.v == 5);
    CHECK(w.omega == 3);
    CHECK(w.v_square_degree == 5);
    CHECK(w.residual_clique == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(w.s.empty());
    CHECK(selector_witness_valid(g, w));
}

TEST_CASE("non-quasi-line selector on the icosahedron") {
    auto g = named_instance("icosahedron");
    // antipodal pairs are at distance three, so the square misses exactly one
    // vertex from each closed neighbourhood
    auto sq = square(g);
    for (int v = 0; v < g.n(); ++v) CHECK(sq.degree(v) == 10);

    auto w = select_nonquasiline(g);
    CHECK(w.v == 0);
    CHECK(w.omega == 3);
    CHECK(w.v_square_degree == 10);
    CHECK(2 * w.v_square_degree <= 2 * 9 + 3 + 1);
    CHECK(selector_witness_valid(g, w));
}

TEST_CASE("non-quasi-line selector rejects bad inputs") {
    CHECK_THROWS_AS(select_nonquasiline(two_triangles()), std::invalid_argument);
    CHECK_THROWS_AS(select_nonquasiline(cycle(5)), std::invalid_argument);
    CHECK_THROWS_AS(select_nonquasiline(claw()), std::invalid_argument);
}

TEST_CASE("non-quasi-line selector succeeds across clique substitutions") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        SimpleGraph base = (seed % 2 == 0) ? wheel5() : named_instance("icosahedron");
        Rng rng(7000 + seed);
        std::vector<int> sizes(base.n());
        for (auto& s : sizes) s = 1 + rng.below(2);
        auto g = substitute(base, sizes, SubstituteMode::clique);
        INFO("seed " << seed << " n " << g.n());
        REQUIRE_FALSE(find_claw(g).has_value());
        REQUIRE_FALSE(is_quasi_line(g).ok);
        auto w = select_nonquasiline(g);
        CHECK(selector_witness_valid(g, w));
    }
}

TEST_CASE("quasi-line selector takes the maximal neighbour set") {
    // a pentagon with one vertex doubled: the square is complete, every
    // square degree is 5, and omega is 3, so S swallows the whole
    // neighbourhood and the clique condition holds vacuously
    auto g = substitute(cycle(5), {2, 1, 1, 1, 1}, SubstituteMode::clique);
    auto w = select_quasiline(g);
    CHECK(w.kind == SelectorWitness::Kind::quasi_line);
    CHECK(w.v == 0);
    CHECK(w.omega == 3);
    CHECK(w.v_square_degree == 5);
    CHECK(w.s == g.neighbors(0));
    CHECK(w.residual_clique.empty());
    CHECK(selector_witness_valid(g, w));

    CHECK_THROWS_AS(select_quasiline(g, true), std::invalid_argument);
}

TEST_CASE("quasi-line selector on squared paths and cycles") {
    for (auto g : {square(path(6)), square(cycle(7))}) {
        REQUIRE(is_quasi_line(g).ok);
        REQUIRE_FALSE(krausz_partition(g).has_value());
        auto w = select_quasiline(g, true);
        CHECK(w.kind == SelectorWitness::Kind::quasi_line);
        CHECK(selector_witness_valid(g, w));
    }
    auto w = select_quasiline(square(path(6)));
    CHECK(w.v == 0);
    CHECK(w.s == std::vector<int>{1, 2});
    CHECK(w.residual_clique.empty());
}

TEST_CASE("quasi-line selector rejects bad inputs") {
    CHECK_THROWS_AS(select_quasiline(wheel5()), std::invalid_argument);
    CHECK_THROWS_AS(select_quasiline(two_triangles()), std::invalid_argument);
}

TEST_CASE("quasi-line selector across substituted squared paths") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        SimpleGraph base = (seed % 2 == 0) ? square(path(6)) : square(cycle(7));
        Rng rng(7700 + seed);
        std::vector<int> sizes(base.n());
        for (auto& s : sizes) s = 1 + rng.below(2);
        auto g = substitute(base, sizes, SubstituteMode::clique);
        INFO("seed " << seed << " n " << g.n());
        REQUIRE(is_quasi_line(g).ok);
        REQUIRE_FALSE(krausz_partition(g).has_value());
        auto w = select_quasiline(g, true);
        CHECK(selector_witness_valid(g, w));
    }
}

TEST_CASE("quasi-line selector across strip compositions") {
    int ran = 0;
    for (unsigned seed = 0; seed < 12; ++seed) {
        auto comp = compose_strips(random_scheme(3 + seed % 3, 400 + seed));
        const auto& g = comp.graph;
        if (!is_connected(g) || !is_quasi_line(g).ok) continue;
        if (krausz_partition(g).has_value()) continue;
        INFO("seed " << seed << " n " << g.n());
        auto w = select_quasiline(g, true);
        CHECK(selector_witness_valid(g, w));
        ++ran;
    }
    INFO("non-line-graph compositions hit: " << ran);
    CHECK(ran >= 0);
}

TEST_CASE("two-path diagnostic on the pentagon") {
    auto d = two_path_diagnostic(cycle(5), 0);
    CHECK(d.v == 0);
    CHECK(d.k == 1);
    CHECK(d.u_min == 2);
    CHECK(d.w == 1);
    CHECK(d.x.empty());
    CHECK(d.c1 == std::vector<int>{1});
    CHECK(d.c2 == std::vector<int>{4});
    CHECK(d.bound == rat(4));
    CHECK(rat(square_degree(cycle(5), 0)) == d.bound);
}

TEST_CASE("two-path diagnostic on a wheel rim vertex") {
    auto d = two_path_diagnostic(wheel5(), 0);
    CHECK(d.k == 2);
    CHECK(d.u_min == 2);
    CHECK(d.w == 1);
    CHECK(d.x == std::vector<int>{5});
    CHECK(d.c1 == std::vector<int>{1});
    CHECK(d.c2 == std::vector<int>{4});
    CHECK(d.bound == rat(6));
    CHECK(square_degree(wheel5(), 0) == 5);
}

TEST_CASE("two-path diagnostic rejects bad inputs") {
    CHECK_THROWS_AS(two_path_diagnostic(complete(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(two_path_diagnostic(claw(), 0), std::invalid_argument);
}

TEST_CASE("two-path diagnostic partitions the neighbourhood across the corpus") {
    for (const auto& g : claw_free_corpus()) {
        for (int v = 0; v < g.n(); ++v) {
            if (second_neighborhood(g, v).empty()) continue;
            auto d = two_path_diagnostic(g, v);
            std::vector<int> merged;
            merged.insert(merged.end(), d.x.begin(), d.x.end());
            merged.insert(merged.end(), d.c1.begin(), d.c1.end());
            merged.insert(merged.end(), d.c2.begin(), d.c2.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == g.neighbors(v));
            CHECK(is_clique(g, d.c1));
            CHECK(is_clique(g, d.c2));
            CHECK(rat(square_degree(g, v)) <= d.bound);
        }
    }
}

TEST_CASE("neighbourhoods split in two cliques whenever deletion breaks them") {
    for (const auto& g : claw_free_corpus()) {
        REQUIRE_FALSE(find_claw(g).has_value());
        for (int v = 0; v < g.n(); ++v) {
            if (clique_survives_deletion(g, v, g.neighbors(v))) continue;
            auto nbhd = induced(g, g.neighbors(v));
            CHECK(two_clique_cover(nbhd.graph).has_value());
        }
    }
}

TEST_CASE("second neighbourhoods meet each neighbour in a small clique") {
    for (const auto& g : claw_free_corpus()) {
        int omega = clique_number(g);
        for (int v = 0; v < g.n(); ++v) {
            auto far = second_neighborhood(g, v);
            for (int u : g.neighbors(v)) {
                std::vector<int> meet;
                for (int t : g.neighbors(u))
                    if (std::binary_search(far.begin(), far.end(), t)) meet.push_back(t);
                CHECK(is_clique(g, meet));
                CHECK(int(meet.size()) <= omega - 1);
            }
        }
    }
}
