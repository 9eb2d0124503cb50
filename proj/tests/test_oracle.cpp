#include <catch2/catch_amalgamated.hpp>

#include "toeplitz/oracle.hpp"
#include "toeplitz/verify.hpp"

using namespace toeplitz;

namespace {

DenseGraph path(int n) {
    DenseGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

DenseGraph cycle(int n) {
    DenseGraph g = path(n);
    g.add_edge(n, 1);
    return g;
}

DenseGraph complete(int n) {
    DenseGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("max_clique") {
    auto fig1 = to_dense(Spec::make(5, {1, 2, 4}));
    auto best = oracle::max_clique(fig1);
    CHECK(best.size == 3);
    for (std::size_t a = 0; a < best.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < best.vertices.size(); ++b)
            CHECK(fig1.adjacent(best.vertices[a], best.vertices[b]));

    CHECK(oracle::max_clique(complete(4)).size == 4);
    CHECK(oracle::max_clique(DenseGraph(5)).size == 1);
    CHECK_THROWS_AS(oracle::max_clique(DenseGraph(15)), CapError);
}

TEST_CASE("chromatic_number") {
    CHECK(oracle::chromatic_number(cycle(5)) == 3);
    CHECK(oracle::chromatic_number(cycle(6)) == 2);
    CHECK(oracle::chromatic_number(complete(7)) == 7);
    CHECK(oracle::chromatic_number(DenseGraph(4)) == 1);

    // chi(G_n<t,2t,...,kt>) = k+1
    for (int n = 2; n <= 11; ++n)
        for (const Spec& s : verify::enumerate_specs(n, 0, verify::Family::arithmetic))
            REQUIRE(oracle::chromatic_number(to_dense(s)) == s.offset_count() + 1);
}

TEST_CASE("find_hole") {
    auto g523 = to_dense(Spec::make(5, {2, 3}));
    auto hole = oracle::find_hole(g523);
    REQUIRE(hole.has_value());
    CHECK(hole->length() == 5);
    CHECK(is_valid_hole(*hole, g523));

    CHECK_FALSE(oracle::find_hole(to_dense(Spec::make(10, {2, 4, 6}))));
    CHECK_FALSE(oracle::find_hole(cycle(4), oracle::HoleParity::odd));
    auto c4 = oracle::find_hole(cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->vertices == std::vector<int>{1, 2, 3, 4});

    SECTION("odd filter returns only odd holes") {
        auto odd = oracle::find_hole(cycle(7), oracle::HoleParity::odd);
        REQUIRE(odd.has_value());
        CHECK(odd->length() == 7);
    }
}

TEST_CASE("is_chordal") {
    CHECK(oracle::is_chordal(path(6)));
    CHECK_FALSE(oracle::is_chordal(cycle(4)));
    CHECK_FALSE(oracle::is_chordal(to_dense(Spec::make(8, {2, 3}))));
    CHECK(oracle::is_chordal(complete(5)));

    SECTION("two deciders agree on every small spec") {
        for (int n = 2; n <= 9; ++n)
            for (const Spec& s : verify::enumerate_specs(n)) {
                DenseGraph g = to_dense(s);
                REQUIRE(oracle::is_chordal(g) == !oracle::find_hole(g));
            }
    }
}

TEST_CASE("is_interval") {
    CHECK(oracle::is_interval(path(5)));
    CHECK(oracle::is_interval(to_dense(Spec::make(6, {2, 4}))));

    // spider with three legs of length 2: chordal but its leaves form an
    // asteroidal triple
    DenseGraph spider(7);
    spider.add_edge(1, 2);
    spider.add_edge(2, 3);
    spider.add_edge(1, 4);
    spider.add_edge(4, 5);
    spider.add_edge(1, 6);
    spider.add_edge(6, 7);
    CHECK(oracle::is_chordal(spider));
    CHECK(oracle::has_asteroidal_triple(spider));
    CHECK_FALSE(oracle::is_interval(spider));
}

TEST_CASE("is_berge") {
    CHECK_FALSE(oracle::is_berge(cycle(5)));
    CHECK(oracle::is_berge(cycle(6)));
    CHECK(oracle::is_berge(to_dense(Spec::make(6, {1, 3}))));

    SECTION("equals the literal perfection definition up to n = 7") {
        for (int n = 4; n <= 7; ++n)
            for (const Spec& s : verify::enumerate_specs(n)) {
                DenseGraph g = to_dense(s);
                REQUIRE(oracle::is_berge(g) == oracle::is_perfect_by_definition(g));
            }
    }
}

TEST_CASE("vertex_clique_cover_number") {
    CHECK(oracle::vertex_clique_cover_number(complete(6)) == 1);
    CHECK(oracle::vertex_clique_cover_number(DenseGraph(5)) == 5);
    CHECK(oracle::vertex_clique_cover_number(to_dense(Spec::make(9, {2, 4}))) == 4);

    SECTION("chi of complement equals direct minimum partition") {
        for (int n = 2; n <= 8; ++n)
            for (const Spec& s : verify::enumerate_specs(n)) {
                DenseGraph g = to_dense(s);
                REQUIRE(oracle::vertex_clique_cover_number(g) == oracle::min_clique_partition(g));
            }
    }
}

TEST_CASE("edge_clique_cover_number") {
    CHECK(oracle::edge_clique_cover_number(complete(3)) == 1);
    CHECK(oracle::edge_clique_cover_number(to_dense(Spec::make(7, {2, 4}))) == 3);
    CHECK(oracle::edge_clique_cover_number(cycle(4)) == 4);
    CHECK(oracle::edge_clique_cover_number(DenseGraph(6)) == 0);
    CHECK_THROWS_AS(oracle::edge_clique_cover_number(complete(13)), CapError);
}

TEST_CASE("omega never exceeds chi") {
    for (int n = 2; n <= 8; ++n)
        for (const Spec& s : verify::enumerate_specs(n)) {
            DenseGraph g = to_dense(s);
            REQUIRE(oracle::max_clique(g).size <= oracle::chromatic_number(g));
        }
}

TEST_CASE("budget validation") {
    oracle::Budget bad;
    bad.max_cover_vertices = 20;
    CHECK_THROWS_AS(oracle::max_clique(DenseGraph(3), bad), ValidationError);
    bad = {};
    bad.max_vertices = 0;
    CHECK_THROWS_AS(oracle::max_clique(DenseGraph(3), bad), ValidationError);
}
