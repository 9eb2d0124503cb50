#include <catch2/catch_amalgamated.hpp>

#include "toeplitz/cliques.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/verify.hpp"

using namespace toeplitz;

TEST_CASE("is_kq_free") {
    Spec fig1 = Spec::make(5, {1, 2, 4});
    CHECK(is_kq_free(fig1, 4));
    CHECK_FALSE(is_kq_free(fig1, 3));  // triangle {1,2,3}

    Spec arith = Spec::make(10, {2, 4, 6});
    CHECK(is_kq_free(arith, 5));        // omega = k+1 = 4
    CHECK_FALSE(is_kq_free(arith, 4));

    CHECK_THROWS_AS(is_kq_free(fig1, 2), PreconditionError);

    SECTION("matches the oracle clique size for q in [3, k+2]") {
        for (int n = 2; n <= 9; ++n)
            for (const Spec& s : verify::enumerate_specs(n)) {
                int omega = oracle::max_clique(to_dense(s)).size;
                for (int q = 3; q <= s.offset_count() + 2; ++q)
                    REQUIRE(is_kq_free(s, q) == (omega < q));
            }
    }
}

TEST_CASE("is_triangle_free") {
    CHECK(is_triangle_free(Spec::make(8, {2, 3})));
    CHECK_FALSE(is_triangle_free(Spec::make(5, {1, 2, 4})));
    CHECK(is_triangle_free(Spec::make(9, {4})));  // single offset: no pairs
}

TEST_CASE("clique_number") {
    CHECK(clique_number(Spec::make(10, {2, 4, 6})) == 4);
    CHECK(clique_number(Spec::make(5, {1, 2, 4})) == 3);
    CHECK(clique_number(Spec::make(8, {2, 3})) == 2);
    CHECK(clique_number(Spec::make_allow_edgeless(5, {})) == 1);

    SECTION("equals oracle omega; bounded by k+1; equality iff arithmetic") {
        for (int n = 2; n <= 9; ++n)
            for (const Spec& s : verify::enumerate_specs(n)) {
                int omega = clique_number(s);
                REQUIRE(omega == oracle::max_clique(to_dense(s)).size);
                REQUIRE(omega <= s.offset_count() + 1);
                REQUIRE((omega == s.offset_count() + 1) == s.arithmetic_step().has_value());
            }
    }
}

TEST_CASE("edge clique cover number, arithmetic") {
    CHECK(edge_clique_cover_number_arithmetic(Spec::make(7, {2, 4})) == 3);
    CHECK(edge_clique_cover_number_arithmetic(Spec::make(6, {2, 4})) == 2);
    CHECK(edge_clique_cover_number_arithmetic(Spec::make(12, {3, 6})) == 6);
    CHECK_THROWS_AS(edge_clique_cover_number_arithmetic(Spec::make(8, {2, 3})),
                    PreconditionError);

    SECTION("k=1 with singleton components") {
        // max{t, n-kt} overcounts here; the oracle value is n-t
        CHECK(edge_clique_cover_number_arithmetic(Spec::make(3, {2})) == 1);
        CHECK(edge_clique_cover_number_arithmetic(Spec::make(5, {3})) == 2);
        CHECK(edge_clique_cover_number_arithmetic(Spec::make(4, {3})) == 1);
    }

    SECTION("equals the oracle minimum for every arithmetic spec up to n=12") {
        for (int n = 2; n <= 12; ++n)
            for (const Spec& s : verify::enumerate_specs(n, 0, verify::Family::arithmetic)) {
                int closed = edge_clique_cover_number_arithmetic(s);
                REQUIRE(closed == oracle::edge_clique_cover_number(to_dense(s)));
                if (n >= 2 * *s.arithmetic_step())
                    REQUIRE(closed == std::max(*s.arithmetic_step(),
                                               n - s.offset_count() * *s.arithmetic_step()));
            }
    }
}

TEST_CASE("edge clique cover construction") {
    CHECK(edge_clique_cover_arithmetic(Spec::make(7, {2, 4})).cliques ==
          std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}, {3, 5, 7}});
    CHECK(edge_clique_cover_arithmetic(Spec::make(6, {2, 4})).cliques ==
          std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}});
    CHECK(edge_clique_cover_arithmetic(Spec::make(5, {1, 2})).cliques ==
          std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});

    SECTION("cover is valid and sized like the count") {
        for (int n = 2; n <= 12; ++n)
            for (const Spec& s : verify::enumerate_specs(n, 0, verify::Family::arithmetic)) {
                CliqueCover cover = edge_clique_cover_arithmetic(s);
                REQUIRE(cover.kind == CoverKind::edge);
                REQUIRE(cover_is_valid(cover, s));
                REQUIRE(cover.size() == edge_clique_cover_number_arithmetic(s));
            }
    }
}

TEST_CASE("theta_E monotone in the middle offsets") {
    // all specs sharing s_1 = t and s_k = kt cover at least as many cliques
    for (int n = 4; n <= 10; ++n)
        for (const Spec& s : verify::enumerate_specs(n)) {
            int k = s.offset_count();
            int t = s.offsets().front();
            if (s.offsets().back() != k * t) continue;
            std::vector<int> arith;
            for (int i = 1; i <= k; ++i) arith.push_back(i * t);
            int base = edge_clique_cover_number_arithmetic(Spec::make(n, arith));
            REQUIRE(oracle::edge_clique_cover_number(to_dense(s)) >= base);
        }
}

TEST_CASE("vertex clique cover number, arithmetic") {
    CHECK(vertex_clique_cover_number_arithmetic(Spec::make(9, {2, 4})) == 4);
    CHECK(vertex_clique_cover_number_arithmetic(Spec::make(10, {3})) == 6);
    CHECK(vertex_clique_cover_number_arithmetic(Spec::make(7, {1, 2})) == 3);

    SECTION("the two precondition failures are distinguishable") {
        CHECK_THROWS_WITH(vertex_clique_cover_number_arithmetic(Spec::make(8, {2, 3})),
                          Catch::Matchers::ContainsSubstring("not arithmetic"));
        // n = 6 <= (2*2-1)*2 = 6 for G_6<2,4>
        CHECK_THROWS_WITH(vertex_clique_cover_number_arithmetic(Spec::make(6, {2, 4})),
                          Catch::Matchers::ContainsSubstring("(2k-1)t"));
    }

    SECTION("equals chi of the complement above the threshold, n <= 12") {
        for (int n = 2; n <= 12; ++n)
            for (const Spec& s : verify::enumerate_specs(n, 0, verify::Family::arithmetic)) {
                int t = *s.arithmetic_step();
                if (n <= (2 * s.offset_count() - 1) * t) continue;
                REQUIRE(vertex_clique_cover_number_arithmetic(s) ==
                        oracle::vertex_clique_cover_number(to_dense(s)));
            }
    }
}

TEST_CASE("vertex clique cover construction") {
    CHECK(vertex_clique_cover_arithmetic(Spec::make(7, {1, 2})).cliques ==
          std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7}});
    CHECK(vertex_clique_cover_arithmetic(Spec::make(9, {2, 4})).cliques ==
          std::vector<std::vector<int>>{{1, 3, 5}, {7, 9}, {2, 4, 6}, {8}});
    CHECK(vertex_clique_cover_arithmetic(Spec::make(3, {1})).cliques ==
          std::vector<std::vector<int>>{{1, 2}, {3}});

    SECTION("valid vertex cover for every arithmetic spec") {
        for (int n = 2; n <= 12; ++n)
            for (const Spec& s : verify::enumerate_specs(n, 0, verify::Family::arithmetic)) {
                CliqueCover cover = vertex_clique_cover_arithmetic(s);
                REQUIRE(cover.kind == CoverKind::vertex);
                REQUIRE(cover_is_valid(cover, s));
            }
    }
}

TEST_CASE("cover validation rejects bad covers") {
    Spec spec = Spec::make(5, {1, 2});
    CliqueCover not_clique{CoverKind::edge, {{1, 2, 5}}};  // 2 and 5 not adjacent
    CHECK_FALSE(cover_is_valid(not_clique, spec));
    CliqueCover missing_edges{CoverKind::edge, {{1, 2, 3}}};
    CHECK_FALSE(cover_is_valid(missing_edges, spec));
    CliqueCover missing_vertex{CoverKind::vertex, {{1, 2, 3}, {4}}};
    CHECK_FALSE(cover_is_valid(missing_vertex, spec));
    CliqueCover good{CoverKind::vertex, {{1, 2, 3}, {4, 5}}};
    CHECK(cover_is_valid(good, spec));
}
