#include <catch2/catch_amalgamated.hpp>

#include "toeplitz/io.hpp"
#include "toeplitz/verify.hpp"

using namespace toeplitz;
using nlohmann::json;

TEST_CASE("matrix format reproduces the adjacency matrix exactly") {
    CHECK(io::format_matrix(Spec::make(5, {1, 2, 4})) ==
          "0 1 1 0 1\n"
          "1 0 1 1 0\n"
          "1 1 0 1 1\n"
          "0 1 1 0 1\n"
          "1 0 1 1 0\n");
    CHECK(io::format_matrix(Spec::make(2, {1})) == "0 1\n1 0\n");
}

TEST_CASE("dot format") {
    CHECK(io::format_dot(Spec::make(2, {1})) ==
          "graph toeplitz {\n  1;\n  2;\n  1 -- 2;\n}\n");
}

TEST_CASE("json export and reimport") {
    json j = io::spec_to_json(Spec::make(3, {1, 2}));
    CHECK(j["n"] == 3);
    CHECK(j["offsets"] == json::array({1, 2}));
    CHECK(j["edges"] == json::array({{1, 2}, {1, 3}, {2, 3}}));

    SECTION("round trip for every small spec") {
        for (int n = 2; n <= 8; ++n)
            for (const Spec& s : verify::enumerate_specs(n))
                REQUIRE(io::spec_from_json(io::spec_to_json(s)) == s);
    }

    CHECK_THROWS_AS(io::spec_from_json(json::parse("{\"n\":3}")), ValidationError);
    CHECK_THROWS_AS(io::spec_from_json(json::parse("{\"n\":3,\"offsets\":[]}")),
                    ValidationError);
    CHECK(io::spec_from_json(json::parse("{\"n\":3,\"offsets\":[]}"), true).edgeless());
}

TEST_CASE("clique cover json shape") {
    CliqueCover cover{CoverKind::edge, {{1, 3, 5}, {2, 4, 6}}};
    json j = io::cover_to_json(cover);
    CHECK(j.dump() == R"({"cliques":[[1,3,5],[2,4,6]],"kind":"edge"})");
    CHECK(io::cover_to_json(CliqueCover{CoverKind::vertex, {}})["kind"] == "vertex");
}

TEST_CASE("verdict json shape") {
    json closed = io::verdict_to_json({true, Provenance::closed_form}, "chordal", "not-chordal");
    CHECK(closed == json({{"verdict", "chordal"}, {"source", "closed-form"}}));
    json fallback = io::verdict_to_json({false, Provenance::oracle}, "chordal", "not-chordal");
    CHECK(fallback == json({{"verdict", "not-chordal"}, {"source", "oracle"}}));
}

TEST_CASE("hole and interval model json") {
    CHECK(io::hole_to_json(Hole{{1, 4, 2, 5, 3}}) == json::array({1, 4, 2, 5, 3}));
    json model = io::interval_model_to_json(interval_model(Spec::make(3, {1})));
    CHECK(model == json::array({{1, 2}, {2, 3}, {3, 4}}));
}

TEST_CASE("realizability report json") {
    json ok = io::report_to_json(realizability_report(DegreeProfile::make({3, 3, 4, 3, 3})));
    CHECK(ok["realizable"] == true);
    CHECK(ok["s"] == 1);
    CHECK(ok["offsets"] == json::array({1, 2, 4}));
    CHECK(ok["failed_condition"].is_null());

    json bad = io::report_to_json(realizability_report(DegreeProfile::make({1, 2, 2, 3, 3, 4})));
    CHECK(bad["realizable"] == false);
    CHECK(bad["offsets"].is_null());
    CHECK(bad["failed_condition"] == "b");
}
