#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dpt/catalog.hpp"
#include "dpt/fuzz.hpp"
#include "dpt/io.hpp"
#include "dpt/isomorphism.hpp"
#include "dpt/svg.hpp"

using namespace dpt;

TEST_CASE("serialize/parse round trip over the catalog") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const std::string text = serialize(entry.diagram);
        const TorusDiagram back = parse(text);
        CHECK(isomorphic(back, entry.diagram));
        // Serialization is deterministic and stable under re-parsing.
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("parse reports positions for malformed input") {
    CHECK_THROWS_AS(parse("{"), ParseError);
    CHECK_THROWS_WITH(parse("[1,2]"), Catch::Matchers::ContainsSubstring("expected a JSON object"));
    CHECK_THROWS_WITH(
        parse(R"({"name":"x","free_loops":[{"id":"a","wrap":[1]}]})"),
        Catch::Matchers::ContainsSubstring("/free_loops/0/wrap"));
    CHECK_THROWS_WITH(
        parse(R"({"edges":[{"id":"e","from":{"crossing":"c","port":"sideways"},"to":{"crossing":"c","port":"under_in"},"wrap":[0,0]}]})"),
        Catch::Matchers::ContainsSubstring("/edges/0/from/port"));
    CHECK_THROWS_WITH(parse(R"({"crossings":[{"id":"c","sign":2}]})"),
                      Catch::Matchers::ContainsSubstring("/crossings/0/sign"));
    CHECK_THROWS_WITH(parse(R"({"crossings":[{"sign":1}]})"),
                      Catch::Matchers::ContainsSubstring("/crossings/0/id"));
}

TEST_CASE("parse keeps over marks") {
    const CatalogEntry* e6 = catalog_find("E6");
    REQUIRE(e6 != nullptr);
    const TorusDiagram back = parse(serialize(e6->diagram));
    REQUIRE(back.free_loops.size() == 2);
    bool found = false;
    for (const auto& l : back.free_loops)
        for (const auto& m : l.over_marks) {
            found = true;
            CHECK(m.over);
        }
    CHECK(found);
}

TEST_CASE("round trip after random walks") {
    std::mt19937_64 rng(41);
    const std::vector<std::string> names = {"E1", "E3", "E4", "E6", "fig-e"};
    for (const auto& name : names) {
        const CatalogEntry* entry = catalog_find(name);
        REQUIRE(entry != nullptr);
        for (int trial = 0; trial < 5; ++trial) {
            const FuzzResult walk = fuzz_walk(entry->diagram, 6, rng());
            REQUIRE(walk.pass);
            const TorusDiagram& d = walk.final_diagram;
            CHECK(isomorphic(parse(serialize(d)), d));
        }
    }
}

TEST_CASE("axis svg output is deterministic svg") {
    const CatalogEntry* e = catalog_find("fig-h");
    REQUIRE(e != nullptr);
    const InvariantReport r = invariant_report(e->diagram);
    const std::string svg = axis_svg(r.axis, r.name);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == axis_svg(r.axis, r.name));
    // One legend line per axis constituent kind.
    CHECK(svg.find("torus link") != std::string::npos);
    CHECK(svg.find("trivial knot") != std::string::npos);
    CHECK(svg.find("non-contractible loop") != std::string::npos);
}
