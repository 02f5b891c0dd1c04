#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dpt/catalog.hpp"
#include "dpt/report.hpp"

using namespace dpt;

static Analysis analyzed(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    return analyze(e->diagram);
}

static std::set<Direction> dirs(const Analysis& a) { return a.directions.directions; }

TEST_CASE("direction normalization") {
    CHECK(Direction::vector({-1, 2}) == Direction::vector({1, -2}));
    CHECK(Direction::vector({0, -3}) == Direction::vector({0, 3}));
    CHECK(Direction::vector({2, 1}) != Direction::vector({1, 2}));
    CHECK(Direction::vector({0, 0}) == Direction::zero());
    CHECK(to_string(Direction::infinity()) == "(∞,∞)");
}

TEST_CASE("fig-a: two isolated knots and three essential elements") {
    const Analysis a = analyzed("fig-a");
    int isolated = 0, essential = 0;
    for (const auto& el : a.elements) {
        if (el.kind == ElementKind::IsolatedKnot) ++isolated;
        if (el.kind == ElementKind::EssentialComponent) ++essential;
    }
    CHECK(isolated == 2);
    CHECK(essential == 3);
    CHECK(dirs(a) == std::set<Direction>{Direction::zero(), Direction::vector({1, 0})});
    const AxisMotif axis = axis_motif(a.trace, a.elements);
    CHECK(axis.trivial_knots == 2);
    REQUIRE(axis.torus_links.size() == 1);
    CHECK(axis.torus_links[0].direction == WrapVector{1, 0});
    CHECK(axis.torus_links[0].multiplicity == 3);
}

TEST_CASE("E4: one chain-link element with direction (1,0)") {
    const Analysis a = analyzed("E4");
    REQUIRE(a.elements.size() == 1);
    CHECK(a.elements[0].kind == ElementKind::ChainLink);
    CHECK(a.elements[0].direction == Direction::vector({1, 0}));
}

TEST_CASE("E5: one full-polycatenane element of direction infinity") {
    const Analysis a = analyzed("E5");
    REQUIRE(a.elements.size() == 1);
    CHECK(a.elements[0].kind == ElementKind::FullPolycatenane);
    CHECK(a.elements[0].direction == Direction::infinity());
    CHECK(dirs(a) == std::set<Direction>{Direction::infinity()});
}

TEST_CASE("fig-d: three essential directions after sign normalization") {
    const Analysis a = analyzed("fig-d");
    CHECK(dirs(a) == std::set<Direction>{Direction::vector({1, 0}), Direction::vector({1, 2}),
                                         Direction::vector({1, -2})});
    CHECK(direction_count(a.directions) == 3);
    CHECK(to_string(directional_type(a.directions)) == "3");
}

TEST_CASE("fig-h: direction set with zero, two vectors and infinity") {
    const Analysis a = analyzed("fig-h");
    CHECK(dirs(a) == std::set<Direction>{Direction::zero(), Direction::vector({1, 0}),
                                         Direction::vector({0, 1}), Direction::infinity()});
    CHECK(direction_count(a.directions) == 4);
    CHECK(to_string(directional_type(a.directions)) == "(2,0,∞)");
}

TEST_CASE("directional type classification table") {
    auto type_of = [](std::set<Direction> ds) {
        DirectionSet s;
        s.directions = std::move(ds);
        return to_string(directional_type(s));
    };
    CHECK(type_of({Direction::zero()}) == "0");
    CHECK(type_of({Direction::infinity()}) == "∞");
    CHECK(type_of({Direction::vector({1, 0}), Direction::vector({0, 1})}) == "2");
    CHECK(type_of({Direction::zero(), Direction::infinity()}) == "(0,∞)");
    CHECK(type_of({Direction::vector({1, 0}), Direction::zero()}) == "(1,0)");
    CHECK(type_of({Direction::vector({1, 0}), Direction::infinity()}) == "(1,∞)");
    CHECK(type_of({Direction::vector({1, 0}), Direction::zero(), Direction::infinity()}) ==
          "(1,0,∞)");
    DirectionSet empty;
    CHECK_THROWS_AS(directional_type(empty), std::invalid_argument);
}

TEST_CASE("axis-motif of the gallery-A motifs") {
    SECTION("fig-b: a (0,6)-torus link") {
        const Analysis a = analyzed("fig-b");
        const AxisMotif axis = axis_motif(a.trace, a.elements);
        REQUIRE(axis.torus_links.size() == 1);
        CHECK(axis.torus_links[0].direction == WrapVector{0, 1});
        CHECK(axis.torus_links[0].multiplicity == 6);
        CHECK(axis.trivial_knots == 0);
        CHECK(axis.noncontractible_loops.empty());
    }
    SECTION("fig-c: a (4,2)-torus link and three trivial knots") {
        const Analysis a = analyzed("fig-c");
        const AxisMotif axis = axis_motif(a.trace, a.elements);
        REQUIRE(axis.torus_links.size() == 1);
        CHECK(axis.torus_links[0].direction == WrapVector{2, 1});
        CHECK(axis.torus_links[0].multiplicity == 2);
        CHECK(axis.trivial_knots == 3);
    }
    SECTION("fig-e: (1,0) and (0,1) torus knots plus a trivial knot") {
        const Analysis a = analyzed("fig-e");
        const AxisMotif axis = axis_motif(a.trace, a.elements);
        REQUIRE(axis.torus_links.size() == 2);
        CHECK(axis.torus_links[0].direction == WrapVector{0, 1});
        CHECK(axis.torus_links[0].multiplicity == 1);
        CHECK(axis.torus_links[1].direction == WrapVector{1, 0});
        CHECK(axis.torus_links[1].multiplicity == 1);
        CHECK(axis.trivial_knots == 1);
    }
    SECTION("fig-g: fourteen non-contractible trivial loops") {
        const Analysis a = analyzed("fig-g");
        const AxisMotif axis = axis_motif(a.trace, a.elements);
        CHECK(axis.torus_links.empty());
        CHECK(axis.trivial_knots == 0);
        CHECK(axis.noncontractible_loops.size() == 14);
    }
}

TEST_CASE("axis-motif consistency with elements and directions") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Analysis a = analyze(entry.diagram);
        const AxisMotif axis = axis_motif(a.trace, a.elements);
        // Distinct direction count agrees between the axis-motif and the set.
        std::set<Direction> axis_dirs;
        for (const auto& tl : axis.torus_links) axis_dirs.insert(Direction::vector(tl.direction));
        if (axis.trivial_knots > 0) axis_dirs.insert(Direction::zero());
        if (!axis.noncontractible_loops.empty()) axis_dirs.insert(Direction::infinity());
        CHECK(axis_dirs == a.directions.directions);
        // Every element contributes exactly one axis entry.
        int vector_elements = 0, isolated = 0, loop_members = 0;
        for (const auto& el : a.elements) {
            if (el.direction.kind == Direction::Kind::Vector) ++vector_elements;
            if (el.kind == ElementKind::IsolatedKnot) ++isolated;
            if (el.kind == ElementKind::FullPolycatenane)
                loop_members += static_cast<int>(el.members.size());
        }
        int axis_mult = 0;
        for (const auto& tl : axis.torus_links) axis_mult += tl.multiplicity;
        CHECK(axis_mult == vector_elements);
        CHECK(axis.trivial_knots == isolated);
        CHECK(static_cast<int>(axis.noncontractible_loops.size()) == loop_members);
    }
}

TEST_CASE("invariant report composition examples") {
    SECTION("E3") {
        const InvariantReport r = invariant_report(analyzed("E3"));
        CHECK(r.component_count == 1);
        CHECK(r.crossing_count == 3);
        CHECK(r.motif_class == "null-homotopic");
        CHECK(to_string(r.type) == "0");
    }
    SECTION("E5") {
        const InvariantReport r = invariant_report(analyzed("E5"));
        CHECK(r.component_count == 1);
        CHECK(r.crossing_count == 4);
        CHECK(r.motif_class == "cover");
        REQUIRE(r.compounds.size() == 1);
        CHECK(r.compounds[0].subclass == "full-polycatenane compound");
        CHECK(to_string(r.type) == "∞");
    }
    SECTION("E6") {
        const InvariantReport r = invariant_report(analyzed("E6"));
        CHECK(r.component_count == 2);
        CHECK(r.crossing_count == 1);
        CHECK(r.motif_class == "cover");
        REQUIRE(r.compounds.size() == 1);
        CHECK(r.compounds[0].subclass == "essential cover compound");
        CHECK(to_string(r.type) == "2");
    }
}

TEST_CASE("structured report round trip") {
    std::mt19937_64 rng(9);
    for (const auto& entry : catalog()) {
        const InvariantReport r = invariant_report(entry.diagram);
        const auto j = report_to_json(r);
        const InvariantReport back = report_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == r);
    }
    (void)rng;
}
