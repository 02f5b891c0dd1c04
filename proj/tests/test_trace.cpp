#include <catch2/catch_amalgamated.hpp>

#include "dpt/catalog.hpp"
#include "dpt/trace.hpp"

using namespace dpt;

static const TorusDiagram& motif(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    return e->diagram;
}

TEST_CASE("validate accepts the whole catalog") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const ValidationReport rep = validate(entry.diagram);
        for (const auto& v : rep.violations) INFO(v.code << " " << v.id << " " << v.message);
        CHECK(rep.ok);
    }
}

TEST_CASE("validate flags a dangling edge") {
    TorusDiagram d = motif("E1");
    d.edges.push_back({"bad", {"nowhere", Port::OverOut}, {"nowhere", Port::UnderIn}, {0, 0}});
    const ValidationReport rep = validate(d);
    CHECK_FALSE(rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.code == "unbound port" && v.id == "bad") found = true;
    CHECK(found);
}

TEST_CASE("validate flags double bindings and bad port kinds") {
    TorusDiagram d = motif("E4");
    Edge extra = d.edges.front();
    extra.id = "dup";
    d.edges.push_back(extra);
    CHECK_FALSE(validate(d).ok);

    TorusDiagram d2 = motif("E4");
    std::swap(d2.edges.front().tail, d2.edges.front().head);
    const ValidationReport rep2 = validate(d2);
    CHECK_FALSE(rep2.ok);
    bool kind = false;
    for (const auto& v : rep2.violations)
        if (v.code == "bad port kind") kind = true;
    CHECK(kind);
}

TEST_CASE("E1 traces to one (1,0) component") {
    const Trace tr = trace_components(motif("E1"));
    REQUIRE(tr.components.size() == 1);
    CHECK(tr.components[0].homology == WrapVector{1, 0});
    CHECK(tr.components[0].is_free_loop());
}

TEST_CASE("E3 traces to one null component through all crossings") {
    const Trace tr = trace_components(motif("E3"));
    REQUIRE(tr.components.size() == 1);
    CHECK(tr.components[0].homology == WrapVector{0, 0});
    CHECK(tr.components[0].edge_cycle.size() == 6);
}

TEST_CASE("E4 traces to two null components") {
    const Trace tr = trace_components(motif("E4"));
    REQUIRE(tr.components.size() == 2);
    CHECK(tr.components[0].homology == WrapVector{0, 0});
    CHECK(tr.components[1].homology == WrapVector{0, 0});
    CHECK(tr.components[0].repr == "A0");
    CHECK(tr.components[1].repr == "B0");
}

TEST_CASE("partition property: every edge in exactly one component") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Trace tr = trace_components(entry.diagram);
        std::size_t total = 0;
        for (const auto& c : tr.components) total += c.is_free_loop() ? 0 : c.edge_cycle.size();
        CHECK(total == tr.diagram.edges.size());
        CHECK(tr.edge_component.size() == tr.diagram.edges.size());
        std::size_t loops = 0;
        for (const auto& c : tr.components)
            if (c.is_free_loop()) ++loops;
        CHECK(loops == tr.diagram.free_loops.size());
    }
}

TEST_CASE("homology equals the wrap sum regardless of starting edge") {
    for (const auto& entry : catalog()) {
        const Trace tr = trace_components(entry.diagram);
        std::map<std::string, WrapVector> wrap_of;
        for (const auto& e : tr.diagram.edges) wrap_of[e.id] = e.wrap;
        for (const auto& c : tr.components) {
            if (c.is_free_loop()) continue;
            WrapVector sum{0, 0};
            for (const auto& eid : c.edge_cycle) sum += wrap_of.at(eid);
            CHECK(sum == c.homology);
        }
    }
}

TEST_CASE("reversing a component's orientation negates its homology") {
    // Reverse E1's loop directly.
    TorusDiagram d = motif("E1");
    d.free_loops[0].wrap = -d.free_loops[0].wrap;
    CHECK(trace_components(d).components[0].homology == WrapVector{-1, 0});
}

TEST_CASE("E3 offsets are all zero") {
    const Trace tr = trace_components(motif("E3"));
    const auto labels = crossing_offsets(tr);
    REQUIRE(labels.size() == 3);
    for (const auto& l : labels) {
        CHECK(l.offset == WrapVector{0, 0});
        CHECK(l.over_component == 0);
        CHECK(l.under_component == 0);
    }
}

TEST_CASE("E4 offsets: one clasp at (0,0), one at (1,0) up to gauge") {
    const Trace tr = trace_components(motif("E4"));
    const auto labels = crossing_offsets(tr);
    REQUIRE(labels.size() == 4);
    // Labels on the ordered pair (A over B) minus labels on (B over A)
    // differ by the gauge constant; the two clasps must sit one lattice
    // step apart in the u direction.
    std::vector<WrapVector> ab, ba;
    for (const auto& l : labels) {
        if (l.over_component == 0) ab.push_back(l.offset);
        if (l.over_component == 1) ba.push_back(-l.offset);
    }
    REQUIRE(ab.size() == 2);
    REQUIRE(ba.size() == 2);
    std::sort(ab.begin(), ab.end());
    std::sort(ba.begin(), ba.end());
    CHECK(ab[1] - ab[0] == WrapVector{1, 0});
    CHECK(ba == ab);
}

TEST_CASE("E5 offsets span both lattice directions") {
    const Trace tr = trace_components(motif("E5"));
    std::set<WrapVector> normalized;
    for (const auto& l : crossing_offsets(tr)) normalized.insert(sign_normalize(l.offset));
    CHECK(normalized == std::set<WrapVector>{{1, 0}, {0, 1}});
}

TEST_CASE("E2 has an empty linking profile") {
    CHECK(linking_profile(trace_components(motif("E2"))).empty());
}

TEST_CASE("E4 linking profile values") {
    const auto profile = linking_profile(trace_components(motif("E4")));
    REQUIRE(profile.size() == 4);
    for (const auto& [key, value] : profile) CHECK((value == 1 || value == -1));
    // Support per ordered pair: two offsets one u-step apart.
    std::vector<WrapVector> ab;
    for (const auto& [key, value] : profile)
        if (std::get<0>(key) == 0) ab.push_back(std::get<2>(key));
    REQUIRE(ab.size() == 2);
    CHECK(ab[1] - ab[0] == WrapVector{1, 0});
}

TEST_CASE("over_marks desugar to the declared translates") {
    const Trace tr = trace_components(motif("E6"));
    REQUIRE(tr.components.size() == 2);
    CHECK(tr.components[0].homology == WrapVector{1, 0});
    CHECK(tr.components[1].homology == WrapVector{0, 1});
    const auto labels = crossing_offsets(tr);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].over_component == 0);
    CHECK(labels[0].under_component == 1);
}

TEST_CASE("mark referencing a missing loop is a violation") {
    TorusDiagram d = motif("E2");
    d.free_loops[0].over_marks.push_back({"ghost", {0, 0}, true, +1});
    const ValidationReport rep = validate(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations.front().code == "bad mark");
}
