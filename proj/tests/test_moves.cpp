#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dpt/catalog.hpp"
#include "dpt/io.hpp"
#include "dpt/isomorphism.hpp"
#include "dpt/moves.hpp"
#include "dpt/report.hpp"

using namespace dpt;

static const TorusDiagram& motif(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    return e->diagram;
}

static InvariantReport report_of(const TorusDiagram& d) {
    InvariantReport r = invariant_report(d);
    r.name.clear(); // moves may rename nothing, but compare content only
    return r;
}

// Reports compared up to component labels and crossing counts: the fields
// the move theorems protect.
struct Snapshot {
    std::string motif_class;
    std::multiset<std::string> subclasses;
    int direction_count;
    std::string type;
    std::set<Direction> directions;

    explicit Snapshot(const TorusDiagram& d) {
        const Analysis a = analyze(d);
        motif_class = to_string(dpt::motif_class(a.compounds));
        for (const auto& c : a.compounds) subclasses.insert(c.subclass);
        direction_count = dpt::direction_count(a.directions);
        type = to_string(directional_type(a.directions));
        directions = a.directions.directions;
    }

    friend bool operator==(const Snapshot& x, const Snapshot& y) {
        return x.motif_class == y.motif_class && x.subclasses == y.subclasses &&
               x.direction_count == y.direction_count && x.type == y.type;
    }
};

TEST_CASE("face tracing covers every edge twice") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const TorusDiagram d = normalize(entry.diagram);
        std::size_t traversals = 0;
        WrapVector total{0, 0};
        for (const auto& f : trace_faces(d)) {
            traversals += f.walk.size();
            total += f.net_wrap;
        }
        CHECK(traversals == 2 * d.edges.size());
        CHECK(total.is_zero());
    }
}

TEST_CASE("trefoil face census") {
    const auto faces = trace_faces(motif("E3"));
    CHECK(faces.size() == 5);
    std::multiset<std::size_t> sizes;
    for (const auto& f : faces) sizes.insert(f.walk.size());
    CHECK(sizes == std::multiset<std::size_t>{2, 2, 2, 3, 3});
    // Alternating diagram: no removable bigons, no slide triangles.
    CHECK(r2_minus_sites(motif("E3")).empty());
    CHECK(r3_sites(motif("E3")).empty());
}

TEST_CASE("zero gauge shift is the identity") {
    const TorusDiagram d = motif("E4");
    CHECK(serialize(gauge_shift(d, {})) == serialize(normalize(d)));
}

TEST_CASE("gauge shift changes wraps but not the report") {
    const TorusDiagram d = motif("E4");
    GaugeAssignment g;
    g.shift["c1"] = {1, 0};
    g.shift["c2"] = {1, 0};
    const TorusDiagram shifted = gauge_shift(d, g);
    CHECK(serialize(shifted) != serialize(normalize(d)));
    CHECK(report_of(shifted) == report_of(d));
    CHECK(serialize(gauge_shift(shifted, {{{ "c1", WrapVector{-1, 0}}, {"c2", WrapVector{-1, 0}}}})) ==
          serialize(normalize(d)));
}

TEST_CASE("random gauge shifts preserve reports across the catalog") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> cell(-2, 2);
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const TorusDiagram base = normalize(entry.diagram);
        const InvariantReport expected = report_of(base);
        for (int trial = 0; trial < 5; ++trial) {
            GaugeAssignment g;
            for (const auto& c : base.crossings)
                if (rng() % 2) g.shift[c.id] = {cell(rng), cell(rng)};
            const TorusDiagram shifted = gauge_shift(base, g);
            CHECK(trace_components(shifted).components.size() ==
                  trace_components(base).components.size());
            CHECK(report_of(shifted) == expected);
            // Exact inverse round trip.
            GaugeAssignment inv;
            for (const auto& [id, w] : g.shift) inv.shift[id] = -w;
            CHECK(serialize(gauge_shift(shifted, inv)) == serialize(base));
        }
    }
}

TEST_CASE("rebase rejects reflections unless allowed") {
    const Mat2 reflect{1, 0, 0, -1};
    CHECK_THROWS_AS(rebase(motif("E1"), reflect), std::invalid_argument);
    CHECK_NOTHROW(rebase(motif("E1"), reflect, true));
    CHECK_THROWS_AS(rebase(motif("E1"), Mat2{2, 0, 0, 1}, true), std::invalid_argument);
}

TEST_CASE("rebase maps homology linearly and preserves counts") {
    const Mat2 shear{1, 0, 1, 1};
    const TorusDiagram sheared = rebase(motif("E1"), shear);
    const Trace tr = trace_components(sheared);
    CHECK(tr.components[0].homology == WrapVector{1, 1});
    const Analysis a = analyze(sheared);
    CHECK(a.directions.directions == std::set<Direction>{Direction::vector({1, 1})});
    CHECK(direction_count(a.directions) == 1);

    // Homology equivariance across the catalog.
    for (const auto& entry : catalog()) {
        const Trace before = trace_components(entry.diagram);
        const Trace after = trace_components(rebase(entry.diagram, shear));
        REQUIRE(before.components.size() == after.components.size());
        for (std::size_t i = 0; i < before.components.size(); ++i)
            CHECK(after.components[i].homology == shear.apply(before.components[i].homology));
    }
}

TEST_CASE("rebase keeps the protected invariants") {
    const std::vector<Mat2> pool = {{1, 0, 1, 1}, {1, 1, 0, 1}, {0, -1, 1, 0}, {1, -2, 0, 1}};
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Snapshot before(entry.diagram);
        for (const auto& m : pool) {
            const Snapshot after(rebase(entry.diagram, m));
            CHECK(after == before);
        }
    }
    // E5 stays a full polycatenane under any unimodular map.
    const Snapshot s(rebase(motif("E5"), {1, 3, 0, 1}));
    CHECK(s.subclasses == std::multiset<std::string>{"full-polycatenane compound"});
    CHECK(s.type == "∞");
}

TEST_CASE("rebase inverse round trip") {
    const Mat2 m{2, 1, 1, 1};
    REQUIRE(m.det() == 1);
    for (const auto& entry : catalog()) {
        const TorusDiagram there = rebase(entry.diagram, m);
        const TorusDiagram back = rebase(there, m.unimodular_inverse());
        CHECK(serialize(back) == serialize(entry.diagram));
    }
}

TEST_CASE("identity cover is an isomorphism") {
    for (const auto& entry : catalog())
        CHECK(isomorphic(cover(entry.diagram, Mat2::identity()), entry.diagram));
}

TEST_CASE("the two covers of a (1,0) loop") {
    SECTION("top-down copy splits into a (2,0)-torus link") {
        const TorusDiagram c = cover(motif("E1"), {1, 0, 0, 2});
        const Trace tr = trace_components(c);
        REQUIRE(tr.components.size() == 2);
        CHECK(tr.components[0].homology == WrapVector{1, 0});
        CHECK(tr.components[1].homology == WrapVector{1, 0});
    }
    SECTION("left-right copy stays one (1,0) knot") {
        const TorusDiagram c = cover(motif("E1"), {2, 0, 0, 1});
        const Trace tr = trace_components(c);
        REQUIRE(tr.components.size() == 1);
        CHECK(tr.components[0].homology == WrapVector{1, 0});
    }
}

TEST_CASE("cover composition") {
    const Mat2 l1{1, 0, 1, 2};
    const Mat2 l2{2, 1, 0, 1};
    for (const auto& name : {"E1", "E4", "E5", "E6", "dpm-h"}) {
        INFO(name);
        const TorusDiagram two_step = cover(cover(motif(name), l1), l2);
        const TorusDiagram one_step = cover(motif(name), l1 * l2);
        CHECK(isomorphic(two_step, one_step));
    }
}

TEST_CASE("cover counting matches the index formula") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Analysis base = analyze(entry.diagram);
        for (const auto& l : hermite_covers_up_to(4)) {
            const TorusDiagram covered = cover(entry.diagram, l);
            const Analysis ca = analyze(covered);
            // Count covered compounds per originating compound.
            std::map<int, int> copies;
            for (const auto& comp : ca.compounds) {
                const Component& rep =
                    ca.trace.components[static_cast<std::size_t>(comp.members.front())];
                const std::string original_id =
                    cover_origin(rep.is_free_loop() ? rep.free_loop : rep.edge_cycle.front());
                int origin = -1;
                for (std::size_t i = 0; i < base.trace.components.size(); ++i) {
                    const Component& bc = base.trace.components[i];
                    const std::vector<std::string>* ids = nullptr;
                    if (bc.is_free_loop()) {
                        if (bc.free_loop == original_id) origin = static_cast<int>(i);
                    } else {
                        for (const auto& eid : bc.edge_cycle)
                            if (eid == original_id) origin = static_cast<int>(i);
                    }
                    (void)ids;
                }
                REQUIRE(origin >= 0);
                for (const auto& bcomp : base.compounds)
                    for (int m : bcomp.members)
                        if (m == origin) copies[bcomp.index] += 1;
            }
            for (const auto& bcomp : base.compounds) {
                std::vector<WrapVector> span{{l.a, l.c}, {l.b, l.d}};
                for (const auto& g : bcomp.generators) span.push_back(g);
                const std::int64_t expected = sublattice_index(span);
                INFO("cover " << to_string(l) << " compound " << bcomp.index);
                CHECK(copies[bcomp.index] == expected);
            }
        }
    }
}

TEST_CASE("R1+ then R1- returns to the original diagram") {
    for (const auto& name : {"E1", "E3", "E4", "E6"}) {
        INFO(name);
        const TorusDiagram base = normalize(motif(name));
        std::vector<std::string> targets;
        for (const auto& e : base.edges) targets.push_back(e.id);
        for (const auto& l : base.free_loops) targets.push_back(l.id);
        for (const auto& target : targets)
            for (int sign : {+1, -1})
                for (bool over_first : {true, false}) {
                    MoveSite add;
                    add.kind = MoveSite::Kind::R1Plus;
                    add.a = target;
                    add.sign = sign;
                    add.over_first = over_first;
                    const TorusDiagram kinked = apply_move(base, add);
                    CHECK(validate(kinked).ok);
                    CHECK(Snapshot(kinked) == Snapshot(base));
                    // The fresh crossing is removable right away.
                    const auto sites = r1_minus_sites(kinked);
                    bool found = false;
                    for (const auto& s : sites)
                        if (s.a == "m1") found = true;
                    REQUIRE(found);
                    MoveSite remove;
                    remove.kind = MoveSite::Kind::R1Minus;
                    remove.a = "m1";
                    CHECK(isomorphic(apply_move(kinked, remove), base));
                }
    }
}

TEST_CASE("R1- rejects crossings that are not curls") {
    CHECK_THROWS_AS(apply_move(motif("E3"), MoveSite{MoveSite::Kind::R1Minus, "c1"}),
                    MoveError);
    CHECK_THROWS_AS(apply_move(motif("E4"), MoveSite{MoveSite::Kind::R1Minus, "nope"}),
                    MoveError);
}

TEST_CASE("R2+ between the two loops of E2") {
    MoveSite poke;
    poke.kind = MoveSite::Kind::R2Plus;
    poke.a = "a";
    poke.b = "b";
    poke.offset = {0, 0};
    const TorusDiagram poked = apply_move(motif("E2"), poke);
    CHECK(validate(poked).ok);
    CHECK(poked.crossings.size() == 2);
    const Analysis a = analyze(poked);
    CHECK(a.compounds.size() == 2); // linking-adjacency still splits them
    CHECK(Snapshot(poked) == Snapshot(motif("E2")));

    // And back.
    MoveSite unpoke;
    unpoke.kind = MoveSite::Kind::R2Minus;
    unpoke.a = "m1";
    unpoke.b = "m2";
    const TorusDiagram back = apply_move(poked, unpoke);
    CHECK(isomorphic(back, motif("E2")));
}

TEST_CASE("R2 pair cancels in the linking profile at every offset") {
    for (const WrapVector d : {WrapVector{0, 0}, WrapVector{1, 0}, WrapVector{-1, 2}}) {
        MoveSite poke;
        poke.kind = MoveSite::Kind::R2Plus;
        poke.a = "a";
        poke.b = "b";
        poke.offset = d;
        const TorusDiagram poked = apply_move(motif("E2"), poke);
        CHECK(linking_profile(trace_components(poked)).empty());
        // Crossing adjacency, by contrast, sees the contact.
        CHECK(analyze(poked, Policy::CrossingAdjacency).compounds.size() == 1);
    }
}

TEST_CASE("R2+ on E4 edges keeps the linking profile identical") {
    const TorusDiagram base = normalize(motif("E4"));
    const LinkingProfile before = linking_profile(trace_components(base));
    const auto pairs = r2_plus_edge_pairs(base);
    REQUIRE_FALSE(pairs.empty());
    int checked = 0;
    for (const auto& [over, under] : pairs) {
        MoveSite poke;
        poke.kind = MoveSite::Kind::R2Plus;
        poke.a = over;
        poke.b = under;
        poke.offset = {0, 0};
        const TorusDiagram poked = apply_move(base, poke);
        CHECK(validate(poked).ok);
        CHECK(linking_profile(trace_components(poked)) == before);
        // The inserted bigon is immediately removable.
        MoveSite unpoke;
        unpoke.kind = MoveSite::Kind::R2Minus;
        unpoke.a = "m1";
        unpoke.b = "m2";
        CHECK(isomorphic(apply_move(poked, unpoke), base));
        if (++checked >= 10) break;
    }
}

TEST_CASE("self poke of a loop") {
    MoveSite poke;
    poke.kind = MoveSite::Kind::R2Plus;
    poke.a = "a";
    poke.b = "a";
    poke.offset = {1, 0};
    const TorusDiagram poked = apply_move(motif("E1"), poke);
    CHECK(validate(poked).ok);
    CHECK(linking_profile(trace_components(poked)).empty());
    CHECK(Snapshot(poked) == Snapshot(motif("E1")));
    MoveSite unpoke;
    unpoke.kind = MoveSite::Kind::R2Minus;
    unpoke.a = "m1";
    unpoke.b = "m2";
    CHECK(isomorphic(apply_move(poked, unpoke), motif("E1")));
}

TEST_CASE("R2- refuses non-bigons") {
    CHECK_THROWS_AS(apply_move(motif("E4"), MoveSite{MoveSite::Kind::R2Minus, "c1", "c2"}),
                    MoveError);
    CHECK_THROWS_AS(apply_move(motif("E4"), MoveSite{MoveSite::Kind::R2Minus, "c1", "c3"}),
                    MoveError);
}

TEST_CASE("R2+ needs a shared face for edged strands") {
    // E4's A-strand and fig-a's far-apart strands: pick two edges of E4
    // that never bound a common face.
    const TorusDiagram base = normalize(motif("E4"));
    std::set<std::pair<std::string, std::string>> allowed;
    for (const auto& [x, y] : r2_plus_edge_pairs(base)) allowed.insert({x, y});
    bool tested = false;
    for (const auto& e1 : base.edges)
        for (const auto& e2 : base.edges) {
            if (e1.id == e2.id || allowed.count({e1.id, e2.id})) continue;
            MoveSite poke;
            poke.kind = MoveSite::Kind::R2Plus;
            poke.a = e1.id;
            poke.b = e2.id;
            CHECK_THROWS_AS(apply_move(base, poke), MoveError);
            tested = true;
            break;
        }
    CHECK(tested);
}

// Pokes across larger faces land the new crossings next to old ones and
// create slide triangles.
static std::vector<TorusDiagram> diagrams_with_triangles() {
    std::vector<TorusDiagram> out;
    for (const auto& name : {"fig-a", "fig-b", "dpm-b", "dpm-o", "tbl-19"}) {
        const TorusDiagram base = normalize(catalog_find(name)->diagram);
        for (const auto& [over, under] : r2_plus_edge_pairs(base)) {
            MoveSite poke;
            poke.kind = MoveSite::Kind::R2Plus;
            poke.a = over;
            poke.b = under;
            poke.offset = {0, 0};
            const TorusDiagram poked = apply_move(base, poke);
            if (!r3_sites(poked).empty()) {
                out.push_back(poked);
                break;
            }
        }
    }
    return out;
}

TEST_CASE("R3 slides preserve the linking profile exactly") {
    const auto diagrams = diagrams_with_triangles();
    REQUIRE_FALSE(diagrams.empty());
    for (const TorusDiagram& d : diagrams) {
        const LinkingProfile before = linking_profile(trace_components(d));
        const Snapshot snap_before(d);
        for (const auto& site : r3_sites(d)) {
            const TorusDiagram slid = apply_move(d, site);
            CHECK(validate(slid).ok);
            CHECK(linking_profile(trace_components(slid)) == before);
            CHECK(Snapshot(slid) == snap_before);
            // The slide is reversible at the same three crossings.
            const TorusDiagram back = apply_move(slid, site);
            CHECK(isomorphic(back, d));
        }
    }
}

TEST_CASE("R3 refuses triples without a slide triangle") {
    MoveSite bad;
    bad.kind = MoveSite::Kind::R3;
    bad.a = "c1";
    bad.b = "c2";
    bad.c = "c3";
    CHECK_THROWS_AS(apply_move(motif("E3"), bad), MoveError);
    CHECK_THROWS_AS(apply_move(motif("E4"), bad), MoveError);
}

TEST_CASE("isomorphism distinguishes and identifies") {
    CHECK(isomorphic(motif("E1"), motif("E1")));
    CHECK_FALSE(isomorphic(motif("E1"), motif("E2")));
    CHECK_FALSE(isomorphic(motif("E4"), motif("E5")));
    // Relabeled copy.
    TorusDiagram d = normalize(motif("E4"));
    for (auto& c : d.crossings) c.id = "X" + c.id;
    for (auto& e : d.edges) {
        e.id = "Y" + e.id;
        e.tail.crossing = "X" + e.tail.crossing;
        e.head.crossing = "X" + e.head.crossing;
    }
    CHECK(isomorphic(d, motif("E4")));
    // Flipping one sign breaks it.
    d.crossings.front().sign *= -1;
    CHECK_FALSE(isomorphic(d, motif("E4")));
}
