#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dpt/catalog.hpp"
#include "dpt/report.hpp"
#include "lift_oracle.hpp"

using namespace dpt;

static Analysis analyzed(const std::string& name, Policy p = Policy::LinkingAdjacency) {
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    return analyze(e->diagram, p);
}

TEST_CASE("E2: no edges, two self loops") {
    const Analysis a = analyzed("E2");
    CHECK(a.graph.edges.empty());
    REQUIRE(a.graph.homology.size() == 2);
    CHECK(a.graph.homology[0] == WrapVector{1, 0});
    CHECK(a.compounds.size() == 2);
    for (const auto& c : a.compounds) {
        CHECK(c.cls == CompoundClass::Ribbon);
        CHECK(c.rank == 1);
    }
}

TEST_CASE("E4: one compound, rank 1, generator (1,0)") {
    const Analysis a = analyzed("E4");
    REQUIRE(a.compounds.size() == 1);
    const Compound& c = a.compounds[0];
    CHECK(c.members.size() == 2);
    CHECK(c.rank == 1);
    REQUIRE(c.generators.size() == 1);
    CHECK(c.generators[0] == WrapVector{1, 0});
    CHECK(c.cls == CompoundClass::Ribbon);
    CHECK(c.subclass == "chain-link ribbon compound");
    REQUIRE(c.null_clusters.size() == 1);
    CHECK(c.null_clusters[0].rank == 1);
}

TEST_CASE("E3: rank 0, null-homotopic") {
    const Analysis a = analyzed("E3");
    REQUIRE(a.compounds.size() == 1);
    CHECK(a.compounds[0].rank == 0);
    CHECK(a.compounds[0].cls == CompoundClass::Null);
    CHECK(a.compounds[0].subclass == "null-homotopic compound");
    CHECK(motif_class(a.compounds) == MotifClass::NullHomotopic);
}

TEST_CASE("E5: rank 2 cover, full-polycatenane") {
    const Analysis a = analyzed("E5");
    REQUIRE(a.compounds.size() == 1);
    const Compound& c = a.compounds[0];
    CHECK(c.rank == 2);
    REQUIRE(c.generators.size() == 2);
    CHECK(c.generators[0] == WrapVector{1, 0});
    CHECK(c.generators[1] == WrapVector{0, 1});
    CHECK(c.cls == CompoundClass::Cover);
    CHECK(c.subclass == "full-polycatenane compound");
    REQUIRE(c.null_clusters.size() == 1);
    CHECK(c.null_clusters[0].rank == 2);
    CHECK_FALSE(c.null_clusters[0].decomposed);
    CHECK(motif_class(a.compounds) == MotifClass::Cover);
}

TEST_CASE("E6: essential cover compound") {
    const Analysis a = analyzed("E6");
    REQUIRE(a.compounds.size() == 1);
    CHECK(a.compounds[0].cls == CompoundClass::Cover);
    CHECK(a.compounds[0].subclass == "essential cover compound");
}

TEST_CASE("class strength ordering") {
    CHECK(compare_class(CompoundClass::Cover, CompoundClass::Ribbon) > 0);
    CHECK(compare_class(CompoundClass::Ribbon, CompoundClass::Null) > 0);
    CHECK(compare_class(CompoundClass::Cover, CompoundClass::Null) > 0);
    CHECK(compare_class(CompoundClass::Null, CompoundClass::Null) == 0);
}

TEST_CASE("motif class decision table") {
    CHECK(to_string(motif_class(analyzed("E5").compounds)) == std::string("cover"));
    CHECK(to_string(motif_class(analyzed("fig-e").compounds)) == std::string("null-cover"));
    CHECK(to_string(motif_class(analyzed("fig-b").compounds)) == std::string("ribbon"));
    CHECK(to_string(motif_class(analyzed("fig-a").compounds)) == std::string("null-ribbon"));
    CHECK(to_string(motif_class(analyzed("E3").compounds)) == std::string("null-homotopic"));
    CHECK_THROWS_AS(motif_class({}), std::invalid_argument);
}

TEST_CASE("fig-e: rank-2 null cluster decomposes into two chains") {
    const Analysis a = analyzed("fig-e");
    REQUIRE(a.compounds.size() == 2);
    const Compound& cover = a.compounds[0].cls == CompoundClass::Cover ? a.compounds[0] : a.compounds[1];
    CHECK(cover.subclass == "chain-polycatenane compound");
    REQUIRE(cover.null_clusters.size() == 1);
    const NullCluster& cl = cover.null_clusters[0];
    CHECK(cl.rank == 2);
    REQUIRE(cl.decomposed);
    REQUIRE(cl.chains.size() == 2);
    std::vector<WrapVector> dirs{cl.chains[0].direction, cl.chains[1].direction};
    std::sort(dirs.begin(), dirs.end());
    CHECK(dirs == std::vector<WrapVector>{{0, 1}, {1, 0}});
    CHECK_FALSE(cl.multiple_minimal);
}

TEST_CASE("fig-g: fourteen-ring cluster is full, not undetermined") {
    const Analysis a = analyzed("fig-g");
    REQUIRE(a.compounds.size() == 1);
    const Compound& c = a.compounds[0];
    CHECK(c.members.size() == 14);
    CHECK(c.subclass == "full-polycatenane compound");
    REQUIRE(c.null_clusters.size() == 1);
    CHECK_FALSE(c.null_clusters[0].undetermined);
    CHECK_FALSE(c.null_clusters[0].decomposed);
}

TEST_CASE("expected subclasses across the subclass gallery") {
    const std::map<std::string, std::string> expected = {
        {"dpm-a", "null-homotopic compound"},
        {"dpm-c", "chain-link ribbon compound"},
        {"dpm-d", "chain-essential ribbon compound"},
        {"dpm-e", "null-essential ribbon compound"},
        {"dpm-g", "mixed ribbon compound"},
        {"dpm-h", "chain-polycatenane compound"},
        {"dpm-j", "full-polycatenane compound"},
        {"dpm-k", "full-polycatenane compound"},
        {"dpm-o", "essential cover compound"},
        {"dpm-r", "null-essential cover compound"},
        {"dpm-s", "chain-essential cover compound"},
        {"dpm-t", "null-chain-essential cover compound"},
        {"dpm-u", "essential-full-polycatenane cover compound"},
        {"dpm-w", "null-essential-full-polycatenane cover compound"},
        {"dpm-x", "chain-essential-full-polycatenane cover compound"},
        {"dpm-y", "mixed cover compound"},
    };
    for (const auto& [name, subclass] : expected) {
        INFO(name);
        const Analysis a = analyzed(name);
        REQUIRE(a.compounds.size() == 1);
        CHECK(a.compounds[0].subclass == subclass);
    }
    // dpm-b splits into three compounds, each an essential ribbon compound.
    const Analysis b = analyzed("dpm-b");
    REQUIRE(b.compounds.size() == 3);
    for (const auto& c : b.compounds) CHECK(c.subclass == "essential ribbon compound");
}

TEST_CASE("translation rank agrees with the lift-block oracle") {
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Analysis a = analyze(entry.diagram);
        for (const auto& comp : a.compounds)
            CHECK(comp.rank == oracle::lift_block_rank(a.trace, comp.members));
    }
}

TEST_CASE("rank is stable under component relabeling") {
    std::mt19937_64 rng(5);
    for (const auto& entry : catalog()) {
        INFO(entry.name);
        const Analysis base = analyze(entry.diagram);
        std::multiset<std::string> base_subclasses;
        std::multiset<int> base_ranks;
        for (const auto& c : base.compounds) {
            base_subclasses.insert(c.subclass);
            base_ranks.insert(c.rank);
        }
        for (int trial = 0; trial < 20; ++trial) {
            TorusDiagram d = entry.diagram;
            // Relabel by permuting id suffixes; ids drive every ordering.
            const std::string tag = "#" + std::to_string(rng() % 1000);
            for (auto& l : d.free_loops) l.id += tag;
            for (auto& l : d.free_loops)
                for (auto& m : l.over_marks) m.other += tag;
            for (auto& c : d.crossings) c.id += tag;
            for (auto& e : d.edges) {
                e.id += tag;
                e.tail.crossing += tag;
                e.head.crossing += tag;
            }
            const Analysis a = analyze(d);
            std::multiset<std::string> subclasses;
            std::multiset<int> ranks;
            for (const auto& c : a.compounds) {
                subclasses.insert(c.subclass);
                ranks.insert(c.rank);
            }
            CHECK(subclasses == base_subclasses);
            CHECK(ranks == base_ranks);
        }
    }
}

TEST_CASE("crossing-adjacency policy sees raw contact") {
    // A canceling pair: two opposite-sign crossings at one offset.
    auto a = cat::loop("a", {0, 0});
    auto b = cat::loop("b", {0, 0});
    cat::cross(a, b, {0, 0}, +1);
    cat::cross(a, b, {0, 0}, -1);
    TorusDiagram d = cat::from_loops("r2pair", "", {a, b});

    const Analysis linking = analyze(d, Policy::LinkingAdjacency);
    CHECK(linking.compounds.size() == 2);
    const Analysis crossing = analyze(d, Policy::CrossingAdjacency);
    CHECK(crossing.compounds.size() == 1);
}
