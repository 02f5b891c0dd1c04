#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpt/diagram.hpp"

namespace dpt {

struct CatalogEntry {
    std::string name;
    std::string description;
    TorusDiagram diagram;
};

namespace cat {

inline FreeLoop loop(std::string id, WrapVector wrap) { return {std::move(id), wrap, {}}; }

/// Hopf-style clasp between two loops at relative translate d: two
/// crossings of equal sign, one with each loop on top, so the pair links.
inline void clasp(FreeLoop& a, FreeLoop& b, WrapVector d, int sign = +1) {
    a.over_marks.push_back({b.id, d, true, sign});
    b.over_marks.push_back({a.id, -d, true, sign});
}

/// Single transversal crossing, a over b at translate d.
inline void cross(FreeLoop& a, FreeLoop& b, WrapVector d, int sign = +1) {
    a.over_marks.push_back({b.id, d, true, sign});
}

/// Clasp between a loop and its own translate by d.
inline void self_clasp(FreeLoop& a, WrapVector d, int sign = +1) {
    a.over_marks.push_back({a.id, d, true, sign});
    a.over_marks.push_back({a.id, -d, true, sign});
}

/// Curl: the loop crosses itself once inside its own cell.
inline void kink(FreeLoop& a, int sign = +1) {
    a.over_marks.push_back({a.id, {0, 0}, true, sign});
}

inline TorusDiagram from_loops(std::string name, std::string, std::vector<FreeLoop> loops) {
    TorusDiagram d;
    d.name = std::move(name);
    d.free_loops = std::move(loops);
    return d;
}

} // namespace cat

namespace catalog_detail {

using cat::clasp;
using cat::cross;
using cat::kink;
using cat::loop;
using cat::self_clasp;

inline TorusDiagram e1() {
    TorusDiagram d;
    d.name = "E1";
    d.free_loops = {loop("a", {1, 0})};
    return d;
}

inline TorusDiagram e2() {
    TorusDiagram d;
    d.name = "E2";
    d.free_loops = {loop("a", {1, 0}), loop("b", {1, 0})};
    return d;
}

inline TorusDiagram e3() {
    // Trefoil drawn inside one cell: all wraps zero.
    return build_diagram("E3", {{"c1", +1}, {"c2", +1}, {"c3", +1}},
                         {{"t",
                           {{"c1", Role::Over, {0, 0}},
                            {"c2", Role::Under, {0, 0}},
                            {"c3", Role::Over, {0, 0}},
                            {"c1", Role::Under, {0, 0}},
                            {"c2", Role::Over, {0, 0}},
                            {"c3", Role::Under, {0, 0}}},
                           {0, 0}}});
}

inline TorusDiagram e4() {
    // Two null components clasped at translates (0,0) and (1,0): a Hopf
    // chain running along the u axis.
    return build_diagram("E4", {{"c1", +1}, {"c2", +1}, {"c3", +1}, {"c4", +1}},
                         {{"A",
                           {{"c1", Role::Over, {0, 0}},
                            {"c2", Role::Under, {0, 0}},
                            {"c3", Role::Over, {0, 0}},
                            {"c4", Role::Under, {0, 0}}},
                           {0, 0}},
                          {"B",
                           {{"c1", Role::Under, {0, 0}},
                            {"c2", Role::Over, {0, 0}},
                            {"c3", Role::Under, {1, 0}},
                            {"c4", Role::Over, {1, 0}}},
                           {0, 0}}});
}

inline TorusDiagram e5() {
    // One null circle clasping its own u- and v-translates.
    return build_diagram("E5", {{"c1", +1}, {"c2", +1}, {"c3", +1}, {"c4", +1}},
                         {{"s",
                           {{"c1", Role::Over, {0, 0}},
                            {"c2", Role::Under, {0, 0}},
                            {"c3", Role::Over, {0, 0}},
                            {"c4", Role::Under, {0, 0}},
                            {"c1", Role::Under, {-1, 0}},
                            {"c2", Role::Over, {-1, 0}},
                            {"c3", Role::Under, {0, -1}},
                            {"c4", Role::Over, {0, -1}}},
                           {0, 0}}});
}

inline TorusDiagram e6() {
    auto a = loop("a", {1, 0});
    auto b = loop("b", {0, 1});
    cross(a, b, {0, 0});
    return cat::from_loops("E6", "", {std::move(a), std::move(b)});
}

// Gallery A: the eight motifs whose directions and axis-motifs are the
// worked examples of the invariant set.

inline TorusDiagram fig_a() {
    auto k1 = loop("k1", {0, 0});
    auto k2 = loop("k2", {0, 0});
    clasp(k1, k2, {0, 0});
    auto e1 = loop("p1", {1, 0});
    auto e2 = loop("p2", {1, 0});
    auto e3 = loop("p3", {1, 0});
    clasp(e1, e2, {0, 0});
    clasp(e2, e3, {0, 0});
    return cat::from_loops("fig-a", "", {k1, k2, e1, e2, e3});
}

inline TorusDiagram fig_b() {
    auto p1 = loop("p1", {0, 1});
    auto p2 = loop("p2", {0, 1});
    clasp(p1, p2, {0, 0});
    auto q1 = loop("q1", {0, 1});
    auto q2 = loop("q2", {0, 1});
    auto q3 = loop("q3", {0, 1});
    clasp(q1, q2, {0, 0});
    clasp(q2, q3, {0, 0});
    auto r1 = loop("r1", {0, 0});
    auto r2 = loop("r2", {0, 0});
    clasp(r1, r2, {0, 0});
    clasp(r1, r2, {0, 1});
    return cat::from_loops("fig-b", "", {p1, p2, q1, q2, q3, r1, r2});
}

inline TorusDiagram fig_c() {
    auto g1 = loop("g1", {2, 1});
    auto g2 = loop("g2", {2, 1});
    clasp(g1, g2, {0, 0});
    auto n1 = loop("n1", {0, 0});
    auto n2 = loop("n2", {0, 0});
    auto n3 = loop("n3", {0, 0});
    clasp(n1, g1, {0, 0});
    clasp(n2, g1, {0, 0});
    clasp(n3, g1, {0, 0});
    return cat::from_loops("fig-c", "", {g1, g2, n1, n2, n3});
}

inline TorusDiagram fig_d() {
    // Three essential curves of slopes (1,0), (1,2), (-1,2); crossing
    // counts follow the pairwise homology determinants.
    auto u1 = loop("u1", {1, 0});
    auto u2 = loop("u2", {1, 2});
    auto u3 = loop("u3", {-1, 2});
    cross(u1, u2, {0, 0});
    cross(u1, u2, {0, 1});
    cross(u1, u3, {0, 0});
    cross(u1, u3, {0, 1});
    cross(u2, u3, {0, 0});
    cross(u2, u3, {0, 1});
    cross(u2, u3, {0, 2});
    cross(u2, u3, {0, 3});
    return cat::from_loops("fig-d", "", {u1, u2, u3});
}

inline TorusDiagram fig_e() {
    auto a1 = loop("a1", {0, 0});
    auto a2 = loop("a2", {0, 0});
    clasp(a1, a2, {0, 0});
    clasp(a1, a2, {1, 0});
    auto b1 = loop("b1", {0, 0});
    auto b2 = loop("b2", {0, 0});
    clasp(b1, b2, {0, 0});
    clasp(b1, b2, {0, 1});
    clasp(a1, b1, {0, 0});
    auto k = loop("k", {0, 0});
    return cat::from_loops("fig-e", "", {a1, a2, b1, b2, k});
}

inline TorusDiagram fig_f() {
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    return cat::from_loops("fig-f", "", {f});
}

inline TorusDiagram fig_g() {
    // One large ring threading thirteen small ones; the wrap-around
    // clasps with r1 and r2 pin both lattice directions.
    std::vector<FreeLoop> loops;
    loops.push_back(loop("r00", {0, 0}));
    for (int i = 1; i <= 13; ++i)
        loops.push_back(loop("r" + std::string(i < 10 ? "0" : "") + std::to_string(i), {0, 0}));
    clasp(loops[0], loops[1], {0, 0});
    clasp(loops[0], loops[1], {1, 0});
    clasp(loops[0], loops[2], {0, 0});
    clasp(loops[0], loops[2], {0, 1});
    for (int i = 3; i <= 13; ++i) clasp(loops[0], loops[static_cast<std::size_t>(i)], {0, 0});
    return cat::from_loops("fig-g", "", loops);
}

inline TorusDiagram fig_h() {
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    auto c1 = loop("c1", {0, 0});
    auto c2 = loop("c2", {0, 0});
    clasp(c1, c2, {0, 0});
    clasp(c1, c2, {1, 0});
    auto p = loop("p", {1, 0});
    auto g = loop("g", {0, 1});
    auto bk = loop("bk", {0, 1});
    auto k = loop("k", {0, 0});
    clasp(f, p, {0, 0});
    clasp(c1, p, {0, 0});
    cross(g, f, {0, 0});
    clasp(bk, g, {0, 0});
    clasp(k, p, {0, 0});
    auto j1 = loop("j1", {0, 0});
    auto j2 = loop("j2", {0, 0});
    auto j3 = loop("j3", {0, 0});
    clasp(j2, j3, {0, 0});
    return cat::from_loops("fig-h", "", {f, c1, c2, p, g, bk, k, j1, j2, j3});
}

// Gallery B: one motif per reachable subclass name.

inline TorusDiagram dpm_a() {
    auto k1 = loop("k1", {0, 0});
    auto k2 = loop("k2", {0, 0});
    clasp(k1, k2, {0, 0});
    return cat::from_loops("dpm-a", "", {k1, k2});
}

inline TorusDiagram dpm_b() {
    auto p1 = loop("p1", {0, 1});
    auto p2 = loop("p2", {0, 1});
    clasp(p1, p2, {0, 0});
    auto q1 = loop("q1", {0, 1});
    auto q2 = loop("q2", {0, 1});
    clasp(q1, q2, {0, 0});
    auto r1 = loop("r1", {0, 1});
    return cat::from_loops("dpm-b", "", {p1, p2, q1, q2, r1});
}

inline TorusDiagram dpm_c() {
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    return cat::from_loops("dpm-c", "", {a, b});
}

inline TorusDiagram dpm_d() {
    auto e = loop("e", {1, 0});
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    clasp(a, e, {0, 0});
    return cat::from_loops("dpm-d", "", {e, a, b});
}

inline TorusDiagram dpm_e() {
    auto e = loop("e", {1, 0});
    auto n1 = loop("n1", {0, 0});
    auto n2 = loop("n2", {0, 0});
    auto n3 = loop("n3", {0, 0});
    clasp(n1, e, {0, 0});
    clasp(n2, e, {0, 0});
    clasp(n3, e, {0, 0});
    return cat::from_loops("dpm-e", "", {e, n1, n2, n3});
}

inline TorusDiagram dpm_g() {
    auto e = loop("e", {1, 0});
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    clasp(a, e, {0, 0});
    auto n1 = loop("n1", {0, 0});
    clasp(n1, e, {0, 0});
    return cat::from_loops("dpm-g", "", {e, a, b, n1});
}

inline TorusDiagram dpm_h() {
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    auto c = loop("c", {0, 0});
    auto d = loop("d", {0, 0});
    clasp(c, d, {0, 0});
    clasp(c, d, {0, 1});
    clasp(a, c, {0, 0});
    return cat::from_loops("dpm-h", "", {a, b, c, d});
}

inline TorusDiagram dpm_j() {
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    return cat::from_loops("dpm-j", "", {f});
}

inline TorusDiagram dpm_k() {
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    clasp(a, b, {0, 1});
    return cat::from_loops("dpm-k", "", {a, b});
}

inline TorusDiagram dpm_o() {
    auto o1 = loop("o1", {1, 0});
    auto o2 = loop("o2", {1, 0});
    auto o3 = loop("o3", {1, 0});
    clasp(o1, o2, {0, 0});
    clasp(o2, o3, {0, 0});
    auto o4 = loop("o4", {0, 1});
    auto o5 = loop("o5", {0, 1});
    clasp(o4, o5, {0, 0});
    cross(o1, o4, {0, 0});
    return cat::from_loops("dpm-o", "", {o1, o2, o3, o4, o5});
}

inline TorusDiagram dpm_p() {
    auto p1 = loop("p1", {1, 0});
    auto p2 = loop("p2", {1, 0});
    clasp(p1, p2, {0, 0});
    auto p3 = loop("p3", {0, 1});
    auto p4 = loop("p4", {0, 1});
    clasp(p3, p4, {0, 0});
    cross(p1, p3, {0, 0});
    return cat::from_loops("dpm-p", "", {p1, p2, p3, p4});
}

inline TorusDiagram dpm_q() {
    auto p1 = loop("p1", {1, 0});
    auto p2 = loop("p2", {1, 0});
    auto p3 = loop("p3", {1, 0});
    clasp(p1, p2, {0, 0});
    clasp(p2, p3, {0, 0});
    auto p4 = loop("p4", {0, 1});
    auto p5 = loop("p5", {0, 1});
    auto p6 = loop("p6", {0, 1});
    clasp(p4, p5, {0, 0});
    clasp(p5, p6, {0, 0});
    cross(p1, p4, {0, 0});
    return cat::from_loops("dpm-q", "", {p1, p2, p3, p4, p5, p6});
}

inline TorusDiagram dpm_r() {
    TorusDiagram d = dpm_p();
    d.name = "dpm-r";
    auto n = loop("n1", {0, 0});
    clasp(n, d.free_loops[0], {0, 0});
    d.free_loops.push_back(std::move(n));
    return d;
}

inline TorusDiagram dpm_s() {
    auto e = loop("e", {1, 0});
    auto a = loop("a", {0, 0});
    auto b = loop("b", {0, 0});
    clasp(a, b, {0, 0});
    clasp(a, b, {1, 0});
    clasp(a, e, {0, 0});
    auto c = loop("c", {0, 0});
    auto d = loop("d", {0, 0});
    clasp(c, d, {0, 0});
    clasp(c, d, {0, 1});
    clasp(c, e, {0, 0});
    return cat::from_loops("dpm-s", "", {e, a, b, c, d});
}

inline TorusDiagram dpm_t() {
    auto e = loop("e", {1, 0});
    auto c = loop("c", {0, 0});
    auto d = loop("d", {0, 0});
    clasp(c, d, {0, 0});
    clasp(c, d, {0, 1});
    clasp(c, e, {0, 0});
    auto n1 = loop("n1", {0, 0});
    auto n2 = loop("n2", {0, 0});
    clasp(n1, e, {0, 0});
    clasp(n2, e, {0, 0});
    return cat::from_loops("dpm-t", "", {e, c, d, n1, n2});
}

inline TorusDiagram dpm_u() {
    auto e = loop("e", {1, 0});
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    clasp(f, e, {0, 0});
    return cat::from_loops("dpm-u", "", {e, f});
}

inline TorusDiagram dpm_v() {
    auto e1 = loop("e1", {1, 0});
    auto e2 = loop("e2", {1, 0});
    clasp(e1, e2, {0, 0});
    auto e3 = loop("e3", {0, 1});
    auto e4 = loop("e4", {0, 1});
    clasp(e3, e4, {0, 0});
    cross(e1, e3, {0, 0});
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    clasp(f, e1, {0, 0});
    return cat::from_loops("dpm-v", "", {e1, e2, e3, e4, f});
}

inline TorusDiagram dpm_w() {
    TorusDiagram d = dpm_v();
    d.name = "dpm-w";
    auto n1 = loop("n1", {0, 0});
    auto n2 = loop("n2", {0, 0});
    clasp(n1, d.free_loops[0], {0, 0});
    clasp(n2, d.free_loops[0], {0, 0});
    d.free_loops.push_back(std::move(n1));
    d.free_loops.push_back(std::move(n2));
    return d;
}

inline TorusDiagram dpm_x() {
    auto e = loop("e", {1, 0});
    auto f = loop("f", {0, 0});
    self_clasp(f, {1, 0});
    self_clasp(f, {0, 1});
    clasp(f, e, {0, 0});
    auto c = loop("c", {0, 0});
    auto d = loop("d", {0, 0});
    clasp(c, d, {0, 0});
    clasp(c, d, {0, 1});
    clasp(c, e, {0, 0});
    return cat::from_loops("dpm-x", "", {e, f, c, d});
}

inline TorusDiagram dpm_y() {
    TorusDiagram d = dpm_x();
    d.name = "dpm-y";
    auto n1 = loop("n1", {0, 0});
    auto n2 = loop("n2", {0, 0});
    clasp(n1, d.free_loops[0], {0, 0});
    clasp(n2, d.free_loops[0], {0, 0});
    d.free_loops.push_back(std::move(n1));
    d.free_loops.push_back(std::move(n2));
    return d;
}

// Numeric-table stand-ins: small motifs tuned so selected report pairs
// differ in exactly the named invariants.

inline TorusDiagram tbl(int n) {
    switch (n) {
        case 1: {
            auto e = loop("e", {1, 0});
            self_clasp(e, {0, 0}, +1);
            return cat::from_loops("tbl-1", "", {e});
        }
        case 2: {
            auto e = loop("e", {1, 0});
            self_clasp(e, {0, 0}, -1);
            return cat::from_loops("tbl-2", "", {e});
        }
        case 3: {
            auto e = loop("e", {1, 0});
            self_clasp(e, {0, 1}, +1);
            return cat::from_loops("tbl-3", "", {e});
        }
        case 7: {
            auto u = loop("u", {1, 0});
            auto w = loop("w", {0, 1});
            cross(u, w, {0, 0}, +1);
            cross(u, w, {0, 0}, +1);
            cross(u, w, {0, 0}, -1);
            return cat::from_loops("tbl-7", "", {u, w});
        }
        case 8: {
            auto u1 = loop("u1", {1, 0});
            auto u2 = loop("u2", {1, 0});
            clasp(u1, u2, {0, 0});
            kink(u1, +1);
            return cat::from_loops("tbl-8", "", {u1, u2});
        }
        case 9:
        case 10: {
            const int s = n == 9 ? +1 : -1;
            auto u = loop("u", {1, 0});
            auto w = loop("w", {0, 1});
            cross(u, w, {0, 0}, +1);
            kink(u, s);
            kink(u, s);
            kink(w, s);
            return cat::from_loops(n == 9 ? "tbl-9" : "tbl-10", "", {u, w});
        }
        case 11: {
            auto u = loop("u", {1, 0});
            self_clasp(u, {0, 1}, +1);
            auto k = loop("k", {0, 0});
            clasp(k, u, {0, 0});
            return cat::from_loops("tbl-11", "", {u, k});
        }
        case 13: {
            auto a = loop("a", {0, 0});
            auto b = loop("b", {0, 0});
            clasp(a, b, {0, 0});
            clasp(a, b, {1, 0});
            clasp(a, b, {1, 0});
            auto c = loop("c", {0, 0});
            auto d = loop("d", {0, 0});
            clasp(c, d, {0, 0});
            clasp(c, d, {1, 0});
            clasp(c, d, {1, 0});
            return cat::from_loops("tbl-13", "", {a, b, c, d});
        }
        case 14: {
            auto a = loop("a", {0, 0});
            auto b = loop("b", {0, 0});
            clasp(a, b, {0, 0});
            clasp(a, b, {1, 0});
            auto c = loop("c", {0, 0});
            auto d = loop("d", {0, 0});
            clasp(c, d, {0, 0});
            clasp(c, d, {1, 0});
            clasp(a, c, {0, 0});
            clasp(a, c, {0, 1});
            return cat::from_loops("tbl-14", "", {a, b, c, d});
        }
        case 15: {
            auto a = loop("a", {0, 0});
            auto b = loop("b", {0, 0});
            clasp(a, b, {0, 0});
            clasp(a, b, {0, 0});
            clasp(a, b, {0, 0});
            auto c = loop("c", {0, 0});
            auto d = loop("d", {0, 0});
            clasp(c, d, {0, 0});
            clasp(c, d, {0, 0});
            clasp(c, d, {0, 0});
            return cat::from_loops("tbl-15", "", {a, b, c, d});
        }
        case 19: {
            auto u1 = loop("u1", {1, 0});
            auto u2 = loop("u2", {1, 0});
            clasp(u1, u2, {0, 0});
            clasp(u1, u2, {0, 0});
            return cat::from_loops("tbl-19", "", {u1, u2});
        }
        case 20: {
            auto a = loop("a", {0, 0});
            auto b = loop("b", {0, 0});
            clasp(a, b, {0, 0});
            clasp(a, b, {1, 0});
            return cat::from_loops("tbl-20", "", {a, b});
        }
        default: throw std::invalid_argument("no table stand-in " + std::to_string(n));
    }
}

} // namespace catalog_detail

/// Built-in motif catalog.  E1..E6 are the basic exercises; fig-a..fig-h
/// are the gallery-A motifs with worked directions and axis-motifs;
/// dpm-* cover one compound subclass each; tbl-* are small pairs tuned to
/// differ in specific invariants.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        using namespace catalog_detail;
        std::vector<CatalogEntry> v;
        auto add = [&v](TorusDiagram d, std::string desc) {
            d.source = desc;
            v.push_back({d.name, std::move(desc), std::move(d)});
        };
        add(e1(), "one essential (1,0) loop");
        add(e2(), "two disjoint essential (1,0) loops");
        add(e3(), "trefoil in a disk");
        add(e4(), "Hopf chain along u: clasps at (0,0) and (1,0)");
        add(e5(), "self-catenated circle: clasps with its u- and v-translates");
        add(e6(), "(1,0) and (0,1) loops joined by one crossing");
        add(fig_a(), "gallery A (a): two linked unknots and three parallel (1,0) curves");
        add(fig_b(), "gallery A (b): three (0,1) ribbon compounds, sizes 2+3+chain");
        add(fig_c(), "gallery A (c): two (2,1) curves clasped, three unknots threaded on");
        add(fig_d(), "gallery A (d): essential cover of slopes (1,0),(1,2),(-1,2)");
        add(fig_e(), "gallery A (e): two interlinked chains plus a split unknot");
        add(fig_f(), "gallery A (f): full polycatenane made of one circle");
        add(fig_g(), "gallery A (g): full polycatenane of fourteen rings");
        add(fig_h(), "gallery A (h): cover compound with full core, chain, three essentials, knot; two null compounds");
        add(dpm_a(), "gallery B (a): null-homotopic compound");
        add(dpm_b(), "gallery B (b): essential ribbon compounds, five (0,1) curves");
        add(dpm_c(), "gallery B (c): chain-link ribbon compound");
        add(dpm_d(), "gallery B (d): chain-essential ribbon compound");
        add(dpm_e(), "gallery B (e): null-essential ribbon compound");
        add(dpm_g(), "gallery B (g): mixed ribbon compound");
        add(dpm_h(), "gallery B (h): chain-polycatenane compound");
        add(dpm_j(), "gallery B (j): full-polycatenane compound, one component");
        add(dpm_k(), "gallery B (k): full-polycatenane compound, two components");
        add(dpm_o(), "gallery B (o): essential cover compound, five curves");
        add(dpm_p(), "gallery B (p): essential cover compound, four curves");
        add(dpm_q(), "gallery B (q): essential cover compound, six curves");
        add(dpm_r(), "gallery B (r): null-essential cover compound");
        add(dpm_s(), "gallery B (s): chain-essential cover compound, two chains");
        add(dpm_t(), "gallery B (t): null-chain-essential cover compound");
        add(dpm_u(), "gallery B (u): essential-full-polycatenane cover compound");
        add(dpm_v(), "gallery B (v): essential-full cover, four essential curves");
        add(dpm_w(), "gallery B (w): null-essential-full cover, two knots");
        add(dpm_x(), "gallery B (x): chain-essential-full cover");
        add(dpm_y(), "gallery B (y): mixed cover compound");
        for (int n : {1, 2, 3, 7, 8, 9, 10, 11, 13, 14, 15, 19, 20})
            add(tbl(n), "table stand-in " + std::to_string(n));
        return v;
    }();
    return entries;
}

inline const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace dpt
