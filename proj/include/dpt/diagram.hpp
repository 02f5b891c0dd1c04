#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpt/wrap.hpp"

namespace dpt {

enum class Role { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

/// The four ports of a crossing.  An edge's tail binds an out-port, its
/// head an in-port; strand orientation runs in-port -> out-port through
/// the crossing.
enum class Port : int { UnderIn = 0, UnderOut = 1, OverIn = 2, OverOut = 3 };

inline bool is_in_port(Port p) { return p == Port::UnderIn || p == Port::OverIn; }
inline bool is_out_port(Port p) { return !is_in_port(p); }
inline Role port_role(Port p) {
    return (p == Port::UnderIn || p == Port::UnderOut) ? Role::Under : Role::Over;
}
inline Port in_port(Role r) { return r == Role::Under ? Port::UnderIn : Port::OverIn; }
inline Port out_port(Role r) { return r == Role::Under ? Port::UnderOut : Port::OverOut; }

inline const char* port_name(Port p) {
    switch (p) {
        case Port::UnderIn: return "under_in";
        case Port::UnderOut: return "under_out";
        case Port::OverIn: return "over_in";
        case Port::OverOut: return "over_out";
    }
    return "?";
}

/// Counterclockwise cyclic port order around a crossing, derived from its
/// sign.  This fixes the rotation system (and hence the faces) without any
/// geometric coordinates.
inline std::array<Port, 4> ccw_ports(int sign) {
    if (sign >= 0)
        return {Port::UnderIn, Port::OverOut, Port::UnderOut, Port::OverIn};
    return {Port::UnderIn, Port::OverIn, Port::UnderOut, Port::OverOut};
}

inline Port ccw_next(int sign, Port p) {
    const auto order = ccw_ports(sign);
    for (int i = 0; i < 4; ++i)
        if (order[static_cast<std::size_t>(i)] == p) return order[static_cast<std::size_t>((i + 1) % 4)];
    return p;
}

inline Port cw_next(int sign, Port p) {
    const auto order = ccw_ports(sign);
    for (int i = 0; i < 4; ++i)
        if (order[static_cast<std::size_t>(i)] == p) return order[static_cast<std::size_t>((i + 3) % 4)];
    return p;
}

struct Crossing {
    std::string id;
    int sign = +1; // writhe sign with respect to the strand orientations
};

struct PortRef {
    std::string crossing;
    Port port = Port::UnderIn;

    friend bool operator==(const PortRef& a, const PortRef& b) {
        return a.crossing == b.crossing && a.port == b.port;
    }
    friend bool operator<(const PortRef& a, const PortRef& b) {
        if (a.crossing != b.crossing) return a.crossing < b.crossing;
        return static_cast<int>(a.port) < static_cast<int>(b.port);
    }
};

struct Edge {
    std::string id;
    PortRef tail; // out-port of some crossing
    PortRef head; // in-port of some crossing
    WrapVector wrap{};
};

/// Declares a crossing between a free loop and another free loop without
/// spelling out ports: `other` is the strand crossed, `translate` the lift
/// position of the other strand's passage relative to this loop's passage.
/// Loops carrying marks are desugared to edged components by normalize().
struct OverMark {
    std::string other;
    WrapVector translate{};
    bool over = true;
    int sign = +1;
};

struct FreeLoop {
    std::string id;
    WrapVector wrap{};
    std::vector<OverMark> over_marks;
};

struct TorusDiagram {
    std::string name;
    std::string source; // free-form provenance note, carried through io
    std::vector<Crossing> crossings;
    std::vector<Edge> edges;
    std::vector<FreeLoop> free_loops;

    bool has_over_marks() const {
        for (const auto& l : free_loops)
            if (!l.over_marks.empty()) return true;
        return false;
    }

    const Crossing* find_crossing(const std::string& id) const {
        for (const auto& c : crossings)
            if (c.id == id) return &c;
        return nullptr;
    }
};

struct Violation {
    std::string code;
    std::string id;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string code, std::string id, std::string message) {
        ok = false;
        violations.push_back({std::move(code), std::move(id), std::move(message)});
    }
};

namespace detail {

inline void check_unique_ids(const TorusDiagram& d, ValidationReport& rep) {
    std::set<std::string> seen;
    for (const auto& c : d.crossings)
        if (!seen.insert(c.id).second) rep.add("duplicate id", c.id, "crossing id used twice");
    seen.clear();
    for (const auto& e : d.edges)
        if (!seen.insert(e.id).second) rep.add("duplicate id", e.id, "edge id used twice");
    seen.clear();
    for (const auto& l : d.free_loops)
        if (!seen.insert(l.id).second) rep.add("duplicate id", l.id, "free loop id used twice");
}

inline void check_marks(const TorusDiagram& d, ValidationReport& rep) {
    std::set<std::string> loop_ids;
    for (const auto& l : d.free_loops) loop_ids.insert(l.id);
    for (const auto& l : d.free_loops)
        for (const auto& m : l.over_marks) {
            if (!loop_ids.count(m.other))
                rep.add("bad mark", l.id, "over_mark references '" + m.other + "', which is not a free loop");
            if (m.sign != 1 && m.sign != -1)
                rep.add("bad mark", l.id, "over_mark sign must be +1 or -1");
        }
}

} // namespace detail

/// Desugars over_marks: every loop touched by a mark becomes an edged
/// component passing through one fresh crossing per mark.  Passage order
/// along a loop: its own marks in list order, then passages induced by
/// other loops' marks on it, ordered by (owner loop id, mark index).
/// Positions realize each mark's declared translate, so downstream offset
/// labels reproduce the translates up to the usual per-pair gauge constant.
inline TorusDiagram normalize(const TorusDiagram& input) {
    if (!input.has_over_marks()) return input;

    TorusDiagram d = input;
    ValidationReport rep;
    detail::check_unique_ids(d, rep);
    detail::check_marks(d, rep);
    if (!rep.ok)
        throw std::invalid_argument("cannot normalize '" + d.name + "': " + rep.violations.front().code +
                                    " (" + rep.violations.front().message + ")");

    std::map<std::string, const FreeLoop*> loops;
    for (const auto& l : d.free_loops) loops[l.id] = &l;

    // Loops that participate in at least one crossing.
    std::set<std::string> touched;
    for (const auto& l : d.free_loops)
        for (const auto& m : l.over_marks) {
            touched.insert(l.id);
            touched.insert(m.other);
        }

    struct Passage {
        std::string crossing;
        Role role;
        WrapVector position;
    };
    std::map<std::string, std::vector<Passage>> own, induced;

    std::set<std::string> used_ids;
    for (const auto& c : d.crossings) used_ids.insert(c.id);

    for (const auto& id : touched) {
        const FreeLoop& l = *loops.at(id);
        for (std::size_t k = 0; k < l.over_marks.size(); ++k) {
            const OverMark& m = l.over_marks[k];
            std::string cid = l.id + ":" + std::to_string(k);
            while (used_ids.count(cid)) cid += "'";
            used_ids.insert(cid);
            d.crossings.push_back({cid, m.sign});
            const Role owner_role = m.over ? Role::Over : Role::Under;
            own[l.id].push_back({cid, owner_role, {0, 0}});
            induced[m.other].push_back({cid, opposite(owner_role), m.translate});
        }
    }

    std::set<std::string> used_edge_ids;
    for (const auto& e : d.edges) used_edge_ids.insert(e.id);

    for (const auto& id : touched) {
        std::vector<Passage> seq = own[id];
        for (const auto& p : induced[id]) seq.push_back(p);
        const FreeLoop& l = *loops.at(id);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const Passage& cur = seq[i];
            const Passage& nxt = seq[(i + 1) % seq.size()];
            WrapVector wrap = nxt.position - cur.position;
            if (i + 1 == seq.size()) wrap = l.wrap + seq.front().position - cur.position;
            std::string eid = id + "_" + std::to_string(i);
            while (used_edge_ids.count(eid)) eid += "'";
            used_edge_ids.insert(eid);
            d.edges.push_back({eid,
                               {cur.crossing, out_port(cur.role)},
                               {nxt.crossing, in_port(nxt.role)},
                               wrap});
        }
    }

    std::vector<FreeLoop> remaining;
    for (auto& l : d.free_loops)
        if (!touched.count(l.id)) remaining.push_back(std::move(l));
    d.free_loops = std::move(remaining);
    return d;
}

/// Structural validation.  Violations are data, not failures: a report
/// listing each offending id is returned instead of throwing.
inline ValidationReport validate(const TorusDiagram& input) {
    ValidationReport rep;
    detail::check_unique_ids(input, rep);
    detail::check_marks(input, rep);
    if (!rep.ok) return rep;

    const TorusDiagram d = normalize(input);

    std::map<std::string, int> sign_of;
    for (const auto& c : d.crossings) sign_of[c.id] = c.sign;

    std::map<std::pair<std::string, Port>, std::string> bound; // port -> edge
    for (const auto& e : d.edges) {
        if (!sign_of.count(e.tail.crossing))
            rep.add("unbound port", e.id, "tail references missing crossing '" + e.tail.crossing + "'");
        else if (!is_out_port(e.tail.port))
            rep.add("bad port kind", e.id, "tail must bind an out-port");
        if (!sign_of.count(e.head.crossing))
            rep.add("unbound port", e.id, "head references missing crossing '" + e.head.crossing + "'");
        else if (!is_in_port(e.head.port))
            rep.add("bad port kind", e.id, "head must bind an in-port");

        for (const PortRef& ref : {e.tail, e.head}) {
            if (!sign_of.count(ref.crossing)) continue;
            auto key = std::make_pair(ref.crossing, ref.port);
            auto [it, inserted] = bound.emplace(key, e.id);
            if (!inserted)
                rep.add("double binding", e.id,
                        std::string(port_name(ref.port)) + " of '" + ref.crossing +
                            "' already bound by edge '" + it->second + "'");
        }
    }
    for (const auto& c : d.crossings)
        for (Port p : {Port::UnderIn, Port::UnderOut, Port::OverIn, Port::OverOut})
            if (!bound.count({c.id, p}))
                rep.add("unbound port", c.id, std::string(port_name(p)) + " is not bound to any edge");
    return rep;
}

/// One strand passage through a crossing, with its lift position (the
/// accumulated translate of the strand's walk when it arrives there).
struct PassageSpec {
    std::string crossing;
    Role role = Role::Over;
    WrapVector position{};
};

/// A closed strand given as its cyclic passage sequence.  Edge wraps are
/// the successive position differences; the closing edge also carries the
/// strand's homology.
struct StrandSpec {
    std::string name;
    std::vector<PassageSpec> passages;
    WrapVector homology{};
};

inline TorusDiagram build_diagram(std::string name,
                                  const std::vector<Crossing>& crossings,
                                  const std::vector<StrandSpec>& strands,
                                  std::vector<FreeLoop> loops = {}) {
    TorusDiagram d;
    d.name = std::move(name);
    d.crossings = crossings;
    d.free_loops = std::move(loops);
    for (const auto& s : strands) {
        if (s.passages.empty())
            throw std::invalid_argument("strand '" + s.name + "' has no passages; use a FreeLoop");
        for (std::size_t i = 0; i < s.passages.size(); ++i) {
            const PassageSpec& cur = s.passages[i];
            const PassageSpec& nxt = s.passages[(i + 1) % s.passages.size()];
            WrapVector wrap = nxt.position - cur.position;
            if (i + 1 == s.passages.size())
                wrap = s.homology + s.passages.front().position - cur.position;
            d.edges.push_back({s.name + std::to_string(i),
                               {cur.crossing, out_port(cur.role)},
                               {nxt.crossing, in_port(nxt.role)},
                               wrap});
        }
    }
    return d;
}

} // namespace dpt
