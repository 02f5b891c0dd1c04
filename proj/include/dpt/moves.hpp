#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/lattice.hpp"
#include "dpt/trace.hpp"

namespace dpt {

struct MoveError : std::runtime_error {
    explicit MoveError(const std::string& what) : std::runtime_error(what) {}
};

// --- shifts -----------------------------------------------------------------

/// Cell reassignment of crossings; the diagram-visible effect of
/// translating the fundamental domain.  Missing ids default to zero.
struct GaugeAssignment {
    std::map<std::string, WrapVector> shift;

    WrapVector at(const std::string& crossing) const {
        auto it = shift.find(crossing);
        return it == shift.end() ? WrapVector{0, 0} : it->second;
    }
};

inline TorusDiagram gauge_shift(const TorusDiagram& input, const GaugeAssignment& g) {
    TorusDiagram d = normalize(input);
    std::set<std::string> ids;
    for (const auto& c : d.crossings) ids.insert(c.id);
    for (const auto& [id, unused] : g.shift)
        if (!ids.count(id))
            throw std::invalid_argument("gauge shift references unknown crossing '" + id + "'");
    for (auto& e : d.edges) e.wrap += g.at(e.head.crossing) - g.at(e.tail.crossing);
    return d;
}

// --- basis change -----------------------------------------------------------

/// Unimodular change of the lattice basis; wraps map linearly.  det must
/// be +1 unless reflections are explicitly allowed (a det -1 map reverses
/// the torus orientation and is not an equivalence).
inline TorusDiagram rebase(const TorusDiagram& input, const Mat2& m, bool allow_reflection = false) {
    const std::int64_t det = m.det();
    if (det != 1 && !(allow_reflection && det == -1))
        throw std::invalid_argument("rebase matrix must have det +1 (got det " +
                                    std::to_string(det) + ")");
    TorusDiagram d = input;
    for (auto& e : d.edges) e.wrap = m.apply(e.wrap);
    for (auto& l : d.free_loops) {
        l.wrap = m.apply(l.wrap);
        for (auto& mk : l.over_marks) mk.translate = m.apply(mk.translate);
    }
    return d;
}

// --- covers -----------------------------------------------------------------

namespace detail {

inline std::string cover_suffix(WrapVector t) {
    return "@" + std::to_string(t.du) + "," + std::to_string(t.dv);
}

} // namespace detail

/// Finite cover: the columns of l span the sublattice.  Crossings and
/// edges are copied once per coset; an edge with wrap w connects copy t to
/// copy reduce(t + w) and carries the sublattice coordinates of the
/// remainder.  Components merge or split per covering theory.
inline TorusDiagram cover(const TorusDiagram& input, const Mat2& l) {
    if (l.det() < 1)
        throw std::invalid_argument("cover matrix must have det >= 1 (got det " +
                                    std::to_string(l.det()) + ")");
    const TorusDiagram d = normalize(input);
    const CosetSpace cs(l);
    const std::vector<WrapVector> reps = cs.representatives();

    TorusDiagram out;
    out.name = d.name;
    out.source = d.source;
    for (const auto& c : d.crossings)
        for (const auto& t : reps) out.crossings.push_back({c.id + detail::cover_suffix(t), c.sign});
    for (const auto& e : d.edges)
        for (const auto& t : reps) {
            const WrapVector target = t + e.wrap;
            out.edges.push_back({e.id + detail::cover_suffix(t),
                                 {e.tail.crossing + detail::cover_suffix(t), e.tail.port},
                                 {e.head.crossing + detail::cover_suffix(cs.reduce(target)), e.head.port},
                                 cs.quotient(target)});
        }
    for (const auto& loop : d.free_loops) {
        std::set<WrapVector> seen;
        for (const auto& start : reps) {
            if (seen.count(start)) continue;
            WrapVector t = start;
            WrapVector total{0, 0};
            std::int64_t k = 0;
            do {
                seen.insert(t);
                const WrapVector target = t + loop.wrap;
                total += cs.quotient(target);
                t = cs.reduce(target);
                ++k;
            } while (t != start);
            (void)k;
            out.free_loops.push_back({loop.id + detail::cover_suffix(start), total, {}});
        }
    }
    return out;
}

/// Original id of a covered crossing/edge/loop ("c1@0,1" -> "c1").
inline std::string cover_origin(const std::string& id) {
    const auto pos = id.rfind('@');
    return pos == std::string::npos ? id : id.substr(0, pos);
}

// --- faces ------------------------------------------------------------------

struct FaceTraversal {
    std::string edge;
    bool forward = true;

    friend bool operator<(const FaceTraversal& a, const FaceTraversal& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.forward < b.forward;
    }
    friend bool operator==(const FaceTraversal& a, const FaceTraversal& b) {
        return a.edge == b.edge && a.forward == b.forward;
    }
};

/// One face of the diagram on the torus, traced through the sign-derived
/// rotation system.  A face with net wrap (0,0) lifts to a closed region
/// of the doubly periodic diagram.  Free loops take no part in faces.
struct Face {
    std::vector<FaceTraversal> walk;
    WrapVector net_wrap{};
};

inline std::vector<Face> trace_faces(const TorusDiagram& input) {
    const TorusDiagram d = normalize(input);
    std::map<std::string, int> sign_of;
    for (const auto& c : d.crossings) sign_of[c.id] = c.sign;
    std::map<std::pair<std::string, Port>, const Edge*> at_port;
    std::map<std::string, const Edge*> by_id;
    for (const auto& e : d.edges) {
        at_port[{e.tail.crossing, e.tail.port}] = &e;
        at_port[{e.head.crossing, e.head.port}] = &e;
        by_id[e.id] = &e;
    }
    std::vector<FaceTraversal> order;
    for (const auto& [id, e] : by_id) {
        order.push_back({id, true});
        order.push_back({id, false});
    }
    std::set<FaceTraversal> visited;
    std::vector<Face> faces;
    for (const auto& start : order) {
        if (visited.count(start)) continue;
        Face face;
        FaceTraversal cur = start;
        do {
            visited.insert(cur);
            face.walk.push_back(cur);
            const Edge* e = by_id.at(cur.edge);
            face.net_wrap += cur.forward ? e->wrap : -e->wrap;
            const PortRef arrive = cur.forward ? e->head : e->tail;
            const Port next_port = cw_next(sign_of.at(arrive.crossing), arrive.port);
            const Edge* f = at_port.at({arrive.crossing, next_port});
            cur = {f->id, is_out_port(next_port)};
        } while (!(cur == start));
        faces.push_back(std::move(face));
    }
    return faces;
}

// --- strand decomposition ---------------------------------------------------

struct StrandPassage {
    std::string crossing;
    Role role = Role::Over;
    WrapVector position{};
};

struct Strand {
    std::vector<StrandPassage> passages;
    WrapVector homology{};
};

/// Diagram as per-component passage sequences with walk positions, the
/// form every Reidemeister move is performed in.  Rebuilding derives edge
/// wraps as successive position differences (the closing edge also
/// carries the homology), so surgeries only touch sequence order and
/// positions.
struct Strands {
    std::string name;
    std::string source;
    std::vector<Crossing> crossings;
    std::vector<Strand> strands;
    std::vector<FreeLoop> loops;
    std::map<std::string, std::pair<int, int>> edge_gap; // edge id -> (strand, gap index)
};

inline Strands decompose(const TorusDiagram& input) {
    const Trace tr = trace_components(input);
    Strands s;
    s.name = tr.diagram.name;
    s.source = tr.diagram.source;
    s.crossings = tr.diagram.crossings;
    std::sort(s.crossings.begin(), s.crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
    std::map<std::string, const Edge*> by_id;
    for (const auto& e : tr.diagram.edges) by_id[e.id] = &e;
    for (const auto& comp : tr.components) {
        if (comp.is_free_loop()) {
            for (const auto& l : tr.diagram.free_loops)
                if (l.id == comp.free_loop) s.loops.push_back(l);
            continue;
        }
        Strand strand;
        strand.homology = comp.homology;
        WrapVector pos{0, 0};
        const int strand_index = static_cast<int>(s.strands.size());
        for (std::size_t i = 0; i < comp.edge_cycle.size(); ++i) {
            const Edge* e = by_id.at(comp.edge_cycle[i]);
            strand.passages.push_back({e->tail.crossing, port_role(e->tail.port), pos});
            s.edge_gap[e->id] = {strand_index, static_cast<int>(i)};
            pos += e->wrap;
        }
        s.strands.push_back(std::move(strand));
    }
    return s;
}

inline TorusDiagram recompose(const Strands& s) {
    std::vector<StrandSpec> specs;
    for (std::size_t i = 0; i < s.strands.size(); ++i) {
        StrandSpec spec;
        spec.name = "s" + std::to_string(i) + ".";
        spec.homology = s.strands[i].homology;
        for (const auto& p : s.strands[i].passages)
            spec.passages.push_back({p.crossing, p.role, p.position});
        specs.push_back(std::move(spec));
    }
    TorusDiagram d = build_diagram(s.name, s.crossings, specs, s.loops);
    d.source = s.source;
    return d;
}

// --- move sites ---------------------------------------------------------------

/// Location of one Reidemeister move.
///   R1Plus:  a = edge or free-loop id; sign and over_first pick the kink.
///   R1Minus: a = crossing id of the kink.
///   R2Plus:  a = over strand's edge or loop id, b = under strand's;
///            offset = relative lift translate of the new crossing pair.
///   R2Minus: a, b = the bigon's crossings.
///   R3:      a, b, c = the triangle's crossings.
struct MoveSite {
    enum class Kind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };
    Kind kind = Kind::R1Plus;
    std::string a, b, c;
    int sign = +1;
    bool over_first = true;
    WrapVector offset{};
};

inline std::string to_string(const MoveSite& m) {
    switch (m.kind) {
        case MoveSite::Kind::R1Plus:
            return "R1+:" + m.a + ":" + (m.sign > 0 ? "+1" : "-1") + ":" +
                   (m.over_first ? "over" : "under");
        case MoveSite::Kind::R1Minus: return "R1-:" + m.a;
        case MoveSite::Kind::R2Plus:
            return "R2+:" + m.a + ":" + m.b + ":" + std::to_string(m.offset.du) + "," +
                   std::to_string(m.offset.dv);
        case MoveSite::Kind::R2Minus: return "R2-:" + m.a + "," + m.b;
        case MoveSite::Kind::R3: return "R3:" + m.a + "," + m.b + "," + m.c;
    }
    return "?";
}

namespace detail {

inline std::string fresh_id(const std::set<std::string>& used, const std::string& prefix) {
    for (int n = 1;; ++n) {
        std::string id = prefix + std::to_string(n);
        if (!used.count(id)) return id;
    }
}

inline std::set<std::string> all_ids(const TorusDiagram& d) {
    std::set<std::string> ids;
    for (const auto& c : d.crossings) ids.insert(c.id);
    for (const auto& e : d.edges) ids.insert(e.id);
    for (const auto& l : d.free_loops) ids.insert(l.id);
    return ids;
}

struct FaceInfo {
    Face face;
    std::vector<std::string> arrival_crossing; // per traversal
    std::vector<Port> arrival_port;
};

struct DiagramIndex {
    std::map<std::string, const Edge*> by_id;
    std::map<std::string, int> sign_of;

    explicit DiagramIndex(const TorusDiagram& d) {
        for (const auto& e : d.edges) by_id[e.id] = &e;
        for (const auto& c : d.crossings) sign_of[c.id] = c.sign;
    }
};

inline std::vector<FaceInfo> face_infos(const TorusDiagram& d, const DiagramIndex& index) {
    std::vector<FaceInfo> out;
    for (auto& f : trace_faces(d)) {
        FaceInfo info;
        info.face = f;
        for (const auto& t : f.walk) {
            const Edge* e = index.by_id.at(t.edge);
            const PortRef arrive = t.forward ? e->head : e->tail;
            info.arrival_crossing.push_back(arrive.crossing);
            info.arrival_port.push_back(arrive.port);
        }
        out.push_back(std::move(info));
    }
    return out;
}

struct BigonPattern {
    std::string over_edge, under_edge;
    std::string c1, c2;
};

/// Matches a removable R2 pair: a two-sided face of net wrap zero whose
/// sides run over-over and under-under between two crossings of opposite
/// sign.
inline std::optional<BigonPattern> match_r2(const DiagramIndex& index, const Face& f) {
    if (f.walk.size() != 2 || !f.net_wrap.is_zero()) return std::nullopt;
    if (f.walk[0].edge == f.walk[1].edge) return std::nullopt;
    const auto& sign_of = index.sign_of;
    const Edge* e0 = index.by_id.at(f.walk[0].edge);
    const Edge* e1 = index.by_id.at(f.walk[1].edge);
    auto role_pair = [](const Edge* e) {
        return std::make_pair(port_role(e->tail.port), port_role(e->head.port));
    };
    const Edge* over = nullptr;
    const Edge* under = nullptr;
    for (const Edge* e : {e0, e1}) {
        if (role_pair(e) == std::make_pair(Role::Over, Role::Over)) over = e;
        if (role_pair(e) == std::make_pair(Role::Under, Role::Under)) under = e;
    }
    if (!over || !under) return std::nullopt;
    if (over->tail.crossing == over->head.crossing) return std::nullopt;
    std::set<std::string> cs{over->tail.crossing, over->head.crossing,
                             under->tail.crossing, under->head.crossing};
    if (cs.size() != 2) return std::nullopt;
    auto it = cs.begin();
    const std::string c1 = *it++;
    const std::string c2 = *it;
    if (sign_of.at(c1) + sign_of.at(c2) != 0) return std::nullopt;
    return BigonPattern{over->id, under->id, c1, c2};
}

struct TrianglePattern {
    std::string p, q, x;            // p, q carry the sliding strand on top
    std::string top_arc;            // face edge p-q on the sliding strand
    std::string m_arc, b_arc;       // face edges p-x and q-x
    Role m_role_at_x = Role::Over;  // role of the m strand's passage at x
    Role b_role_at_x = Role::Over;
};

inline std::optional<TrianglePattern> match_r3(const DiagramIndex& index, const FaceInfo& info) {
    const Face& f = info.face;
    if (f.walk.size() != 3 || !f.net_wrap.is_zero()) return std::nullopt;
    const auto& by_id = index.by_id;
    std::set<std::string> edges{f.walk[0].edge, f.walk[1].edge, f.walk[2].edge};
    if (edges.size() != 3) return std::nullopt;
    std::set<std::string> crossings(info.arrival_crossing.begin(), info.arrival_crossing.end());
    if (crossings.size() != 3) return std::nullopt;

    auto endpoints = [&](const std::string& eid) {
        const Edge* e = by_id.at(eid);
        return std::make_pair(e->tail, e->head);
    };
    // The sliding strand's arc has over-role ports at both ends.
    for (const auto& top : f.walk) {
        auto [t0, t1] = endpoints(top.edge);
        if (port_role(t0.port) != Role::Over || port_role(t1.port) != Role::Over) continue;
        const std::string p = t0.crossing;
        const std::string q = t1.crossing;
        if (p == q) continue;
        std::string x;
        for (const auto& cid : crossings)
            if (cid != p && cid != q) x = cid;
        if (x.empty()) continue;
        TrianglePattern pat;
        pat.p = p;
        pat.q = q;
        pat.x = x;
        pat.top_arc = top.edge;
        bool ok = true;
        for (const auto& t : f.walk) {
            if (t.edge == top.edge) continue;
            auto [a0, a1] = endpoints(t.edge);
            const bool touches_p = a0.crossing == p || a1.crossing == p;
            const bool touches_q = a0.crossing == q || a1.crossing == q;
            const PortRef& end_at_pq = (a0.crossing == p || a0.crossing == q) ? a0 : a1;
            const PortRef& end_at_x = (a0.crossing == x) ? a0 : a1;
            if (end_at_x.crossing != x) { ok = false; break; }
            // The side strands must pass under the sliding strand.
            if (port_role(end_at_pq.port) != Role::Under) { ok = false; break; }
            if (touches_p) {
                pat.m_arc = t.edge;
                pat.m_role_at_x = port_role(end_at_x.port);
            } else if (touches_q) {
                pat.b_arc = t.edge;
                pat.b_role_at_x = port_role(end_at_x.port);
            } else {
                ok = false;
                break;
            }
        }
        if (ok && !pat.m_arc.empty() && !pat.b_arc.empty()) return pat;
    }
    return std::nullopt;
}

/// Rotate a strand so that the passage at `index` becomes the walk start;
/// positions of the moved prefix advance by one period.
inline void rotate_strand(Strand& s, std::size_t index) {
    if (index == 0 || s.passages.empty()) return;
    std::vector<StrandPassage> rotated;
    rotated.reserve(s.passages.size());
    for (std::size_t i = index; i < s.passages.size(); ++i) rotated.push_back(s.passages[i]);
    for (std::size_t i = 0; i < index; ++i) {
        StrandPassage p = s.passages[i];
        p.position += s.homology;
        rotated.push_back(p);
    }
    s.passages = std::move(rotated);
}

struct PassageLoc {
    int strand = -1;
    int index = -1;
};

inline std::map<std::pair<std::string, int>, PassageLoc> locate(const Strands& s) {
    std::map<std::pair<std::string, int>, PassageLoc> loc;
    for (std::size_t i = 0; i < s.strands.size(); ++i)
        for (std::size_t j = 0; j < s.strands[i].passages.size(); ++j) {
            const auto& p = s.strands[i].passages[j];
            loc[{p.crossing, static_cast<int>(p.role)}] = {static_cast<int>(i),
                                                           static_cast<int>(j)};
        }
    return loc;
}

inline WrapVector gap_wrap(const Strand& s, std::size_t from) {
    const std::size_t to = (from + 1) % s.passages.size();
    WrapVector w = s.passages[to].position - s.passages[from].position;
    if (to == 0) w += s.homology;
    return w;
}

/// In-place rotation of the cyclic window of `len` passage slots starting
/// at `start`: the last entry moves to the front (or the first to the
/// back).  Entry slots keep their place in the cycle, so the closing
/// homology edge stays at the sequence boundary.
inline void rotate_window(Strand& s, std::size_t start, std::size_t len, bool last_to_front) {
    const std::size_t n = s.passages.size();
    std::vector<StrandPassage> window;
    window.reserve(len);
    for (std::size_t j = 0; j < len; ++j) window.push_back(s.passages[(start + j) % n]);
    if (last_to_front)
        std::rotate(window.begin(), window.end() - 1, window.end());
    else
        std::rotate(window.begin(), window.begin() + 1, window.end());
    for (std::size_t j = 0; j < len; ++j) s.passages[(start + j) % n] = window[j];
}

/// Slides a block of passages (the moving crossing's passages on its side
/// strand) across the anchor passage, through the gap joining them whose
/// wrap equals `arc_wrap` (the triangle's side arc).  The strand is first
/// rebased so the affected run is interior; rebasing is a no-op on the
/// rebuilt diagram.
inline void slide_across_arc(Strands& w, const std::set<std::pair<std::string, int>>& block,
                             const std::pair<std::string, Role>& anchor, WrapVector arc_wrap) {
    const auto loc = locate(w);
    const auto anchor_it = loc.find({anchor.first, static_cast<int>(anchor.second)});
    if (anchor_it == loc.end()) throw MoveError("R3: anchor passage not found");
    const PassageLoc a = anchor_it->second;
    Strand& strand = w.strands[static_cast<std::size_t>(a.strand)];
    const std::size_t n = strand.passages.size();
    const std::size_t k = block.size();
    if (n < k + 1) throw MoveError("R3: strand too short for the slide");

    auto run_matches = [&](std::size_t start, bool anchor_first) {
        // Window of k+1 slots from start: anchor at one end, block filling
        // the rest in any internal order.
        const std::size_t anchor_slot = anchor_first ? start : start + k;
        if (!(strand.passages[anchor_slot % n].crossing == anchor.first &&
              strand.passages[anchor_slot % n].role == anchor.second))
            return false;
        std::set<std::pair<std::string, int>> got;
        for (std::size_t j = 0; j < k; ++j) {
            const StrandPassage& p = strand.passages[(start + (anchor_first ? 1 + j : j)) % n];
            got.insert({p.crossing, static_cast<int>(p.role)});
        }
        return got == block;
    };

    const auto ai = static_cast<std::size_t>(a.index);
    // Candidate runs: block after the anchor (arc gap = ai) or block before
    // it (arc gap = ai - 1 cyclically).
    struct Run {
        std::size_t start;
        bool anchor_first;
        std::size_t gap;
    };
    std::vector<Run> runs;
    if (run_matches(ai, true)) runs.push_back({ai, true, ai});
    if (run_matches((ai + n - k) % n, false)) runs.push_back({(ai + n - k) % n, false, (ai + n - 1) % n});
    if (runs.empty()) throw MoveError("R3: slide unit not adjacent to the crossing");
    const Run* chosen = &runs.front();
    if (runs.size() > 1) {
        for (const Run& r : runs)
            if (gap_wrap(strand, r.gap) == arc_wrap) {
                chosen = &r;
                break;
            }
    }
    const Run run = *chosen;
    rotate_strand(strand, run.start);
    rotate_window(strand, 0, k + 1, /*last_to_front=*/!run.anchor_first);
}

/// Shift every passage of one crossing by delta (cell motions are frame
/// independent, so the same shift applies on both strands through it).
inline void shift_crossing(Strands& w, const std::string& crossing, WrapVector delta) {
    for (auto& strand : w.strands)
        for (auto& p : strand.passages)
            if (p.crossing == crossing) p.position += delta;
}

inline void erase_crossing(Strands& s, const std::string& id) {
    for (auto it = s.crossings.begin(); it != s.crossings.end(); ++it)
        if (it->id == id) {
            s.crossings.erase(it);
            return;
        }
}

/// Drop passages of the named crossings everywhere; strands emptied by the
/// removal close up into free loops carrying their homology.
inline void remove_crossing_passages(Strands& s, const std::set<std::string>& crossings,
                                     std::set<std::string>& used_ids) {
    for (auto& strand : s.strands) {
        std::vector<StrandPassage> kept;
        for (const auto& p : strand.passages)
            if (!crossings.count(p.crossing)) kept.push_back(p);
        strand.passages = std::move(kept);
    }
    std::vector<Strand> strands;
    for (auto& strand : s.strands) {
        if (strand.passages.empty()) {
            const std::string id = fresh_id(used_ids, "loop");
            used_ids.insert(id);
            s.loops.push_back({id, strand.homology, {}});
        } else {
            strands.push_back(std::move(strand));
        }
    }
    s.strands = std::move(strands);
    for (const auto& c : crossings) erase_crossing(s, c);
}

} // namespace detail

// --- apply ------------------------------------------------------------------

inline std::vector<MoveSite> r1_minus_sites(const TorusDiagram& d);

inline TorusDiagram apply_move(const TorusDiagram& input, const MoveSite& site) {
    const TorusDiagram d = normalize(input);
    {
        const ValidationReport rep = validate(d);
        if (!rep.ok) throw MoveError("diagram invalid before move: " + rep.violations.front().code);
    }
    Strands s = decompose(d);
    std::set<std::string> used = detail::all_ids(d);

    auto find_loop = [&s](const std::string& id) -> int {
        for (std::size_t i = 0; i < s.loops.size(); ++i)
            if (s.loops[i].id == id) return static_cast<int>(i);
        return -1;
    };

    switch (site.kind) {
        case MoveSite::Kind::R1Plus: {
            const std::string cid = detail::fresh_id(used, "m");
            const Role first = site.over_first ? Role::Over : Role::Under;
            const int li = find_loop(site.a);
            if (li >= 0) {
                Strand strand;
                strand.homology = s.loops[static_cast<std::size_t>(li)].wrap;
                strand.passages = {{cid, first, {0, 0}}, {cid, opposite(first), {0, 0}}};
                s.loops.erase(s.loops.begin() + li);
                s.strands.push_back(std::move(strand));
            } else {
                auto it = s.edge_gap.find(site.a);
                if (it == s.edge_gap.end())
                    throw MoveError("R1+ target '" + site.a + "' is not an edge or free loop");
                auto [si, gap] = it->second;
                Strand& strand = s.strands[static_cast<std::size_t>(si)];
                const WrapVector q = strand.passages[static_cast<std::size_t>(gap)].position;
                strand.passages.insert(strand.passages.begin() + gap + 1,
                                       {{cid, first, q}, {cid, opposite(first), q}});
            }
            s.crossings.push_back({cid, site.sign});
            return recompose(s);
        }

        case MoveSite::Kind::R1Minus: {
            const auto loc = detail::locate(s);
            auto over = loc.find({site.a, static_cast<int>(Role::Over)});
            auto under = loc.find({site.a, static_cast<int>(Role::Under)});
            if (over == loc.end() || under == loc.end())
                throw MoveError("R1- target '" + site.a + "' is not a crossing of the diagram");
            if (over->second.strand != under->second.strand)
                throw MoveError("R1- at '" + site.a + "': passages lie on different strands");
            Strand& strand = s.strands[static_cast<std::size_t>(over->second.strand)];
            const std::size_t n = strand.passages.size();
            const std::size_t i = static_cast<std::size_t>(over->second.index);
            const std::size_t j = static_cast<std::size_t>(under->second.index);
            const bool i_first = (j == (i + 1) % n);
            const bool j_first = (i == (j + 1) % n);
            bool curl_ok = false;
            if (i_first && detail::gap_wrap(strand, i).is_zero()) curl_ok = true;
            if (j_first && detail::gap_wrap(strand, j).is_zero()) curl_ok = true;
            if (!curl_ok)
                throw MoveError("R1- at '" + site.a +
                                "': no curl with zero wrap joins its two passages");
            std::set<std::string> remove{site.a};
            detail::remove_crossing_passages(s, remove, used);
            return recompose(s);
        }

        case MoveSite::Kind::R2Minus: {
            bool found = false;
            const detail::DiagramIndex index(d);
            for (const auto& info : detail::face_infos(d, index)) {
                auto pat = detail::match_r2(index, info.face);
                if (!pat) continue;
                if (std::set<std::string>{pat->c1, pat->c2} != std::set<std::string>{site.a, site.b})
                    continue;
                found = true;
                break;
            }
            if (!found)
                throw MoveError("R2- at '" + site.a + "','" + site.b +
                                "': no removable bigon face with these crossings");
            std::set<std::string> remove{site.a, site.b};
            detail::remove_crossing_passages(s, remove, used);
            return recompose(s);
        }

        case MoveSite::Kind::R2Plus: {
            const std::string c1 = detail::fresh_id(used, "m");
            used.insert(c1);
            const std::string c2 = detail::fresh_id(used, "m");
            const int la = find_loop(site.a);
            const int lb = find_loop(site.b);
            const bool a_edge = s.edge_gap.count(site.a) > 0;
            const bool b_edge = s.edge_gap.count(site.b) > 0;
            if (!(a_edge || la >= 0))
                throw MoveError("R2+ over strand '" + site.a + "' is not an edge or free loop");
            if (!(b_edge || lb >= 0))
                throw MoveError("R2+ under strand '" + site.b + "' is not an edge or free loop");
            if (a_edge && b_edge) {
                // Pushing one edge across to the other needs a shared face.
                bool shared = false;
                for (const auto& f : trace_faces(d)) {
                    bool ha = false, hb = false;
                    int a_count = 0;
                    for (const auto& t : f.walk) {
                        if (t.edge == site.a) { ha = true; ++a_count; }
                        if (t.edge == site.b) hb = true;
                    }
                    if (site.a == site.b ? a_count >= 2 : (ha && hb)) shared = true;
                }
                if (!shared)
                    throw MoveError("R2+ strands '" + site.a + "' and '" + site.b +
                                    "' do not bound a common face");
            }
            // Uniform construction: both over passages sit at one lift cell,
            // both under passages at that cell plus the offset, so the new
            // arcs carry no wrap and the inserted bigon lifts to a disk.
            // Labels of the pair then agree modulo the homology subgroup and
            // cancel in the linking profile.  A strand freshly made from a
            // loop has a free gauge, so for such pairs the offset fixes the
            // placement only up to the pair's gauge constant; a self poke
            // realizes it exactly (mod the loop's homology).
            const WrapVector d_req = site.offset;
            if (la >= 0 && la == lb) {
                Strand strand;
                strand.homology = s.loops[static_cast<std::size_t>(la)].wrap;
                strand.passages = {{c1, Role::Over, {0, 0}},
                                   {c2, Role::Over, {0, 0}},
                                   {c1, Role::Under, d_req},
                                   {c2, Role::Under, d_req}};
                s.loops.erase(s.loops.begin() + la);
                s.strands.push_back(std::move(strand));
            } else if (a_edge && b_edge) {
                auto [sa, ga] = s.edge_gap.at(site.a);
                auto [sb, gb] = s.edge_gap.at(site.b);
                const WrapVector qa =
                    s.strands[static_cast<std::size_t>(sa)].passages[static_cast<std::size_t>(ga)].position;
                if (sa == sb && ga == gb) {
                    Strand& strand = s.strands[static_cast<std::size_t>(sa)];
                    strand.passages.insert(strand.passages.begin() + ga + 1,
                                           {{c1, Role::Over, qa},
                                            {c2, Role::Over, qa},
                                            {c1, Role::Under, qa + d_req},
                                            {c2, Role::Under, qa + d_req}});
                } else {
                    // Insert by descending gap index within a strand so both
                    // indices stay valid.
                    const WrapVector qu = qa + d_req;
                    auto insert_pair = [&](int si, int gap, Role role, WrapVector pos) {
                        Strand& strand = s.strands[static_cast<std::size_t>(si)];
                        strand.passages.insert(strand.passages.begin() + gap + 1,
                                               {{c1, role, pos}, {c2, role, pos}});
                    };
                    if (sa == sb) {
                        if (ga > gb) {
                            insert_pair(sa, ga, Role::Over, qa);
                            insert_pair(sb, gb, Role::Under, qu);
                        } else {
                            insert_pair(sb, gb, Role::Under, qu);
                            insert_pair(sa, ga, Role::Over, qa);
                        }
                    } else {
                        insert_pair(sa, ga, Role::Over, qa);
                        insert_pair(sb, gb, Role::Under, qu);
                    }
                }
            } else if (a_edge && lb >= 0) {
                auto [sa, ga] = s.edge_gap.at(site.a);
                const WrapVector wb = s.loops[static_cast<std::size_t>(lb)].wrap;
                Strand& strand = s.strands[static_cast<std::size_t>(sa)];
                const WrapVector o =
                    strand.passages[static_cast<std::size_t>(ga)].position;
                strand.passages.insert(strand.passages.begin() + ga + 1,
                                       {{c1, Role::Over, o}, {c2, Role::Over, o}});
                Strand under;
                under.homology = wb;
                under.passages = {{c1, Role::Under, o + d_req}, {c2, Role::Under, o + d_req}};
                s.loops.erase(s.loops.begin() + lb);
                s.strands.push_back(std::move(under));
            } else if (la >= 0 && b_edge) {
                auto [sb, gb] = s.edge_gap.at(site.b);
                const WrapVector wa = s.loops[static_cast<std::size_t>(la)].wrap;
                Strand& strand = s.strands[static_cast<std::size_t>(sb)];
                strand.passages.insert(strand.passages.begin() + gb + 1,
                                       {{c1, Role::Under, d_req}, {c2, Role::Under, d_req}});
                Strand over;
                over.homology = wa;
                over.passages = {{c1, Role::Over, {0, 0}}, {c2, Role::Over, {0, 0}}};
                s.loops.erase(s.loops.begin() + la);
                s.strands.push_back(std::move(over));
            } else {
                const WrapVector wa = s.loops[static_cast<std::size_t>(la)].wrap;
                const WrapVector wb = s.loops[static_cast<std::size_t>(lb)].wrap;
                Strand over;
                over.homology = wa;
                over.passages = {{c1, Role::Over, {0, 0}}, {c2, Role::Over, {0, 0}}};
                Strand under;
                under.homology = wb;
                under.passages = {{c1, Role::Under, d_req}, {c2, Role::Under, d_req}};
                const int hi = la > lb ? la : lb;
                const int lo = la > lb ? lb : la;
                s.loops.erase(s.loops.begin() + hi);
                s.loops.erase(s.loops.begin() + lo);
                s.strands.push_back(std::move(over));
                s.strands.push_back(std::move(under));
            }
            s.crossings.push_back({c1, +1});
            s.crossings.push_back({c2, -1});
            return recompose(s);
        }

        case MoveSite::Kind::R3: {
            std::optional<detail::TrianglePattern> pat;
            const detail::DiagramIndex index(d);
            for (const auto& info : detail::face_infos(d, index)) {
                auto m = detail::match_r3(index, info);
                if (!m) continue;
                if (std::set<std::string>{m->p, m->q, m->x} !=
                    std::set<std::string>{site.a, site.b, site.c})
                    continue;
                pat = m;
                break;
            }
            if (!pat)
                throw MoveError("R3 at '" + site.a + "','" + site.b + "','" + site.c +
                                "': no triangle face with one strand over both others");

            // The slide moves the top strand's two crossings across x along
            // the side strands into x's lift cell; a curl corner travels as
            // a block, and the pair may also swap along the top strand.
            // Offsets are preserved by shifting both passages of a moved
            // crossing by the same cell delta.  The geometrically right
            // candidate is recognized by the mirrored triangle reappearing
            // at the same three crossings.
            const auto mirrored = [&](const TorusDiagram& out) {
                if (!validate(out).ok) return false;
                const detail::DiagramIndex out_index(out);
                for (const auto& info : detail::face_infos(out, out_index)) {
                    auto m = detail::match_r3(out_index, info);
                    if (m && std::set<std::string>{m->p, m->q, m->x} ==
                                 std::set<std::string>{pat->p, pat->q, pat->x})
                        return true;
                }
                return false;
            };

            auto pos_of = [&](const std::string& crossing, Role role) -> WrapVector {
                for (const auto& strand : s.strands)
                    for (const auto& p : strand.passages)
                        if (p.crossing == crossing && p.role == role) return p.position;
                throw MoveError("R3: passage not found");
            };
            auto wrap_of = [&](const std::string& edge_id) -> WrapVector {
                for (const auto& e : d.edges)
                    if (e.id == edge_id) return e.wrap;
                throw MoveError("R3: arc edge not found");
            };
            const WrapVector delta_p =
                pos_of(pat->x, pat->m_role_at_x) - pos_of(pat->p, Role::Under);
            const WrapVector delta_q =
                pos_of(pat->x, pat->b_role_at_x) - pos_of(pat->q, Role::Under);
            const WrapVector m_wrap = wrap_of(pat->m_arc);
            const WrapVector b_wrap = wrap_of(pat->b_arc);
            const WrapVector t_wrap = wrap_of(pat->top_arc);

            const auto shared_x = [&]() {
                const auto loc = detail::locate(s);
                const detail::PassageLoc xm = loc.at({pat->x, static_cast<int>(pat->m_role_at_x)});
                const detail::PassageLoc xb = loc.at({pat->x, static_cast<int>(pat->b_role_at_x)});
                return xm.strand == xb.strand && xm.index == xb.index;
            }();

            using Block = std::set<std::pair<std::string, int>>;
            std::vector<Block> m_units{{{pat->p, static_cast<int>(Role::Under)}}};
            std::vector<Block> b_units{{{pat->q, static_cast<int>(Role::Under)}}};
            m_units.push_back({{pat->p, static_cast<int>(Role::Under)},
                               {pat->p, static_cast<int>(Role::Over)}});
            b_units.push_back({{pat->q, static_cast<int>(Role::Under)},
                               {pat->q, static_cast<int>(Role::Over)}});

            for (const auto& m_unit : m_units)
                for (const auto& b_unit : b_units)
                    for (const bool swap_top : {false, true}) {
                        Strands work = s;
                        try {
                            if (shared_x) {
                                const auto loc = detail::locate(work);
                                const detail::PassageLoc xm =
                                    loc.at({pat->x, static_cast<int>(pat->m_role_at_x)});
                                Strand& strand =
                                    work.strands[static_cast<std::size_t>(xm.strand)];
                                detail::rotate_strand(
                                    strand, static_cast<std::size_t>(xm.index) >= 1
                                                ? static_cast<std::size_t>(xm.index) - 1
                                                : strand.passages.size() - 1);
                                std::swap(strand.passages[0], strand.passages[2]);
                            } else {
                                detail::slide_across_arc(work, m_unit,
                                                         {pat->x, pat->m_role_at_x}, m_wrap);
                                detail::slide_across_arc(work, b_unit,
                                                         {pat->x, pat->b_role_at_x}, b_wrap);
                            }
                            if (swap_top)
                                detail::slide_across_arc(
                                    work, {{pat->p, static_cast<int>(Role::Over)}},
                                    {pat->q, Role::Over}, t_wrap);
                            detail::shift_crossing(work, pat->p, delta_p);
                            detail::shift_crossing(work, pat->q, delta_q);
                        } catch (const MoveError&) {
                            continue;
                        }
                        const TorusDiagram out = recompose(work);
                        if (mirrored(out)) return out;
                    }
            throw MoveError("R3 at '" + site.a + "','" + site.b + "','" + site.c +
                            "': slide produced no mirrored triangle");
        }
    }
    throw MoveError("unknown move kind");
}

// --- site enumeration ---------------------------------------------------------

inline std::vector<MoveSite> r1_minus_sites(const TorusDiagram& input) {
    const TorusDiagram d = normalize(input);
    std::map<std::string, const Edge*> by_id;
    for (const auto& e : d.edges) by_id[e.id] = &e;
    std::vector<MoveSite> sites;
    std::set<std::string> seen;
    for (const auto& f : trace_faces(d)) {
        if (f.walk.size() != 1 || !f.net_wrap.is_zero()) continue;
        const Edge* e = by_id.at(f.walk[0].edge);
        if (e->tail.crossing != e->head.crossing) continue;
        if (port_role(e->tail.port) == port_role(e->head.port)) continue;
        if (!seen.insert(e->tail.crossing).second) continue;
        MoveSite s;
        s.kind = MoveSite::Kind::R1Minus;
        s.a = e->tail.crossing;
        sites.push_back(s);
    }
    return sites;
}

inline std::vector<MoveSite> r2_minus_sites(const TorusDiagram& input) {
    const TorusDiagram d = normalize(input);
    std::vector<MoveSite> sites;
    std::set<std::pair<std::string, std::string>> seen;
    const detail::DiagramIndex index(d);
    for (const auto& f : trace_faces(d)) {
        auto pat = detail::match_r2(index, f);
        if (!pat) continue;
        auto key = std::minmax(pat->c1, pat->c2);
        if (!seen.insert(key).second) continue;
        MoveSite s;
        s.kind = MoveSite::Kind::R2Minus;
        s.a = key.first;
        s.b = key.second;
        sites.push_back(s);
    }
    return sites;
}

inline std::vector<MoveSite> r3_sites(const TorusDiagram& input) {
    const TorusDiagram d = normalize(input);
    std::vector<MoveSite> sites;
    std::set<std::set<std::string>> seen;
    const detail::DiagramIndex index(d);
    for (const auto& info : detail::face_infos(d, index)) {
        auto pat = detail::match_r3(index, info);
        if (!pat) continue;
        std::set<std::string> key{pat->p, pat->q, pat->x};
        if (!seen.insert(key).second) continue;
        MoveSite s;
        s.kind = MoveSite::Kind::R3;
        auto it = key.begin();
        s.a = *it++;
        s.b = *it++;
        s.c = *it;
        sites.push_back(s);
    }
    return sites;
}

/// Pairs of distinct edges sharing a face (over/under both ways), the
/// legal targets of an edged R2 poke.
inline std::vector<std::pair<std::string, std::string>> r2_plus_edge_pairs(
    const TorusDiagram& input) {
    const TorusDiagram d = normalize(input);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& f : trace_faces(d)) {
        std::set<std::string> edges;
        for (const auto& t : f.walk) edges.insert(t.edge);
        for (const auto& a : edges)
            for (const auto& b : edges)
                if (a != b) pairs.insert({a, b});
    }
    return {pairs.begin(), pairs.end()};
}

} // namespace dpt
