#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dpt/diagram.hpp"
#include "dpt/lattice.hpp"
#include "dpt/wrap.hpp"

namespace dpt {

/// An oriented closed strand traced through the diagram.  Either a cyclic
/// edge list (starting at the smallest edge id) or a single free loop.
struct Component {
    int index = 0;
    std::string repr; // smallest member edge id, or the loop id
    std::vector<std::string> edge_cycle;
    std::string free_loop;
    WrapVector homology{};

    bool is_free_loop() const { return !free_loop.empty(); }
    bool essential() const { return !homology.is_zero(); }
};

struct PassageInfo {
    int component = -1;
    WrapVector position{}; // accumulated walk translate on arrival
};

/// Traced view of a (normalized) diagram: the component partition plus the
/// base-point lift positions every passage gets from the documented walk
/// (start at the component's lowest-id edge tail, accumulate wraps).
struct Trace {
    TorusDiagram diagram; // normalized copy
    std::vector<Component> components;
    std::map<std::string, int> edge_component;
    std::map<std::string, int> loop_component;
    std::map<std::pair<std::string, int>, PassageInfo> passages; // (crossing, Role)
    std::map<std::string, WrapVector> edge_tail_position;

    const PassageInfo& passage(const std::string& crossing, Role role) const {
        return passages.at({crossing, static_cast<int>(role)});
    }
};

inline Trace trace_components(const TorusDiagram& input) {
    ValidationReport rep = validate(input);
    if (!rep.ok)
        throw std::invalid_argument("trace_components called on invalid diagram '" + input.name +
                                    "': " + rep.violations.front().code);
    Trace tr;
    tr.diagram = normalize(input);
    const TorusDiagram& d = tr.diagram;

    std::map<std::string, int> sign_of;
    for (const auto& c : d.crossings) sign_of[c.id] = c.sign;
    std::map<std::pair<std::string, Port>, const Edge*> at_port;
    std::map<std::string, const Edge*> edge_by_id;
    for (const auto& e : d.edges) {
        at_port[{e.tail.crossing, e.tail.port}] = &e;
        at_port[{e.head.crossing, e.head.port}] = &e;
        edge_by_id[e.id] = &e;
    }

    std::vector<std::string> edge_ids;
    edge_ids.reserve(d.edges.size());
    for (const auto& e : d.edges) edge_ids.push_back(e.id);
    std::sort(edge_ids.begin(), edge_ids.end());

    std::set<std::string> visited;
    std::vector<Component> comps;
    for (const auto& start_id : edge_ids) {
        if (visited.count(start_id)) continue;
        Component comp;
        comp.repr = start_id;
        WrapVector pos{0, 0};
        const Edge* e = edge_by_id.at(start_id);
        while (true) {
            visited.insert(e->id);
            comp.edge_cycle.push_back(e->id);
            tr.edge_tail_position[e->id] = pos;
            pos += e->wrap;
            const Role role = port_role(e->head.port);
            tr.passages[{e->head.crossing, static_cast<int>(role)}] = {-1, pos};
            const Edge* next = at_port.at({e->head.crossing, out_port(role)});
            if (next->id == start_id) break;
            e = next;
        }
        comp.homology = pos;
        comps.push_back(std::move(comp));
    }
    for (const auto& l : d.free_loops) {
        Component comp;
        comp.repr = l.id;
        comp.free_loop = l.id;
        comp.homology = l.wrap;
        comps.push_back(std::move(comp));
    }

    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.repr < b.repr; });
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comps[i].index = static_cast<int>(i);
        for (const auto& eid : comps[i].edge_cycle) tr.edge_component[eid] = static_cast<int>(i);
        if (comps[i].is_free_loop()) tr.loop_component[comps[i].free_loop] = static_cast<int>(i);
    }
    for (auto& [key, info] : tr.passages)
        info.component = tr.edge_component.at(at_port.at({key.first, out_port(static_cast<Role>(key.second))})->id);

    tr.components = std::move(comps);
    return tr;
}

inline WrapVector component_homology(const Component& c) { return c.homology; }

/// Label of one crossing: the ordered (over, under) component pair and the
/// lift translate of the under passage relative to the over passage.  The
/// absolute values depend on the walk base points (gauge); differences
/// between labels of the same pair do not.  For intra-component crossings
/// the value is additionally ambiguous by the component's homology; rank
/// computations neutralize this by always adjoining homology generators.
struct CrossingOffsetLabel {
    std::string crossing;
    int over_component = -1;
    int under_component = -1;
    WrapVector offset{};
    int sign = +1;
};

inline std::vector<CrossingOffsetLabel> crossing_offsets(const Trace& tr) {
    std::vector<CrossingOffsetLabel> labels;
    labels.reserve(tr.diagram.crossings.size());
    std::vector<const Crossing*> sorted;
    for (const auto& c : tr.diagram.crossings) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const Crossing* a, const Crossing* b) { return a->id < b->id; });
    for (const Crossing* c : sorted) {
        const PassageInfo& over = tr.passage(c->id, Role::Over);
        const PassageInfo& under = tr.passage(c->id, Role::Under);
        labels.push_back({c->id, over.component, under.component,
                          under.position - over.position, c->sign});
    }
    return labels;
}

/// (over component, under component, offset) -> signed over-crossing sum.
/// Offsets are accumulated modulo the subgroup generated by the two
/// components' homology vectors: translating a lift curve by its own
/// homology gives the same curve, so labels in one coset belong to one
/// pair of lift curves.  Without the reduction, a canceling pair whose
/// labels straddle a walk base point would fail to cancel.
using LinkingProfile = std::map<std::tuple<int, int, WrapVector>, std::int64_t>;

inline LinkingProfile linking_profile(const Trace& tr) {
    LinkingProfile profile;
    for (const auto& l : crossing_offsets(tr)) {
        const WrapVector ho = tr.components[static_cast<std::size_t>(l.over_component)].homology;
        const WrapVector hu = tr.components[static_cast<std::size_t>(l.under_component)].homology;
        profile[{l.over_component, l.under_component, reduce_mod_lattice(l.offset, ho, hu)}] +=
            l.sign;
    }
    for (auto it = profile.begin(); it != profile.end();)
        it = (it->second == 0) ? profile.erase(it) : std::next(it);
    return profile;
}

} // namespace dpt
