#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpt/compound.hpp"
#include "dpt/direction.hpp"
#include "dpt/trace.hpp"

namespace dpt {

/// Everything computed from one diagram under one policy.
struct Analysis {
    Trace trace;
    InterlinkGraph graph;
    std::vector<Compound> compounds;
    std::vector<Element> elements;
    DirectionSet directions;
};

inline Analysis analyze(const TorusDiagram& d, Policy policy = Policy::LinkingAdjacency,
                        bool search_decomposition = true) {
    Analysis a;
    a.trace = trace_components(d);
    a.graph = interlink_graph(a.trace, policy);
    a.compounds = compounds(a.trace, a.graph, search_decomposition);
    a.elements = elements(a.trace, a.compounds);
    a.directions = motif_direction(a.elements);
    return a;
}

struct CompoundReport {
    std::vector<std::string> members;
    std::string cls;
    std::string subclass;
    int rank = 0;
    std::vector<WrapVector> generators;

    friend bool operator==(const CompoundReport& a, const CompoundReport& b) {
        return a.members == b.members && a.cls == b.cls && a.subclass == b.subclass &&
               a.rank == b.rank && a.generators == b.generators;
    }
};

struct ElementReport {
    std::string kind;
    std::vector<std::string> members;
    Direction direction;
    int longitude = 0;
    int meridian = 0;
    bool undetermined = false;

    friend bool operator==(const ElementReport& a, const ElementReport& b) {
        return a.kind == b.kind && a.members == b.members && a.direction == b.direction &&
               a.longitude == b.longitude && a.meridian == b.meridian &&
               a.undetermined == b.undetermined;
    }
};

struct InvariantReport {
    std::string name;
    std::string policy;
    int component_count = 0;
    int crossing_count = 0;
    int free_loop_count = 0;
    std::vector<CompoundReport> compounds;
    std::string motif_class;
    std::vector<ElementReport> elements;
    std::vector<Direction> directions;
    int direction_count = 0;
    DirectionalType type;
    AxisMotif axis;
    std::vector<std::string> flags;

    friend bool operator==(const InvariantReport& a, const InvariantReport& b) {
        return a.name == b.name && a.policy == b.policy && a.component_count == b.component_count &&
               a.crossing_count == b.crossing_count && a.free_loop_count == b.free_loop_count &&
               a.compounds == b.compounds && a.motif_class == b.motif_class &&
               a.elements == b.elements && a.directions == b.directions &&
               a.direction_count == b.direction_count && a.type == b.type && a.axis == b.axis &&
               a.flags == b.flags;
    }
};

inline InvariantReport invariant_report(const Analysis& a) {
    InvariantReport r;
    r.name = a.trace.diagram.name;
    r.policy = to_string(a.graph.policy);
    r.component_count = static_cast<int>(a.trace.components.size());
    r.crossing_count = static_cast<int>(a.trace.diagram.crossings.size());
    r.free_loop_count = static_cast<int>(a.trace.diagram.free_loops.size());

    auto repr = [&](int idx) { return a.trace.components[static_cast<std::size_t>(idx)].repr; };

    for (const auto& c : a.compounds) {
        CompoundReport cr;
        for (int m : c.members) cr.members.push_back(repr(m));
        cr.cls = to_string(c.cls);
        cr.subclass = c.subclass;
        cr.rank = c.rank;
        cr.generators = c.generators;
        r.compounds.push_back(std::move(cr));
        for (const auto& cl : c.null_clusters) {
            if (cl.undetermined)
                r.flags.push_back("compound " + std::to_string(c.index + 1) +
                                  ": chain decomposition undetermined");
            if (cl.multiple_minimal)
                r.flags.push_back("compound " + std::to_string(c.index + 1) +
                                  ": multiple minimal chain decompositions");
        }
    }
    r.motif_class = to_string(motif_class(a.compounds));
    for (const auto& el : a.elements) {
        ElementReport er;
        er.kind = to_string(el.kind);
        for (int m : el.members) er.members.push_back(repr(m));
        er.direction = el.direction;
        er.longitude = el.longitude_intersections;
        er.meridian = el.meridian_intersections;
        er.undetermined = el.undetermined;
        r.elements.push_back(std::move(er));
    }
    r.directions.assign(a.directions.directions.begin(), a.directions.directions.end());
    r.direction_count = direction_count(a.directions);
    r.type = directional_type(a.directions);
    r.axis = axis_motif(a.trace, a.elements);
    return r;
}

inline InvariantReport invariant_report(const TorusDiagram& d,
                                        Policy policy = Policy::LinkingAdjacency) {
    return invariant_report(analyze(d, policy));
}

namespace detail {

inline std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

inline std::string wraps_to_string(const std::vector<WrapVector>& ws) {
    std::string out = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ws[i]);
    }
    return out + "]";
}

} // namespace detail

inline std::string to_text(const InvariantReport& r) {
    std::string out;
    out += "motif: " + r.name + "\n";
    out += "policy: " + r.policy + "\n";
    out += "components: " + std::to_string(r.component_count) + "\n";
    out += "crossings: " + std::to_string(r.crossing_count) + "\n";
    out += "free loops: " + std::to_string(r.free_loop_count) + "\n";
    out += "compounds: " + std::to_string(r.compounds.size()) + "\n";
    for (std::size_t i = 0; i < r.compounds.size(); ++i) {
        const auto& c = r.compounds[i];
        out += "  compound " + std::to_string(i + 1) + ": class=" + c.cls + "; subclass=" + c.subclass +
               "; rank=" + std::to_string(c.rank) + "; generators=" + detail::wraps_to_string(c.generators) +
               "; members=[" + detail::join(c.members) + "]\n";
    }
    out += "motif class: " + r.motif_class + "\n";
    out += "elements: " + std::to_string(r.elements.size()) + "\n";
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
        const auto& e = r.elements[i];
        out += "  element " + std::to_string(i + 1) + ": " + e.kind + "; direction=" + to_string(e.direction) +
               "; members=[" + detail::join(e.members) + "]; boundary=(" + std::to_string(e.longitude) +
               "," + std::to_string(e.meridian) + ")";
        if (e.undetermined) out += "; undetermined";
        out += "\n";
    }
    std::string dirs;
    for (const auto& d : r.directions) {
        if (!dirs.empty()) dirs += ", ";
        dirs += to_string(d);
    }
    out += "directions: {" + dirs + "}\n";
    out += "direction count: " + std::to_string(r.direction_count) + "\n";
    out += "directional type: " + to_string(r.type) + "\n";
    out += "axis-motif: " + to_string(r.axis) + "\n";
    out += "flags: " + (r.flags.empty() ? "none" : detail::join(r.flags)) + "\n";
    return out;
}

// --- structured (JSON) form ------------------------------------------------

inline nlohmann::ordered_json direction_to_json(const Direction& d) {
    switch (d.kind) {
        case Direction::Kind::Zero: return {{"kind", "zero"}};
        case Direction::Kind::Infinity: return {{"kind", "infinity"}};
        case Direction::Kind::Vector:
            return {{"kind", "vector"}, {"v", {d.vec.du, d.vec.dv}}};
    }
    return {};
}

inline Direction direction_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return Direction::zero();
    if (kind == "infinity") return Direction::infinity();
    return Direction::vector({j.at("v").at(0).get<std::int64_t>(), j.at("v").at(1).get<std::int64_t>()});
}

inline nlohmann::ordered_json report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["policy"] = r.policy;
    j["components"] = r.component_count;
    j["crossings"] = r.crossing_count;
    j["free_loops"] = r.free_loop_count;
    j["compounds"] = nlohmann::ordered_json::array();
    for (const auto& c : r.compounds) {
        nlohmann::ordered_json jc;
        jc["members"] = c.members;
        jc["class"] = c.cls;
        jc["subclass"] = c.subclass;
        jc["rank"] = c.rank;
        jc["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : c.generators) jc["generators"].push_back({g.du, g.dv});
        j["compounds"].push_back(std::move(jc));
    }
    j["motif_class"] = r.motif_class;
    j["elements"] = nlohmann::ordered_json::array();
    for (const auto& e : r.elements) {
        nlohmann::ordered_json je;
        je["kind"] = e.kind;
        je["members"] = e.members;
        je["direction"] = direction_to_json(e.direction);
        je["boundary"] = {e.longitude, e.meridian};
        je["undetermined"] = e.undetermined;
        j["elements"].push_back(std::move(je));
    }
    j["directions"] = nlohmann::ordered_json::array();
    for (const auto& d : r.directions) j["directions"].push_back(direction_to_json(d));
    j["direction_count"] = r.direction_count;
    j["directional_type"] = {{"n", r.type.n}, {"zero", r.type.zero}, {"inf", r.type.inf},
                             {"display", to_string(r.type)}};
    nlohmann::ordered_json ja;
    ja["torus_links"] = nlohmann::ordered_json::array();
    for (const auto& tl : r.axis.torus_links)
        ja["torus_links"].push_back({{"direction", {tl.direction.du, tl.direction.dv}},
                                     {"multiplicity", tl.multiplicity}});
    ja["trivial_knots"] = r.axis.trivial_knots;
    ja["noncontractible_loops"] = nlohmann::ordered_json::array();
    for (const auto& l : r.axis.noncontractible_loops)
        ja["noncontractible_loops"].push_back({l.longitude, l.meridian});
    ja["display"] = to_string(r.axis);
    j["axis_motif"] = std::move(ja);
    j["flags"] = r.flags;
    return j;
}

inline InvariantReport report_from_json(const nlohmann::json& j) {
    InvariantReport r;
    r.name = j.at("name").get<std::string>();
    r.policy = j.at("policy").get<std::string>();
    r.component_count = j.at("components").get<int>();
    r.crossing_count = j.at("crossings").get<int>();
    r.free_loop_count = j.at("free_loops").get<int>();
    for (const auto& jc : j.at("compounds")) {
        CompoundReport c;
        c.members = jc.at("members").get<std::vector<std::string>>();
        c.cls = jc.at("class").get<std::string>();
        c.subclass = jc.at("subclass").get<std::string>();
        c.rank = jc.at("rank").get<int>();
        for (const auto& g : jc.at("generators"))
            c.generators.push_back({g.at(0).get<std::int64_t>(), g.at(1).get<std::int64_t>()});
        r.compounds.push_back(std::move(c));
    }
    r.motif_class = j.at("motif_class").get<std::string>();
    for (const auto& je : j.at("elements")) {
        ElementReport e;
        e.kind = je.at("kind").get<std::string>();
        e.members = je.at("members").get<std::vector<std::string>>();
        e.direction = direction_from_json(je.at("direction"));
        e.longitude = je.at("boundary").at(0).get<int>();
        e.meridian = je.at("boundary").at(1).get<int>();
        e.undetermined = je.at("undetermined").get<bool>();
        r.elements.push_back(std::move(e));
    }
    for (const auto& jd : j.at("directions")) r.directions.push_back(direction_from_json(jd));
    r.direction_count = j.at("direction_count").get<int>();
    r.type.n = j.at("directional_type").at("n").get<int>();
    r.type.zero = j.at("directional_type").at("zero").get<bool>();
    r.type.inf = j.at("directional_type").at("inf").get<bool>();
    for (const auto& jt : j.at("axis_motif").at("torus_links"))
        r.axis.torus_links.push_back({{jt.at("direction").at(0).get<std::int64_t>(),
                                       jt.at("direction").at(1).get<std::int64_t>()},
                                      jt.at("multiplicity").get<int>()});
    r.axis.trivial_knots = j.at("axis_motif").at("trivial_knots").get<int>();
    for (const auto& jl : j.at("axis_motif").at("noncontractible_loops"))
        r.axis.noncontractible_loops.push_back({jl.at(0).get<int>(), jl.at(1).get<int>()});
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
}

} // namespace dpt
