#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/compound.hpp"
#include "dpt/trace.hpp"

namespace dpt {

/// Direction of a directional element: (0,0) for isolated knots, a
/// sign-normalized integer vector for essential components and chain-links,
/// (inf,inf) for full-polycatenanes.  (a,b) and (-a,-b) are identified;
/// (a,b) and (b,a) are distinct.
struct Direction {
    enum class Kind { Zero, Vector, Infinity };
    Kind kind = Kind::Zero;
    WrapVector vec{};

    static Direction zero() { return {Kind::Zero, {0, 0}}; }
    static Direction vector(WrapVector v) {
        if (v.is_zero()) return zero();
        return {Kind::Vector, sign_normalize(v)};
    }
    static Direction infinity() { return {Kind::Infinity, {0, 0}}; }

    friend bool operator==(const Direction& a, const Direction& b) {
        return a.kind == b.kind && a.vec == b.vec;
    }
    friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
    friend bool operator<(const Direction& a, const Direction& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.vec < b.vec;
    }
};

inline std::string to_string(const Direction& d) {
    switch (d.kind) {
        case Direction::Kind::Zero: return "(0,0)";
        case Direction::Kind::Infinity: return "(∞,∞)";
        case Direction::Kind::Vector: return to_string(d.vec);
    }
    return "?";
}

enum class ElementKind { IsolatedKnot, EssentialComponent, ChainLink, FullPolycatenane };

inline const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::IsolatedKnot: return "isolated-knot";
        case ElementKind::EssentialComponent: return "essential-component";
        case ElementKind::ChainLink: return "chain-link";
        case ElementKind::FullPolycatenane: return "full-polycatenane";
    }
    return "?";
}

/// Directional element: the unit a direction is assigned to.  The
/// longitude/meridian intersection counts sum the members' homology-level
/// crossing numbers.
struct Element {
    ElementKind kind = ElementKind::IsolatedKnot;
    std::vector<int> members;
    Direction direction;
    int longitude_intersections = 0;
    int meridian_intersections = 0;
    bool undetermined = false;
};

namespace detail {

// Longitude/meridian intersection counts of a component, read off its
// homology class: an (a,b) curve meets the meridian a times and the
// longitude b times.  Unlike raw edge counts, this survives gauge shifts.
inline std::pair<int, int> boundary_counts(const Trace& tr, int component) {
    const WrapVector h = tr.components[static_cast<std::size_t>(component)].homology;
    const auto lon = static_cast<int>(h.dv < 0 ? -h.dv : h.dv);
    const auto mer = static_cast<int>(h.du < 0 ? -h.du : h.du);
    return {lon, mer};
}

inline void add_boundary(const Trace& tr, Element& el) {
    for (int m : el.members) {
        auto [lon, mer] = boundary_counts(tr, m);
        el.longitude_intersections += lon;
        el.meridian_intersections += mer;
    }
}

} // namespace detail

inline std::vector<Element> elements(const Trace& tr, const std::vector<Compound>& comps) {
    std::vector<Element> out;
    for (const auto& comp : comps) {
        for (int m : comp.members) {
            const WrapVector h = tr.components[static_cast<std::size_t>(m)].homology;
            if (h.is_zero()) continue;
            Element el;
            el.kind = ElementKind::EssentialComponent;
            el.members = {m};
            el.direction = Direction::vector(h);
            detail::add_boundary(tr, el);
            out.push_back(std::move(el));
        }
        for (const auto& cl : comp.null_clusters) {
            if (cl.rank == 0) {
                for (int m : cl.members) {
                    Element el;
                    el.kind = ElementKind::IsolatedKnot;
                    el.members = {m};
                    el.direction = Direction::zero();
                    detail::add_boundary(tr, el);
                    out.push_back(std::move(el));
                }
            } else if (cl.rank == 1) {
                Element el;
                el.kind = ElementKind::ChainLink;
                el.members = cl.members;
                el.direction = Direction::vector(cl.generators.front());
                detail::add_boundary(tr, el);
                out.push_back(std::move(el));
            } else if (cl.decomposed) {
                for (const auto& part : cl.chains) {
                    Element el;
                    el.kind = ElementKind::ChainLink;
                    el.members = part.members;
                    el.direction = Direction::vector(part.direction);
                    el.undetermined = cl.multiple_minimal;
                    detail::add_boundary(tr, el);
                    out.push_back(std::move(el));
                }
            } else {
                Element el;
                el.kind = ElementKind::FullPolycatenane;
                el.members = cl.members;
                el.direction = Direction::infinity();
                el.undetermined = cl.undetermined;
                detail::add_boundary(tr, el);
                out.push_back(std::move(el));
            }
        }
    }
    return out;
}

struct DirectionSet {
    std::set<Direction> directions;
    std::map<Direction, int> vector_multiplicity; // essential + chain elements per direction
};

inline DirectionSet motif_direction(const std::vector<Element>& els) {
    DirectionSet ds;
    for (const auto& el : els) {
        ds.directions.insert(el.direction);
        if (el.direction.kind == Direction::Kind::Vector) ds.vector_multiplicity[el.direction] += 1;
    }
    return ds;
}

inline int direction_count(const DirectionSet& ds) { return static_cast<int>(ds.directions.size()); }

/// Which of {(0,0)}, vector directions, (inf,inf) the direction set
/// contains; n counts the distinct vector directions.
struct DirectionalType {
    int n = 0;
    bool zero = false;
    bool inf = false;

    friend bool operator==(const DirectionalType& a, const DirectionalType& b) {
        return a.n == b.n && a.zero == b.zero && a.inf == b.inf;
    }
    friend bool operator!=(const DirectionalType& a, const DirectionalType& b) { return !(a == b); }
};

inline DirectionalType directional_type(const DirectionSet& ds) {
    if (ds.directions.empty()) throw std::invalid_argument("no elements");
    DirectionalType t;
    for (const auto& d : ds.directions) {
        switch (d.kind) {
            case Direction::Kind::Zero: t.zero = true; break;
            case Direction::Kind::Infinity: t.inf = true; break;
            case Direction::Kind::Vector: ++t.n; break;
        }
    }
    return t;
}

inline std::string to_string(const DirectionalType& t) {
    const std::string inf = "∞";
    if (t.n == 0) {
        if (t.zero && t.inf) return "(0," + inf + ")";
        if (t.inf) return inf;
        return "0";
    }
    const std::string n = std::to_string(t.n);
    if (t.zero && t.inf) return "(" + n + ",0," + inf + ")";
    if (t.zero) return "(" + n + ",0)";
    if (t.inf) return "(" + n + "," + inf + ")";
    return n;
}

/// Blueprint of the motif: one axis per element, merged motif-wide.
/// m elements of vector direction (a,b) yield one (ma,mb)-torus link
/// entry; isolated knots yield trivial knots; each full-polycatenane
/// element yields one non-contractible trivial loop per member component,
/// keeping that component's longitude/meridian intersection counts.
struct AxisMotif {
    struct TorusLink {
        WrapVector direction{};
        int multiplicity = 0;
        friend bool operator==(const TorusLink& a, const TorusLink& b) {
            return a.direction == b.direction && a.multiplicity == b.multiplicity;
        }
    };
    struct Loop {
        int longitude = 0;
        int meridian = 0;
        friend bool operator==(const Loop& a, const Loop& b) {
            return a.longitude == b.longitude && a.meridian == b.meridian;
        }
        friend bool operator<(const Loop& a, const Loop& b) {
            if (a.longitude != b.longitude) return a.longitude < b.longitude;
            return a.meridian < b.meridian;
        }
    };

    std::vector<TorusLink> torus_links; // sorted by direction
    int trivial_knots = 0;
    std::vector<Loop> noncontractible_loops; // sorted

    friend bool operator==(const AxisMotif& a, const AxisMotif& b) {
        return a.torus_links == b.torus_links && a.trivial_knots == b.trivial_knots &&
               a.noncontractible_loops == b.noncontractible_loops;
    }
};

inline AxisMotif axis_motif(const Trace& tr, const std::vector<Element>& els) {
    AxisMotif axis;
    std::map<WrapVector, int> mult;
    for (const auto& el : els) {
        switch (el.kind) {
            case ElementKind::EssentialComponent:
            case ElementKind::ChainLink:
                mult[el.direction.vec] += 1;
                break;
            case ElementKind::IsolatedKnot:
                axis.trivial_knots += 1;
                break;
            case ElementKind::FullPolycatenane:
                for (int m : el.members) {
                    auto [lon, mer] = detail::boundary_counts(tr, m);
                    axis.noncontractible_loops.push_back({lon, mer});
                }
                break;
        }
    }
    for (const auto& [dir, m] : mult) axis.torus_links.push_back({dir, m});
    std::sort(axis.noncontractible_loops.begin(), axis.noncontractible_loops.end());
    return axis;
}

inline std::string to_string(const AxisMotif& axis) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += ", ";
        out += s;
    };
    for (const auto& tl : axis.torus_links) {
        const WrapVector total{tl.multiplicity * tl.direction.du, tl.multiplicity * tl.direction.dv};
        append("a " + to_string(total) + "-torus " + (tl.multiplicity > 1 ? "link" : "knot"));
    }
    if (axis.trivial_knots > 0)
        append(std::to_string(axis.trivial_knots) + " trivial knot" + (axis.trivial_knots > 1 ? "s" : ""));
    if (!axis.noncontractible_loops.empty()) {
        const std::size_t n = axis.noncontractible_loops.size();
        append(std::to_string(n) + " non-contractible loop" + (n > 1 ? "s" : ""));
    }
    if (out.empty()) out = "empty";
    return out;
}

} // namespace dpt
