#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/lattice.hpp"
#include "dpt/trace.hpp"

namespace dpt {

/// Diagram-level splitness surrogate.  LinkingAdjacency (default) connects
/// two components at an offset when the signed over-crossing sum there is
/// nonzero; it is stable under the move engine but wrongly splits
/// linking-number-zero patterns.  CrossingAdjacency connects on raw
/// crossings and over-approximates contact.
enum class Policy { LinkingAdjacency, CrossingAdjacency };

inline const char* to_string(Policy p) {
    return p == Policy::LinkingAdjacency ? "linking-adjacency" : "crossing-adjacency";
}

/// Labeled multigraph edge: the lift of component j meets the lift of
/// component i translated by `offset`.  Stored with i <= j; an (i,j,d)
/// edge is the same as (j,i,-d), and self edges are sign-normalized.
struct InterlinkEdge {
    int i = 0, j = 0;
    WrapVector offset{};
    std::int64_t weight = 0;
};

struct InterlinkGraph {
    Policy policy = Policy::LinkingAdjacency;
    int node_count = 0;
    std::vector<WrapVector> homology; // per-node self loop
    std::vector<InterlinkEdge> edges;
};

inline InterlinkGraph interlink_graph(const Trace& tr, Policy policy) {
    InterlinkGraph g;
    g.policy = policy;
    g.node_count = static_cast<int>(tr.components.size());
    g.homology.reserve(tr.components.size());
    for (const auto& c : tr.components) g.homology.push_back(c.homology);

    std::map<std::tuple<int, int, WrapVector>, std::int64_t> acc;
    auto canonical = [](int i, int j, WrapVector d) {
        if (i > j) return std::make_tuple(j, i, -d);
        if (i == j) return std::make_tuple(i, i, sign_normalize(d));
        return std::make_tuple(i, j, d);
    };

    if (policy == Policy::LinkingAdjacency) {
        const LinkingProfile profile = linking_profile(tr);
        for (const auto& [key, value] : profile) {
            const auto& [over, under, offset] = key;
            acc[canonical(over, under, offset)] += value;
        }
    } else {
        for (const auto& label : crossing_offsets(tr)) {
            const WrapVector ho =
                tr.components[static_cast<std::size_t>(label.over_component)].homology;
            const WrapVector hu =
                tr.components[static_cast<std::size_t>(label.under_component)].homology;
            acc[canonical(label.over_component, label.under_component,
                          reduce_mod_lattice(label.offset, ho, hu))] += 1;
        }
    }
    for (const auto& [key, value] : acc) {
        if (value == 0) continue;
        const auto& [i, j, d] = key;
        g.edges.push_back({i, j, d, value});
    }
    return g;
}

enum class CompoundClass { Null, Ribbon, Cover };

inline const char* to_string(CompoundClass c) {
    switch (c) {
        case CompoundClass::Null: return "null-homotopic";
        case CompoundClass::Ribbon: return "ribbon";
        case CompoundClass::Cover: return "cover";
    }
    return "?";
}

/// Total strength order (cover, ribbon, null-homotopic): positive when a
/// is stronger than b, zero when equal.
inline int compare_class(CompoundClass a, CompoundClass b) {
    return static_cast<int>(a) - static_cast<int>(b);
}

struct ChainPart {
    std::vector<int> members;
    WrapVector direction{};
};

/// Connected piece of the compound graph restricted to homology-(0,0)
/// components.  rank-2 clusters record their canonical chain decomposition
/// when one exists (fewest parts, then lexicographically smallest sorted
/// direction list).
struct NullCluster {
    std::vector<int> members;
    int rank = 0;
    std::vector<WrapVector> generators;
    std::vector<ChainPart> chains;  // canonical decomposition, rank-2 only
    bool decomposed = false;
    bool undetermined = false;      // search skipped (size/state budget)
    bool multiple_minimal = false;  // several canonical-minimal decompositions
};

struct Compound {
    int index = 0;
    std::vector<int> members;
    InterlinkGraph graph; // induced subgraph (same node numbering as parent)
    int rank = 0;
    std::vector<WrapVector> generators;
    CompoundClass cls = CompoundClass::Null;
    std::string subclass;
    std::vector<NullCluster> null_clusters;
    bool has_essential = false;
};

namespace detail {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

/// Cycle-vector lattice of a connected labeled multigraph: BFS potentials,
/// every non-tree edge instance contributes pot(i) + d - pot(j).
inline std::vector<WrapVector> cycle_vectors(const std::vector<int>& members,
                                             const std::vector<InterlinkEdge>& edges) {
    std::map<int, WrapVector> pot;
    std::map<int, std::vector<std::pair<int, WrapVector>>> adj; // i -> (j, offset of j rel i)
    for (const auto& e : edges) {
        if (e.i == e.j) continue;
        adj[e.i].push_back({e.j, e.offset});
        adj[e.j].push_back({e.i, -e.offset});
    }
    std::vector<WrapVector> cycles;
    for (int root : members) {
        if (pot.count(root)) continue;
        pot[root] = {0, 0};
        std::vector<int> queue{root};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const int u = queue[q];
            for (const auto& [v, d] : adj[u]) {
                if (!pot.count(v)) {
                    pot[v] = pot[u] + d;
                    queue.push_back(v);
                }
            }
        }
    }
    for (const auto& e : edges) {
        if (e.i == e.j) {
            cycles.push_back(e.offset);
            continue;
        }
        cycles.push_back(pot.at(e.i) + e.offset - pot.at(e.j));
    }
    // BFS tree edges contribute (0,0); harmless to keep them in the list.
    return cycles;
}

/// Chain-decomposition search over subsets, memoized top down.  States are
/// bitmasks over the cluster's members; the first part of a remainder must
/// contain its lowest set bit, so each partition is enumerated once.
class ChainDecomposer {
public:
    static constexpr std::size_t kMaxMembers = 24;       // beyond this: undetermined
    static constexpr std::size_t kStateBudget = 100000;  // memoized remainders
    static constexpr std::uint64_t kWorkBudget = 60000;  // enumeration steps

    ChainDecomposer(const std::vector<int>& members, const std::vector<InterlinkEdge>& edges)
        : members_(members), edges_(edges) {
        for (std::size_t i = 0; i < members_.size() && i < kMaxMembers; ++i)
            index_[members_[i]] = static_cast<int>(i);
        neighbors_.assign(members_.size(), 0);
        if (members_.size() <= kMaxMembers)
            for (const auto& e : edges_) {
                if (e.i == e.j) continue;
                const int a = index_.at(e.i), b = index_.at(e.j);
                neighbors_[static_cast<std::size_t>(a)] |= 1ull << b;
                neighbors_[static_cast<std::size_t>(b)] |= 1ull << a;
            }
    }

    struct Outcome {
        bool undetermined = false;
        bool decomposable = false;
        std::vector<ChainPart> chains;
        bool multiple_minimal = false;
    };

    Outcome run() {
        Outcome out;
        if (members_.size() > kMaxMembers || members_.size() < 2) {
            out.undetermined = members_.size() > kMaxMembers;
            return out; // a single member can never split into >= 2 groups
        }
        n_ = members_.size();
        const std::uint64_t full = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
        const Entry& e = solve(full);
        if (budget_exceeded_) {
            out.undetermined = true;
            return out;
        }
        if (!e.feasible) return out;
        out.decomposable = true;
        out.multiple_minimal = e.ways > 1;
        // Reconstruct the canonical partition.
        std::uint64_t rest = full;
        while (rest) {
            const Entry& cur = solve(rest);
            ChainPart part;
            for (std::size_t i = 0; i < n_; ++i)
                if (cur.best_part & (1ull << i)) part.members.push_back(members_[i]);
            part.direction = part_direction(cur.best_part);
            out.chains.push_back(std::move(part));
            rest &= ~cur.best_part;
        }
        return out;
    }

private:
    struct Entry {
        bool feasible = false;
        int parts = 0;
        std::vector<WrapVector> dirs; // sorted
        std::uint64_t best_part = 0;
        std::uint64_t ways = 0;
    };

    // Connectivity is guaranteed by the enumeration; only the rank matters.
    bool part_valid(std::uint64_t mask) {
        auto it = valid_cache_.find(mask);
        if (it != valid_cache_.end()) return it->second;
        std::vector<int> mem;
        std::vector<InterlinkEdge> sub;
        select(mask, mem, sub);
        bool ok = hermite_basis(cycle_vectors(mem, sub)).rank == 1;
        valid_cache_[mask] = ok;
        return ok;
    }

    /// Calls f on every connected subset of `allowed` that contains the
    /// lowest set bit of `allowed`, each exactly once.
    template <typename F>
    void connected_subsets(std::uint64_t allowed, F&& f) {
        const std::uint64_t low = allowed & (~allowed + 1);
        const int low_idx = std::countr_zero(low);
        auto rec = [&](auto&& self, std::uint64_t set, std::uint64_t candidates,
                       std::uint64_t excluded) -> void {
            if (budget_exceeded_ || ++work_ > kWorkBudget) {
                budget_exceeded_ = true;
                return;
            }
            f(set);
            while (candidates) {
                const std::uint64_t v = candidates & (~candidates + 1);
                candidates ^= v;
                const int vi = std::countr_zero(v);
                const std::uint64_t grown =
                    (candidates | (neighbors_[static_cast<std::size_t>(vi)] & allowed)) &
                    ~(set | v | excluded);
                self(self, set | v, grown, excluded);
                excluded |= v;
            }
        };
        rec(rec, low, neighbors_[static_cast<std::size_t>(low_idx)] & allowed & ~low, 0);
    }

    WrapVector part_direction(std::uint64_t mask) {
        std::vector<int> mem;
        std::vector<InterlinkEdge> sub;
        select(mask, mem, sub);
        return sign_normalize(hermite_basis(cycle_vectors(mem, sub)).g1);
    }

    void select(std::uint64_t mask, std::vector<int>& mem, std::vector<InterlinkEdge>& sub) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (mask & (1ull << i)) mem.push_back(members_[i]);
        for (const auto& e : edges_) {
            const auto a = static_cast<std::uint64_t>(1) << index_.at(e.i);
            const auto b = static_cast<std::uint64_t>(1) << index_.at(e.j);
            if ((mask & a) && (mask & b)) sub.push_back(e);
        }
    }

    static std::vector<WrapVector> merged(const std::vector<WrapVector>& sorted, WrapVector extra) {
        std::vector<WrapVector> out = sorted;
        out.insert(std::upper_bound(out.begin(), out.end(), extra), extra);
        return out;
    }

    const Entry& solve(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        if (memo_.size() >= kStateBudget) {
            budget_exceeded_ = true;
            static const Entry kDead;
            return kDead;
        }
        Entry ent;
        if (mask == 0) {
            ent.feasible = true;
            ent.ways = 1;
        } else {
            // The part containing the lowest member must be connected, so only
            // connected subsets are worth testing.
            std::vector<std::uint64_t> parts;
            connected_subsets(mask, [&](std::uint64_t part) {
                if (part_valid(part)) parts.push_back(part);
            });
            for (const std::uint64_t part : parts) {
                if (budget_exceeded_) break;
                const Entry& tail = solve(mask ^ part);
                if (budget_exceeded_) break;
                if (!tail.feasible) continue;
                Entry cand;
                cand.feasible = true;
                cand.parts = tail.parts + 1;
                cand.dirs = merged(tail.dirs, part_direction(part));
                cand.best_part = part;
                cand.ways = tail.ways;
                if (!ent.feasible) {
                    ent = cand;
                } else if (better(cand, ent)) {
                    ent = cand;
                } else if (equal_key(cand, ent)) {
                    ent.ways += cand.ways;
                }
            }
        }
        if (budget_exceeded_) {
            static const Entry kDead;
            return kDead;
        }
        return memo_.emplace(mask, std::move(ent)).first->second;
    }

    static bool equal_key(const Entry& a, const Entry& b) {
        return a.parts == b.parts && a.dirs == b.dirs;
    }
    static bool better(const Entry& a, const Entry& b) {
        if (!b.feasible) return true;
        if (a.parts != b.parts) return a.parts < b.parts;
        return a.dirs < b.dirs;
    }

    std::vector<int> members_;
    std::vector<InterlinkEdge> edges_;
    std::size_t n_ = 0;
    std::map<int, int> index_;
    std::vector<std::uint64_t> neighbors_;
    std::map<std::uint64_t, Entry> memo_;
    std::map<std::uint64_t, bool> valid_cache_;
    std::uint64_t work_ = 0;
    bool budget_exceeded_ = false;
};

} // namespace detail

inline std::vector<NullCluster> null_clusters(const InterlinkGraph& g, const std::vector<int>& members,
                                              bool search_decomposition = true) {
    std::vector<int> null_members;
    for (int m : members)
        if (g.homology[static_cast<std::size_t>(m)].is_zero()) null_members.push_back(m);
    std::vector<InterlinkEdge> null_edges;
    std::set<int> null_set(null_members.begin(), null_members.end());
    for (const auto& e : g.edges)
        if (null_set.count(e.i) && null_set.count(e.j)) null_edges.push_back(e);

    // Connected pieces of the restriction.
    std::map<int, int> idx;
    for (std::size_t i = 0; i < null_members.size(); ++i) idx[null_members[i]] = static_cast<int>(i);
    detail::DSU dsu(static_cast<int>(null_members.size()));
    for (const auto& e : null_edges)
        if (e.i != e.j) dsu.unite(idx.at(e.i), idx.at(e.j));
    std::map<int, std::vector<int>> groups;
    for (int m : null_members) groups[dsu.find(idx.at(m))].push_back(m);

    std::vector<NullCluster> clusters;
    for (auto& [root, mem] : groups) {
        NullCluster cl;
        cl.members = mem;
        std::vector<InterlinkEdge> sub;
        std::set<int> in(mem.begin(), mem.end());
        for (const auto& e : null_edges)
            if (in.count(e.i) && in.count(e.j)) sub.push_back(e);
        const HermiteBasis basis = hermite_basis(detail::cycle_vectors(mem, sub));
        cl.rank = basis.rank;
        cl.generators = basis.generators();
        if (cl.rank == 2) {
            if (!search_decomposition) {
                cl.undetermined = true;
            } else {
                detail::ChainDecomposer dec(mem, sub);
                auto outcome = dec.run();
                cl.undetermined = outcome.undetermined;
                cl.decomposed = outcome.decomposable;
                cl.chains = std::move(outcome.chains);
                cl.multiple_minimal = outcome.multiple_minimal;
            }
        }
        clusters.push_back(std::move(cl));
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const NullCluster& a, const NullCluster& b) { return a.members.front() < b.members.front(); });
    return clusters;
}

namespace detail {

inline std::string ribbon_subclass(bool ess, bool chain, bool iso) {
    if (ess && !chain && !iso) return "essential ribbon compound";
    if (!ess && chain && !iso) return "chain-link ribbon compound";
    if (ess && chain && !iso) return "chain-essential ribbon compound";
    if (ess && !chain && iso) return "null-essential ribbon compound";
    if (!ess && chain && iso) return "null-chain ribbon compound";
    if (ess && chain && iso) return "mixed ribbon compound";
    // (!ess && !chain): an all-null ribbon compound is one rank-1 cluster,
    // so chain always holds there; keep a defined answer regardless.
    return iso ? "null-chain ribbon compound" : "chain-link ribbon compound";
}

inline std::string cover_subclass(bool ess, bool full, bool chain, bool iso) {
    if (!ess && !full) return iso ? "null-chain-polycatenane compound" : "chain-polycatenane compound";
    if (!ess && full) {
        if (!chain && !iso) return "full-polycatenane compound";
        if (!chain && iso) return "null-full-polycatenane compound";
        if (chain && !iso) return "chain-full-polycatenane compound";
        return "null-chain-full-polycatenane compound";
    }
    if (ess && !full) {
        if (!chain && !iso) return "essential cover compound";
        if (!chain && iso) return "null-essential cover compound";
        if (chain && !iso) return "chain-essential cover compound";
        return "null-chain-essential cover compound";
    }
    if (!chain && !iso) return "essential-full-polycatenane cover compound";
    if (!chain && iso) return "null-essential-full-polycatenane cover compound";
    if (chain && !iso) return "chain-essential-full-polycatenane cover compound";
    return "mixed cover compound";
}

} // namespace detail

inline std::string subclass_name(CompoundClass cls, bool ess, bool full, bool chain, bool iso,
                                 bool undetermined) {
    std::string name;
    switch (cls) {
        case CompoundClass::Null: name = "null-homotopic compound"; break;
        case CompoundClass::Ribbon: name = detail::ribbon_subclass(ess, chain, iso); break;
        case CompoundClass::Cover: name = detail::cover_subclass(ess, full, chain, iso); break;
    }
    if (undetermined) name += " (undetermined)";
    return name;
}

inline std::vector<Compound> compounds(const Trace&, const InterlinkGraph& g,
                                       bool search_decomposition = true) {
    detail::DSU dsu(g.node_count);
    for (const auto& e : g.edges)
        if (e.i != e.j) dsu.unite(e.i, e.j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < g.node_count; ++i) groups[dsu.find(i)].push_back(i);

    std::vector<Compound> out;
    for (auto& [root, members] : groups) {
        Compound comp;
        comp.members = members;
        std::set<int> in(members.begin(), members.end());
        comp.graph.policy = g.policy;
        comp.graph.node_count = g.node_count;
        comp.graph.homology = g.homology;
        for (const auto& e : g.edges)
            if (in.count(e.i) && in.count(e.j)) comp.graph.edges.push_back(e);

        std::vector<WrapVector> vectors = detail::cycle_vectors(members, comp.graph.edges);
        for (int m : members) {
            vectors.push_back(g.homology[static_cast<std::size_t>(m)]);
            if (!g.homology[static_cast<std::size_t>(m)].is_zero()) comp.has_essential = true;
        }
        const HermiteBasis basis = hermite_basis(vectors);
        comp.rank = basis.rank;
        comp.generators = basis.generators();
        comp.cls = comp.rank == 0   ? CompoundClass::Null
                   : comp.rank == 1 ? CompoundClass::Ribbon
                                    : CompoundClass::Cover;
        comp.null_clusters = null_clusters(g, members, search_decomposition);

        bool chain = false, full = false, iso = false, undet = false;
        for (const auto& cl : comp.null_clusters) {
            if (cl.rank == 0) iso = true;
            if (cl.rank == 1) chain = true;
            if (cl.rank == 2) {
                if (cl.undetermined)
                    undet = true;
                else if (cl.decomposed)
                    chain = true;
                else
                    full = true;
            }
        }
        comp.subclass = subclass_name(comp.cls, comp.has_essential, full, chain, iso, undet);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const Compound& a, const Compound& b) { return a.members.front() < b.members.front(); });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
    return out;
}

inline std::pair<int, std::vector<WrapVector>> translation_rank(const Compound& c) {
    return {c.rank, c.generators};
}

inline CompoundClass compound_class(const Compound& c) { return c.cls; }

enum class MotifClass {
    Cover,
    NullCover,
    RibbonCover,
    NullRibbonCover,
    Ribbon,
    NullRibbon,
    NullHomotopic
};

inline const char* to_string(MotifClass m) {
    switch (m) {
        case MotifClass::Cover: return "cover";
        case MotifClass::NullCover: return "null-cover";
        case MotifClass::RibbonCover: return "ribbon-cover";
        case MotifClass::NullRibbonCover: return "null-ribbon-cover";
        case MotifClass::Ribbon: return "ribbon";
        case MotifClass::NullRibbon: return "null-ribbon";
        case MotifClass::NullHomotopic: return "null-homotopic";
    }
    return "?";
}

inline MotifClass motif_class(const std::vector<Compound>& comps) {
    if (comps.empty()) throw std::invalid_argument("empty motif");
    bool n = false, r = false, c = false;
    for (const auto& comp : comps) {
        if (comp.cls == CompoundClass::Null) n = true;
        if (comp.cls == CompoundClass::Ribbon) r = true;
        if (comp.cls == CompoundClass::Cover) c = true;
    }
    if (c && r && n) return MotifClass::NullRibbonCover;
    if (c && r) return MotifClass::RibbonCover;
    if (c && n) return MotifClass::NullCover;
    if (c) return MotifClass::Cover;
    if (r && n) return MotifClass::NullRibbon;
    if (r) return MotifClass::Ribbon;
    return MotifClass::NullHomotopic;
}

} // namespace dpt
