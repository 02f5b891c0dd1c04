#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dpt/diagram.hpp"

namespace dpt {

namespace detail {

struct IsoIndex {
    std::vector<const Crossing*> crossings;
    std::map<std::string, int> crossing_index;
    std::map<std::pair<std::string, Port>, const Edge*> at_tail;

    explicit IsoIndex(const TorusDiagram& d) {
        for (const auto& c : d.crossings) {
            crossing_index[c.id] = static_cast<int>(crossings.size());
            crossings.push_back(&c);
        }
        for (const auto& e : d.edges) at_tail[{e.tail.crossing, e.tail.port}] = &e;
    }
};

} // namespace detail

/// Structural isomorphism after desugaring: a bijection of crossings
/// preserving signs, port bindings and exact edge wraps, plus a wrap
/// multiset match of the crossing-free loops.
inline bool isomorphic(const TorusDiagram& a0, const TorusDiagram& b0) {
    const TorusDiagram a = normalize(a0);
    const TorusDiagram b = normalize(b0);
    if (a.crossings.size() != b.crossings.size() || a.edges.size() != b.edges.size() ||
        a.free_loops.size() != b.free_loops.size())
        return false;

    std::multiset<std::pair<std::int64_t, std::int64_t>> la, lb;
    for (const auto& l : a.free_loops) la.insert({l.wrap.du, l.wrap.dv});
    for (const auto& l : b.free_loops) lb.insert({l.wrap.du, l.wrap.dv});
    if (la != lb) return false;

    if (a.crossings.empty()) return true;

    detail::IsoIndex ia(a), ib(b);

    // Order a's crossings so each one (after the first in its piece) touches
    // an already-ordered crossing; assignments then propagate through edges.
    std::vector<int> order;
    {
        std::map<int, std::set<int>> adj;
        for (const auto& e : a.edges) {
            const int u = ia.crossing_index.at(e.tail.crossing);
            const int v = ia.crossing_index.at(e.head.crossing);
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::set<int> placed;
        while (placed.size() < a.crossings.size()) {
            int next = -1;
            for (int i = 0; i < static_cast<int>(a.crossings.size()) && next < 0; ++i) {
                if (placed.count(i)) continue;
                for (int j : adj[i])
                    if (placed.count(j)) { next = i; break; }
            }
            if (next < 0)
                for (int i = 0; i < static_cast<int>(a.crossings.size()); ++i)
                    if (!placed.count(i)) { next = i; break; }
            placed.insert(next);
            order.push_back(next);
        }
    }

    std::vector<int> image(a.crossings.size(), -1);
    std::vector<bool> used(b.crossings.size(), false);

    auto edges_consistent = [&](int) {
        for (const auto& e : a.edges) {
            const int t = ia.crossing_index.at(e.tail.crossing);
            const int h = ia.crossing_index.at(e.head.crossing);
            if (image[static_cast<std::size_t>(t)] < 0 || image[static_cast<std::size_t>(h)] < 0)
                continue;
            auto it = ib.at_tail.find(
                {ib.crossings[static_cast<std::size_t>(image[static_cast<std::size_t>(t)])]->id,
                 e.tail.port});
            if (it == ib.at_tail.end()) return false;
            const Edge* be = it->second;
            if (be->head.port != e.head.port || be->wrap != e.wrap) return false;
            if (ib.crossing_index.at(be->head.crossing) != image[static_cast<std::size_t>(h)])
                return false;
        }
        return true;
    };

    auto backtrack = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        const int ai = order[k];
        for (std::size_t bi = 0; bi < b.crossings.size(); ++bi) {
            if (used[bi]) continue;
            if (ia.crossings[static_cast<std::size_t>(ai)]->sign != b.crossings[bi].sign) continue;
            image[static_cast<std::size_t>(ai)] = static_cast<int>(bi);
            used[bi] = true;
            if (edges_consistent(ai) && self(self, k + 1)) return true;
            image[static_cast<std::size_t>(ai)] = -1;
            used[bi] = false;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

} // namespace dpt
