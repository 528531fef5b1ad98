#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <utility>
#include <vector>

#include "bicolor/types.hpp"

namespace bicolor {

// Bipartite graph revealed online: vertices arrive one at a time, each with
// edges into the past only. Bipartiteness is enforced at insertion; an edge
// set that would close an odd cycle rejects the whole insertion and leaves
// the graph untouched.
//
// Every vertex carries its component anchor (smallest id in the component)
// and a parity bit relative to that anchor, so "same side / opposite side"
// queries within a component are O(1).
class online_bipartite_graph {
public:
    vertex_id add_vertex(std::vector<vertex_id> neighbors) {
        const vertex_id v = static_cast<vertex_id>(adj_.size());
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
        for (vertex_id u : neighbors) {
            if (u >= v)
                throw unknown_vertex_error("neighbor " + std::to_string(u) +
                                           " does not exist yet");
        }
        // all neighbors inside one existing component must sit on one side,
        // otherwise v would close an odd cycle
        for (std::size_t i = 0; i < neighbors.size(); ++i) {
            for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
                const vertex_id x = neighbors[i], y = neighbors[j];
                if (comp_[x] == comp_[y] && side_[x] != side_[y])
                    throw odd_cycle_error("edges {" + std::to_string(x) + "," +
                                          std::to_string(y) +
                                          "} would close an odd cycle");
            }
        }
        adj_.push_back(neighbors);
        for (vertex_id u : neighbors) adj_[u].push_back(v);  // v is maximal, lists stay sorted
        vertex_id anchor = v;
        for (vertex_id u : neighbors) anchor = std::min(anchor, comp_[u]);
        comp_.push_back(v);
        side_.push_back(0);
        relabel_component(anchor);
        return v;
    }

    std::size_t size() const { return adj_.size(); }

    const std::vector<vertex_id>& neighbors(vertex_id v) const {
        check_vertex(v);
        return adj_[v];
    }

    const std::vector<std::vector<vertex_id>>& adjacency() const { return adj_; }

    bool adjacent(vertex_id u, vertex_id w) const {
        check_vertex(u);
        check_vertex(w);
        const auto& a = adj_[u].size() <= adj_[w].size() ? adj_[u] : adj_[w];
        const vertex_id t = adj_[u].size() <= adj_[w].size() ? w : u;
        return std::binary_search(a.begin(), a.end(), t);
    }

    vertex_id component_anchor(vertex_id v) const {
        check_vertex(v);
        return comp_[v];
    }

    bool same_component(vertex_id u, vertex_id w) const {
        check_vertex(u);
        check_vertex(w);
        return comp_[u] == comp_[w];
    }

    // pre: same component
    bool same_side(vertex_id u, vertex_id w) const {
        assert(same_component(u, w));
        return side_[u] == side_[w];
    }

    bool opposite_side(vertex_id u, vertex_id w) const {
        return same_component(u, w) && side_[u] != side_[w];
    }

    std::vector<vertex_id> component_of(vertex_id v) const {
        check_vertex(v);
        std::vector<vertex_id> out;
        for (vertex_id u = 0; u < size(); ++u)
            if (comp_[u] == comp_[v]) out.push_back(u);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& a : adj_) deg += a.size();
        return deg / 2;
    }

    std::size_t component_count() const {
        std::size_t c = 0;
        for (vertex_id u = 0; u < size(); ++u)
            if (comp_[u] == u) ++c;
        return c;
    }

    // independent re-check by BFS 2-coloring; test oracle, not used on the hot path
    bool check_bipartite() const {
        std::vector<int> color(size(), -1);
        for (vertex_id s = 0; s < size(); ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::deque<vertex_id> queue{s};
            while (!queue.empty()) {
                vertex_id u = queue.front();
                queue.pop_front();
                for (vertex_id w : adj_[u]) {
                    if (color[w] < 0) {
                        color[w] = color[u] ^ 1;
                        queue.push_back(w);
                    } else if (color[w] == color[u]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    void check_vertex(vertex_id v) const {
        if (v >= adj_.size())
            throw unknown_vertex_error("vertex " + std::to_string(v) + " does not exist");
    }

    // reassign anchor and parity across the (possibly merged) component
    void relabel_component(vertex_id anchor) {
        comp_[anchor] = anchor;
        side_[anchor] = 0;
        std::deque<vertex_id> queue{anchor};
        std::vector<char> seen(adj_.size(), 0);
        seen[anchor] = 1;
        while (!queue.empty()) {
            vertex_id u = queue.front();
            queue.pop_front();
            for (vertex_id w : adj_[u]) {
                if (seen[w]) continue;
                seen[w] = 1;
                comp_[w] = anchor;
                side_[w] = side_[u] ^ 1;
                queue.push_back(w);
            }
        }
    }

    std::vector<std::vector<vertex_id>> adj_;
    std::vector<vertex_id> comp_;
    std::vector<std::uint8_t> side_;
};

// A connected vertex set with its two sides; side1 contains the anchor.
struct component_view {
    vertex_id anchor{};
    std::vector<vertex_id> vertices;  // ascending
    std::vector<vertex_id> side1;     // ascending, contains the anchor
    std::vector<vertex_id> side2;     // ascending

    std::size_t size() const { return vertices.size(); }

    bool contains(vertex_id v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    // 1 or 2, 0 when absent
    int side_of(vertex_id v) const {
        if (std::binary_search(side1.begin(), side1.end(), v)) return 1;
        if (std::binary_search(side2.begin(), side2.end(), v)) return 2;
        return 0;
    }
};

// The connected component of the anchor in the subgraph induced by
// { w : w assigned and index(color(w)) <= level } plus the anchor itself.
// An uncolored anchor requires include_uncolored_anchor; a colored anchor
// participates as an ordinary vertex regardless of its own index.
inline component_view level_component(const online_bipartite_graph& g,
                                      const partial_coloring& col, vertex_id anchor,
                                      int level, bool include_uncolored_anchor = false) {
    if (anchor >= g.size())
        throw unknown_vertex_error("anchor " + std::to_string(anchor) + " does not exist");
    if (!col.assigned(anchor) && !include_uncolored_anchor)
        throw uncolored_anchor_error("anchor " + std::to_string(anchor) +
                                     " is uncolored and the flag is unset");
    std::vector<signed char> parity(g.size(), -1);
    parity[anchor] = 0;
    std::deque<vertex_id> queue{anchor};
    while (!queue.empty()) {
        vertex_id u = queue.front();
        queue.pop_front();
        for (vertex_id w : g.neighbors(u)) {
            if (parity[w] >= 0) continue;
            if (!col.assigned(w) || col.at(w).index > level) continue;
            parity[w] = parity[u] ^ 1;
            queue.push_back(w);
        }
    }
    component_view view;
    view.anchor = anchor;
    for (vertex_id u = 0; u < g.size(); ++u) {
        if (parity[u] < 0) continue;
        view.vertices.push_back(u);
        (parity[u] == 0 ? view.side1 : view.side2).push_back(u);
    }
    return view;
}

// Connected components of the view with the anchor deleted, each anchored at
// its own earliest vertex. Ordered by earliest vertex.
inline std::vector<component_view> component_minus_anchor(const online_bipartite_graph& g,
                                                          const component_view& view,
                                                          vertex_id anchor) {
    if (!view.contains(anchor))
        throw unknown_vertex_error("anchor " + std::to_string(anchor) + " not in view");
    std::vector<component_view> out;
    std::vector<signed char> parity(g.size(), -1);
    for (vertex_id start : view.vertices) {
        if (start == anchor || parity[start] >= 0) continue;
        component_view sub;
        sub.anchor = start;
        parity[start] = 0;
        sub.vertices.push_back(start);
        std::deque<vertex_id> queue{start};
        while (!queue.empty()) {
            vertex_id u = queue.front();
            queue.pop_front();
            for (vertex_id w : g.neighbors(u)) {
                if (w == anchor || parity[w] >= 0 || !view.contains(w)) continue;
                parity[w] = parity[u] ^ 1;
                sub.vertices.push_back(w);
                queue.push_back(w);
            }
        }
        std::sort(sub.vertices.begin(), sub.vertices.end());
        for (vertex_id u : sub.vertices)
            (parity[u] == 0 ? sub.side1 : sub.side2).push_back(u);
        out.push_back(std::move(sub));
    }
    return out;
}

// True iff the label appears on both sides of the view.
inline bool is_mixed(const component_view& view, const color_label& c,
                     const partial_coloring& col) {
    auto has = [&](const std::vector<vertex_id>& side) {
        for (vertex_id u : side)
            if (col.assigned(u) && col.at(u) == c) return true;
        return false;
    };
    return has(view.side1) && has(view.side2);
}

// True iff the candidate is adjacent to every target vertex lying on the side
// opposite the candidate (in the graph's bipartition); vacuously true when no
// target vertex is opposite. Target vertices in other components never count
// as opposite.
inline bool is_universal(const online_bipartite_graph& g, vertex_id candidate,
                         const component_view& target) {
    for (vertex_id w : target.vertices) {
        if (!g.opposite_side(candidate, w)) continue;
        if (!g.adjacent(candidate, w)) return false;
    }
    return true;
}

}  // namespace bicolor
