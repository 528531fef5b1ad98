#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bicolor/forcing.hpp"
#include "bicolor/graph.hpp"

namespace bicolor {

// adjacency-mask graph for the game-tree solver; at most 15 vertices
struct small_graph {
    int n = 0;
    std::array<std::uint16_t, 15> bits{};

    void add_edge(int u, int v) {
        bits[u] |= std::uint16_t(1u << v);
        bits[v] |= std::uint16_t(1u << u);
    }

    bool adjacent(int u, int v) const { return (bits[u] >> v) & 1u; }
};

inline small_graph to_small_graph(const std::vector<std::vector<vertex_id>>& adj) {
    if (adj.size() > 15) throw solver_limit_error("graph too large for the solver types");
    small_graph g;
    g.n = static_cast<int>(adj.size());
    for (int u = 0; u < g.n; ++u)
        for (vertex_id w : adj[u])
            if (static_cast<int>(w) > u) g.add_edge(u, static_cast<int>(w));
    return g;
}

inline small_graph to_small_graph(const online_bipartite_graph& g) {
    return to_small_graph(g.adjacency());
}

inline small_graph to_small_graph(const rooted_bipartite_graph& x) {
    return to_small_graph(x.adj);
}

namespace detail {

// observation after t placements: per vertex, its adjacency mask among the
// earlier vertices and its color; colors stay normalized to 1..d
struct solver_state {
    std::vector<std::uint16_t> masks;
    std::vector<int> colors;

    int size() const { return static_cast<int>(masks.size()); }

    bool adjacent(int i, int j) const {
        const int lo = std::min(i, j), hi = std::max(i, j);
        return (masks[hi] >> lo) & 1u;
    }

    int distinct() const {
        int d = 0;
        for (int c : colors) d = std::max(d, c);
        return d;  // colors are normalized, the max is the count
    }
};

class chi_star_game {
public:
    chi_star_game(const small_graph& g, int budget) : g_(g), budget_(budget) {}

    int solve() {
        solver_state empty;
        return value(empty);
    }

private:
    // neighborhood masks the adversary can realize for the next vertex: every
    // extension of a consistent induced embedding of the observation into g_
    std::vector<std::uint16_t> adversary_moves(const solver_state& st) const {
        std::set<std::uint16_t> moves;
        const int t = st.size();
        std::vector<int> image(t, -1);
        std::uint16_t used = 0;
        std::function<void(int)> place = [&](int i) {
            if (i == t) {
                for (int cand = 0; cand < g_.n; ++cand) {
                    if ((used >> cand) & 1u) continue;
                    std::uint16_t mask = 0;
                    for (int j = 0; j < t; ++j)
                        if (g_.adjacent(cand, image[j])) mask |= std::uint16_t(1u << j);
                    moves.insert(mask);
                }
                return;
            }
            for (int cand = 0; cand < g_.n; ++cand) {
                if ((used >> cand) & 1u) continue;
                bool ok = true;
                for (int j = 0; j < i; ++j) {
                    if (st.adjacent(i, j) != g_.adjacent(cand, image[j])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                image[i] = cand;
                used |= std::uint16_t(1u << cand);
                place(i + 1);
                used &= std::uint16_t(~(1u << cand));
            }
        };
        place(0);
        return {moves.begin(), moves.end()};
    }

    // canonical key of the colored observation, minimized over vertex
    // relabelings with colors renamed by first appearance
    std::string canonical(const solver_state& st) const {
        const int t = st.size();
        std::vector<int> perm(t);
        for (int i = 0; i < t; ++i) perm[i] = i;
        std::string best;
        do {
            std::string key;
            key.reserve(t * (t + 1) / 2 + t);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < i; ++j)
                    key.push_back(st.adjacent(perm[i], perm[j]) ? '1' : '0');
            int next_name = 0;
            std::array<int, 16> rename;
            rename.fill(0);
            for (int i = 0; i < t; ++i) {
                const int c = st.colors[perm[i]];
                if (rename[c] == 0) rename[c] = ++next_name;
                key.push_back(static_cast<char>('a' + rename[c]));
            }
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    int value(solver_state& st) {
        const int t = st.size();
        if (t == g_.n) return st.distinct();
        const std::string key = canonical(st);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int d = st.distinct();
        int worst = 0;
        for (std::uint16_t mask : adversary_moves(st)) {
            std::uint16_t banned = 0;
            for (int j = 0; j < t; ++j)
                if ((mask >> j) & 1u) banned |= std::uint16_t(1u << st.colors[j]);
            int best_here = budget_ + 1;  // budget exhausted until a color fits
            for (int c = 1; c <= std::min(d + 1, budget_); ++c) {
                if ((banned >> c) & 1u) continue;
                st.masks.push_back(mask);
                st.colors.push_back(c);
                best_here = std::min(best_here, value(st));
                st.masks.pop_back();
                st.colors.pop_back();
                if (best_here <= d) break;  // the final count never drops below d
            }
            worst = std::max(worst, best_here);
            if (worst > budget_) break;
        }
        memo_[key] = worst;
        return worst;
    }

    small_graph g_;
    int budget_;
    std::unordered_map<std::string, int> memo_;
};

}  // namespace detail

// Exact value of the presentation game on g: the adversary reveals vertices
// of g in any order, the colorer answers with proper colors from 1..budget,
// and the value is the number of distinct colors at the end under optimal
// play on both sides.
inline int online_chromatic_number(const small_graph& g, int budget, int size_limit = 7) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    if (g.n > size_limit)
        throw solver_limit_error("graph has " + std::to_string(g.n) +
                                 " vertices, solver limit is " + std::to_string(size_limit));
    if (g.n == 0) return 0;
    detail::chi_star_game game(g, budget);
    const int v = game.solve();
    if (v > budget)
        throw budget_exhausted_error("value exceeds the budget of " + std::to_string(budget));
    return v;
}

}  // namespace bicolor
