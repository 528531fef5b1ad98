#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bicolor/types.hpp"

namespace bicolor {

// splitmix64; fixed here so seeded artifacts are identical across platforms
struct splitmix64 {
    std::uint64_t state = 0;

    explicit splitmix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

// A presentation is the adversary-side record of a game: per arrival, the
// neighborhood among earlier vertices.
using presentation = std::vector<std::vector<vertex_id>>;

inline std::vector<std::vector<vertex_id>> presentation_to_adjacency(const presentation& pres) {
    std::vector<std::vector<vertex_id>> adj(pres.size());
    for (vertex_id v = 0; v < pres.size(); ++v) {
        for (vertex_id u : pres[v]) {
            adj[v].push_back(u);
            adj[u].push_back(v);
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

// Random bipartite instance: side sizes drawn from the seed, each cross edge
// kept independently, vertices presented in a seeded random order.
inline presentation random_bipartite_presentation(std::uint64_t seed, int n_min, int n_max) {
    splitmix64 rng(seed);
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int n1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int edge_percent = 10 + static_cast<int>(rng.below(81));

    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n1; ++a) {
        for (int b = n1; b < n; ++b) {
            if (static_cast<int>(rng.below(100)) < edge_percent) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[order[t]] = t;

    presentation pres(n);
    for (int t = 0; t < n; ++t) {
        for (int w : adj[order[t]])
            if (pos[w] < t) pres[t].push_back(static_cast<vertex_id>(pos[w]));
        std::sort(pres[t].begin(), pres[t].end());
    }
    return pres;
}

// Arbitrary (not necessarily bipartite) random graph as adjacency lists;
// used by small-graph oracles.
inline std::vector<std::vector<vertex_id>> random_graph_adjacency(std::uint64_t seed, int n_min,
                                                                  int n_max) {
    splitmix64 rng(seed);
    const int n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    const int edge_percent = 10 + static_cast<int>(rng.below(81));
    std::vector<std::vector<vertex_id>> adj(n);
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (static_cast<int>(rng.below(100)) < edge_percent) {
                adj[u].push_back(static_cast<vertex_id>(w));
                adj[w].push_back(static_cast<vertex_id>(u));
            }
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

}  // namespace bicolor
