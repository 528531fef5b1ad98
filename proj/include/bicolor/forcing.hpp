#pragma once

#include <algorithm>
#include <cassert>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bicolor/engines.hpp"
#include "bicolor/graph.hpp"

namespace bicolor {

// An X_k instance: connected bipartite, the root is universal to the whole
// non-root side.
struct rooted_bipartite_graph {
    std::vector<std::vector<vertex_id>> adj;  // per-vertex, ascending
    vertex_id root = 0;
    std::vector<std::uint8_t> on_root_side;  // 1 iff on the root's side

    std::size_t size() const { return adj.size(); }

    bool adjacent(vertex_id u, vertex_id w) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), w);
    }

    std::vector<vertex_id> root_side() const {
        std::vector<vertex_id> out;
        for (vertex_id v = 0; v < size(); ++v)
            if (on_root_side[v]) out.push_back(v);
        return out;
    }

    std::vector<vertex_id> non_root_side() const {
        std::vector<vertex_id> out;
        for (vertex_id v = 0; v < size(); ++v)
            if (!on_root_side[v]) out.push_back(v);
        return out;
    }
};

inline std::size_t xk_size(int k) {
    assert(k >= 1);
    if (k == 1) return 1;
    std::size_t n = 2;
    for (int i = 3; i <= k; ++i) n = 2 * n + 1;
    return n;
}

// The layout is fixed: X_k for k >= 3 lays copy 1 on [0, n'), copy 2 on
// [n', 2n') and the root last, so sub-copies are index arithmetic.
inline vertex_id xk_root(int k) { return static_cast<vertex_id>(xk_size(k) - 1); }

inline rooted_bipartite_graph build_xk(int k) {
    assert(k >= 1);
    if (k == 1) {
        rooted_bipartite_graph x;
        x.adj.resize(1);
        x.root = 0;
        x.on_root_side = {1};
        return x;
    }
    if (k == 2) {
        rooted_bipartite_graph x;
        x.adj = {{1}, {0}};
        x.root = 1;
        x.on_root_side = {0, 1};
        return x;
    }
    rooted_bipartite_graph half = build_xk(k - 1);
    const std::size_t n = half.size();
    rooted_bipartite_graph x;
    x.adj.resize(2 * n + 1);
    x.root = static_cast<vertex_id>(2 * n);
    x.on_root_side.resize(2 * n + 1);
    for (vertex_id v = 0; v < n; ++v) {
        for (vertex_id w : half.adj[v]) {
            x.adj[v].push_back(w);
            x.adj[v + n].push_back(w + static_cast<vertex_id>(n));
        }
        // the root joins copy 1's root side and copy 2's non-root side, which
        // puts those vertices on the non-root side of X_k
        x.on_root_side[v] = half.on_root_side[v] ? 0 : 1;
        x.on_root_side[v + n] = half.on_root_side[v];
        if (half.on_root_side[v]) {
            x.adj[v].push_back(x.root);
            x.adj[x.root].push_back(v);
        } else {
            x.adj[v + n].push_back(x.root);
            x.adj[x.root].push_back(v + static_cast<vertex_id>(n));
        }
    }
    x.on_root_side[x.root] = 1;
    for (auto& a : x.adj) std::sort(a.begin(), a.end());
    return x;
}

// Placement of disjoint copies Y_1, ..., Y_{k-1} of X_1, ..., X_{k-1} inside
// X_k, oriented by the binary sequence alpha.
struct embedding_plan {
    int k = 0;
    std::vector<std::uint8_t> alpha;  // alpha[i-1] for copy Y_i
    // copy_map[i-1][p] = X_k vertex hosting vertex p of the abstract X_i
    std::vector<std::vector<vertex_id>> copy_map;
    // 1 iff the root side of Y_i lands inside the root side of X_k (== alpha)
    std::vector<std::uint8_t> orientation;
};

inline embedding_plan embed_copies(int k, const std::vector<std::uint8_t>& alpha) {
    if (k < 2) throw error("embed_copies requires k >= 2");
    if (alpha.size() != static_cast<std::size_t>(k - 1))
        throw error("alpha must have length k-1");
    embedding_plan plan;
    plan.k = k;
    plan.alpha = alpha;
    plan.orientation = alpha;
    if (k == 2) {
        plan.copy_map = {{alpha[0] ? xk_root(2) : vertex_id{0}}};
        return plan;
    }
    const vertex_id shift = static_cast<vertex_id>(xk_size(k - 1));
    if (alpha[k - 2] == 0) {
        // copy 1 hosts Y_{k-1} with its root side on the non-root side of X_k;
        // recurse into copy 2, whose orientation is preserved
        std::vector<std::uint8_t> sub_alpha(alpha.begin(), alpha.end() - 1);
        embedding_plan sub = embed_copies(k - 1, sub_alpha);
        plan.copy_map = std::move(sub.copy_map);
        for (auto& m : plan.copy_map)
            for (auto& host : m) host += shift;
        std::vector<vertex_id> top(shift);
        for (vertex_id v = 0; v < shift; ++v) top[v] = v;
        plan.copy_map.push_back(std::move(top));
    } else {
        // copy 2 hosts Y_{k-1}; copy 1 is flipped, so recurse with the
        // complemented sequence
        std::vector<std::uint8_t> sub_alpha(alpha.begin(), alpha.end() - 1);
        for (auto& bit : sub_alpha) bit ^= 1;
        embedding_plan sub = embed_copies(k - 1, sub_alpha);
        plan.copy_map = std::move(sub.copy_map);
        std::vector<vertex_id> top(shift);
        for (vertex_id v = 0; v < shift; ++v) top[v] = v + shift;
        plan.copy_map.push_back(std::move(top));
    }
    return plan;
}

// True iff every image induces a copy of X_i with the requested orientation,
// images are disjoint and no X_k edge joins two images.
inline bool verify_embedding(const rooted_bipartite_graph& xk, const embedding_plan& plan) {
    if (plan.copy_map.size() != static_cast<std::size_t>(plan.k - 1)) return false;
    std::vector<vertex_id> all;
    for (int i = 1; i < plan.k; ++i) {
        const auto& map = plan.copy_map[i - 1];
        const rooted_bipartite_graph xi = build_xk(i);
        if (map.size() != xi.size()) return false;
        for (vertex_id host : map) {
            if (host >= xk.size()) return false;
            all.push_back(host);
        }
        for (vertex_id p = 0; p < xi.size(); ++p) {
            for (vertex_id q = p + 1; q < xi.size(); ++q)
                if (xk.adjacent(map[p], map[q]) != xi.adjacent(p, q)) return false;
            const bool lands_root_side = xk.on_root_side[map[p]];
            const bool expect_root_side =
                xi.on_root_side[p] ? plan.orientation[i - 1] : !plan.orientation[i - 1];
            if (lands_root_side != expect_root_side) return false;
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int i = 1; i < plan.k; ++i)
        for (int j = i + 1; j < plan.k; ++j)
            for (vertex_id p : plan.copy_map[i - 1])
                for (vertex_id q : plan.copy_map[j - 1])
                    if (xk.adjacent(p, q)) return false;
    return true;
}

// True iff embed is an injective map of the presented graph onto an induced
// subgraph of the host.
inline bool verify_induced_embedding(const online_bipartite_graph& g,
                                     const std::vector<vertex_id>& embed,
                                     const rooted_bipartite_graph& host) {
    if (embed.size() != g.size()) return false;
    std::vector<vertex_id> images(embed);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    for (vertex_id p = 0; p < g.size(); ++p) {
        if (embed[p] >= host.size()) return false;
        for (vertex_id q = p + 1; q < g.size(); ++q)
            if (g.adjacent(p, q) != host.adjacent(embed[p], embed[q])) return false;
    }
    return true;
}

struct forcing_result {
    run_record run;
    std::vector<vertex_id> embed;  // presented id -> abstract X_k vertex
    rooted_bipartite_graph xk;
};

namespace detail {

struct forced_copy {
    std::vector<vertex_id> ids;   // presented ids, arrival order
    std::vector<vertex_id> to_x;  // parallel: image in the abstract X_i
};

inline void check_proper_move(const engine_session& s, vertex_id v) {
    for (vertex_id u : s.graph().neighbors(v))
        if (s.coloring().at(u) == s.coloring().at(v))
            throw structure_violation_error("engine colored an edge monochromatically");
}

// earliest vertex of the copy whose label is still unclaimed
inline std::pair<std::size_t, color_label> sdr_pick(const engine_session& s,
                                                    const std::vector<vertex_id>& ids,
                                                    const std::set<color_label>& taken) {
    for (std::size_t idx = 0; idx < ids.size(); ++idx) {
        const color_label lab = s.coloring().at(ids[idx]);
        if (!taken.count(lab)) return {idx, lab};
    }
    throw structure_violation_error("copy carries no unclaimed color");
}

inline forced_copy force_rec(int k, engine_session& s) {
    if (k == 1) {
        forced_copy out;
        const std::size_t before = s.graph().size();
        s.present({});
        out.ids = {static_cast<vertex_id>(before)};
        out.to_x = {0};
        return out;
    }
    std::vector<forced_copy> subs;
    subs.reserve(k - 1);
    for (int j = 1; j < k; ++j) subs.push_back(force_rec(j, s));

    // distinct representatives c_1, ..., c_{k-1}, greedily in increasing j:
    // Y_j shows at least j colors while at most j-1 are taken
    std::set<color_label> taken;
    std::vector<std::uint8_t> alpha(k - 1);
    for (int j = 1; j < k; ++j) {
        const auto [idx, lab] = sdr_pick(s, subs[j - 1].ids, taken);
        taken.insert(lab);
        const rooted_bipartite_graph xj = build_xk(j);
        alpha[j - 1] = xj.on_root_side[subs[j - 1].to_x[idx]] ? 0 : 1;
    }

    const embedding_plan plan = embed_copies(k, alpha);
    const rooted_bipartite_graph xk = build_xk(k);
    forced_copy out;
    for (int j = 1; j < k; ++j) {
        for (std::size_t t = 0; t < subs[j - 1].ids.size(); ++t) {
            out.ids.push_back(subs[j - 1].ids[t]);
            out.to_x.push_back(plan.copy_map[j - 1][subs[j - 1].to_x[t]]);
        }
    }
    // the root of X_k sees exactly the presented vertices landing on the
    // non-root side; the chosen v_j all do, by the choice of alpha
    std::vector<vertex_id> root_neighbors;
    for (std::size_t t = 0; t < out.ids.size(); ++t)
        if (!xk.on_root_side[out.to_x[t]]) root_neighbors.push_back(out.ids[t]);
    const vertex_id gid = static_cast<vertex_id>(s.graph().size());
    s.present(root_neighbors);
    check_proper_move(s, gid);
    out.ids.push_back(gid);
    out.to_x.push_back(xk.root);
    return out;
}

}  // namespace detail

// Adaptive strategy forcing >= k distinct colors out of any proper online
// colorer while presenting an induced subgraph of X_k on 2^{k-1} vertices.
inline forcing_result adversary_force(int k, engine_kind kind, std::uint64_t seed = 0) {
    if (k < 1) throw error("adversary_force requires k >= 1");
    engine_session session(kind, seed);
    detail::forced_copy top = detail::force_rec(k, session);
    forcing_result res;
    res.xk = build_xk(k);
    res.embed.resize(top.ids.size());
    for (std::size_t t = 0; t < top.ids.size(); ++t) res.embed[top.ids[t]] = top.to_x[t];
    session.transcript().adversary = "xk";
    session.transcript().k = k;
    res.run = std::move(session).finish();
    if (res.run.transcript.distinct_colors() < static_cast<std::size_t>(k))
        throw structure_violation_error("forcing fell short of k colors");
    return res;
}

// u_1, w_1, ..., u_p, w_p with u_i adjacent to w_1..w_{i-1} and w_i to
// u_1..u_{i-1}; builds the crown graph K_{p,p} minus a perfect matching.
inline std::vector<std::vector<vertex_id>> crown_presentation(int pairs) {
    if (pairs < 1) throw error("crown_presentation requires pairs >= 1");
    std::vector<std::vector<vertex_id>> pres;
    for (int i = 1; i <= pairs; ++i) {
        std::vector<vertex_id> u_nb, w_nb;
        for (int j = 1; j < i; ++j) {
            u_nb.push_back(static_cast<vertex_id>(2 * j - 1));
            w_nb.push_back(static_cast<vertex_id>(2 * j - 2));
        }
        pres.push_back(std::move(u_nb));
        pres.push_back(std::move(w_nb));
    }
    return pres;
}

namespace detail {

inline std::vector<vertex_id> forest_rec(int k, engine_session& s) {
    if (k == 1) {
        const vertex_id gid = static_cast<vertex_id>(s.graph().size());
        s.present({});
        return {gid};
    }
    std::vector<std::vector<vertex_id>> subs;
    for (int j = 1; j < k; ++j) subs.push_back(forest_rec(j, s));
    std::set<color_label> taken;
    std::vector<vertex_id> reps;
    for (int j = 1; j < k; ++j) {
        const auto [idx, lab] = sdr_pick(s, subs[j - 1], taken);
        taken.insert(lab);
        reps.push_back(subs[j - 1][idx]);
    }
    const vertex_id gid = static_cast<vertex_id>(s.graph().size());
    s.present(reps);
    check_proper_move(s, gid);
    std::vector<vertex_id> out;
    for (const auto& sub : subs) out.insert(out.end(), sub.begin(), sub.end());
    out.push_back(gid);
    return out;
}

}  // namespace detail

// Classical binomial strategy: joins one suitably colored vertex from each of
// k-1 recursively forced subtrees, so the join vertex sees k-1 distinct
// colors. Forces >= k colors on a forest of 2^{k-1} vertices.
inline run_record forest_adversary(int k, engine_kind kind, std::uint64_t seed = 0) {
    if (k < 1) throw error("forest_adversary requires k >= 1");
    engine_session session(kind, seed);
    detail::forest_rec(k, session);
    session.transcript().adversary = "forest";
    session.transcript().k = k;
    run_record run = std::move(session).finish();
    if (run.transcript.distinct_colors() < static_cast<std::size_t>(k))
        throw structure_violation_error("forest strategy fell short of k colors");
    return run;
}

}  // namespace bicolor
