#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bicolor/engines.hpp"
#include "bicolor/forcing.hpp"
#include "bicolor/gen.hpp"
#include "bicolor/graph.hpp"

namespace bicolor {

// true iff no edge is monochromatic; every vertex must be colored
inline bool check_proper(const online_bipartite_graph& g, const partial_coloring& col) {
    for (vertex_id v = 0; v < g.size(); ++v) {
        const color_label cv = col.at(v);
        for (vertex_id u : g.neighbors(v))
            if (u > v && col.at(u) == cv) return false;
    }
    return true;
}

// Induced path on `length` vertices (consecutive adjacent, non-consecutive
// not), optionally pinned to start at `endpoint`. Backtracking with adjacency
// pruning; adjacency lists must be sorted.
inline std::optional<std::vector<vertex_id>> find_induced_path(
    const std::vector<std::vector<vertex_id>>& adj, int length,
    std::optional<vertex_id> endpoint = std::nullopt) {
    if (length < 1) throw std::invalid_argument("path length must be >= 1");
    const std::size_t n = adj.size();
    auto adjacent = [&](vertex_id u, vertex_id w) {
        return std::binary_search(adj[u].begin(), adj[u].end(), w);
    };
    std::vector<vertex_id> path;
    std::vector<char> on_path(n, 0);
    std::function<bool()> dfs = [&]() -> bool {
        if (path.size() == static_cast<std::size_t>(length)) return true;
        const vertex_id last = path.back();
        for (vertex_id w : adj[last]) {
            if (on_path[w]) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if (adjacent(w, path[i])) {
                    induced = false;
                    break;
                }
            }
            if (!induced) continue;
            path.push_back(w);
            on_path[w] = 1;
            if (dfs()) return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    };
    std::vector<vertex_id> starts;
    if (endpoint) {
        if (*endpoint >= n)
            throw unknown_vertex_error("endpoint " + std::to_string(*endpoint) +
                                       " does not exist");
        starts.push_back(*endpoint);
    } else {
        for (vertex_id v = 0; v < n; ++v) starts.push_back(v);
    }
    for (vertex_id s : starts) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        if (dfs()) return path;
    }
    return std::nullopt;
}

inline std::optional<std::vector<vertex_id>> find_induced_path(
    const online_bipartite_graph& g, int length,
    std::optional<vertex_id> endpoint = std::nullopt) {
    return find_induced_path(g.adjacency(), length, endpoint);
}

inline bool is_pk_free(const std::vector<std::vector<vertex_id>>& adj, int k) {
    if (k < 2) throw std::invalid_argument("is_pk_free requires k >= 2");
    return !find_induced_path(adj, k).has_value();
}

inline bool is_pk_free(const online_bipartite_graph& g, int k) {
    return is_pk_free(g.adjacency(), k);
}

inline bool is_pk_free(const rooted_bipartite_graph& x, int k) { return is_pk_free(x.adj, k); }

// index of v's color when it lies on palette a or b, otherwise 0
inline int color_index_of(const run_record& run, vertex_id v) {
    if (!run.coloring.assigned(v)) return 0;
    const color_label c = run.coloring.at(v);
    return c.pal == palette::c ? 0 : c.index;
}

// adjacency restricted to a sorted vertex set; local ids follow that order
inline std::vector<std::vector<vertex_id>> induced_adjacency(
    const online_bipartite_graph& g, const std::vector<vertex_id>& verts) {
    std::vector<std::vector<vertex_id>> out(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (g.adjacent(verts[i], verts[j])) {
                out[i].push_back(static_cast<vertex_id>(j));
                out[j].push_back(static_cast<vertex_id>(i));
            }
        }
    }
    return out;
}

// The earliest a_{k-1} witness on each side of C_{k-1}(v), ordered by id.
// They certify that a_{k-1} is mixed and sit in distinct components.
inline std::pair<vertex_id, vertex_id> children_of(const run_record& run, vertex_id v) {
    const int k = color_index_of(run, v);
    if (k < 2) throw std::invalid_argument("children_of requires color index >= 2");
    const auto& g = run.graph;
    const component_view view = level_component(g, run.coloring, v, k - 1, false);
    auto earliest = [&](const std::vector<vertex_id>& side) -> std::optional<vertex_id> {
        for (vertex_id u : side)
            if (run.coloring.assigned(u) && run.coloring.at(u) == col_a(k - 1)) return u;
        return std::nullopt;
    };
    const auto c1 = earliest(view.side1);
    const auto c2 = earliest(view.side2);
    if (!c1 || !c2)
        throw structure_violation_error("vertex " + std::to_string(v) + " has index " +
                                        std::to_string(k) + " but a_" +
                                        std::to_string(k - 1) + " is not mixed below it");
    const auto comps = component_minus_anchor(g, view, v);
    const component_view* k1 = nullptr;
    const component_view* k2 = nullptr;
    for (const auto& c : comps) {
        if (c.contains(*c1)) k1 = &c;
        if (c.contains(*c2)) k2 = &c;
    }
    if (k1 == k2)
        throw structure_violation_error("children of " + std::to_string(v) +
                                        " share a component of C_" +
                                        std::to_string(k - 1) + "(v)");
    return {std::min(*c1, *c2), std::max(*c1, *c2)};
}

// Children of the child whose component of C_{k-1}(v) carries no induced P_5
// ending at v; on ties the smaller-id child wins. Failure of both components
// certifies an induced P_9 through v.
inline std::pair<vertex_id, vertex_id> grandchildren_of(const run_record& run, vertex_id v) {
    const int k = color_index_of(run, v);
    if (k < 3) throw std::invalid_argument("grandchildren_of requires color index >= 3");
    const auto& g = run.graph;
    const auto [c1, c2] = children_of(run, v);
    const component_view view = level_component(g, run.coloring, v, k - 1, false);
    const auto comps = component_minus_anchor(g, view, v);
    auto p5_free_from_v = [&](vertex_id child) {
        for (const auto& comp : comps) {
            if (!comp.contains(child)) continue;
            std::vector<vertex_id> verts = comp.vertices;
            verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
            const auto local = induced_adjacency(g, verts);
            const auto v_local = static_cast<vertex_id>(
                std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            return !find_induced_path(local, 5, v_local).has_value();
        }
        throw structure_violation_error("child outside C_" + std::to_string(k - 1) + "(v)");
    };
    vertex_id chosen;
    if (p5_free_from_v(c1))
        chosen = c1;
    else if (p5_free_from_v(c2))
        chosen = c2;
    else
        throw not_p9_free_error("both child components of " + std::to_string(v) +
                                " hold an induced P_5 ending at it");
    return children_of(run, chosen);
}

namespace detail {

inline void s_walk(const run_record& run, vertex_id v, int depth,
                   std::vector<vertex_id>& out) {
    out.push_back(v);
    if (depth <= 1 || color_index_of(run, v) < 3) return;
    const auto [g1, g2] = grandchildren_of(run, v);
    s_walk(run, g1, depth - 1, out);
    s_walk(run, g2, depth - 1, out);
}

}  // namespace detail

// grandchild closure to depth i; S_1(v) = {v}
inline std::vector<vertex_id> s_set(const run_record& run, vertex_id v, int depth) {
    if (depth < 1) throw std::invalid_argument("s_set requires depth >= 1");
    std::vector<vertex_id> out;
    detail::s_walk(run, v, depth, out);
    std::vector<vertex_id> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw structure_violation_error("grandchild branches below " + std::to_string(v) +
                                        " overlap");
    return sorted;
}

// complete: every ancestor/descendant pair of the grandchild tree lying on
// opposite sides is adjacent
inline bool is_complete_s(const run_record& run, vertex_id v, int depth) {
    if (depth < 1) throw std::invalid_argument("is_complete_s requires depth >= 1");
    const auto& g = run.graph;
    bool complete = true;
    std::vector<vertex_id> ancestors;
    std::function<void(vertex_id, int)> walk = [&](vertex_id u, int left) {
        if (!complete) return;
        for (vertex_id anc : ancestors) {
            if (g.opposite_side(anc, u) && !g.adjacent(anc, u)) {
                complete = false;
                return;
            }
        }
        if (left <= 1 || color_index_of(run, u) < 3) return;
        const auto [g1, g2] = grandchildren_of(run, u);
        ancestors.push_back(u);
        walk(g1, left - 1);
        walk(g2, left - 1);
        ancestors.pop_back();
    };
    walk(v, depth);
    return complete;
}

// Injective map of an abstract X_k onto host vertices; image[p] hosts vertex p
// of build_xk(target_k).
struct witness_map {
    int target_k = 0;
    std::vector<vertex_id> image;

    vertex_id root_image() const { return image[xk_size(target_k) - 1]; }
};

// true iff the image induces X_{target_k} exactly, with sides oriented so the
// abstract root side lands on the root image's side
inline bool verify_witness(const online_bipartite_graph& g, const witness_map& w) {
    if (w.target_k < 1) return false;
    const rooted_bipartite_graph xt = build_xk(w.target_k);
    if (w.image.size() != xt.size()) return false;
    std::vector<vertex_id> sorted(w.image);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (vertex_id p = 0; p < xt.size(); ++p) {
        if (w.image[p] >= g.size()) return false;
        for (vertex_id q = p + 1; q < xt.size(); ++q)
            if (g.adjacent(w.image[p], w.image[q]) != xt.adjacent(p, q)) return false;
    }
    const vertex_id root = w.root_image();
    for (vertex_id p = 0; p < xt.size(); ++p) {
        if (!g.same_component(w.image[p], root)) return false;
        if (g.same_side(w.image[p], root) != (xt.on_root_side[p] != 0)) return false;
    }
    return true;
}

// largest t with 2 t^2 <= k, the size of the forced copy below an a_k vertex
inline int xk_target(int k) {
    int t = 0;
    while (2 * (t + 1) * (t + 1) <= k) ++t;
    return t;
}

inline witness_map extract_x_witness(const run_record& run, vertex_id v);

// Full-tree assembly: when S_i(v) is complete, its grandchild tree induces an
// X_i rooted at v.
inline witness_map assemble_complete_s(const run_record& run, vertex_id v, int depth) {
    if (depth == 1) return {1, {v}};
    const auto& g = run.graph;
    const auto [g1, g2] = grandchildren_of(run, v);
    if (!g.opposite_side(g1, g2))
        throw structure_violation_error("grandchildren of " + std::to_string(v) +
                                        " are not on opposite sides");
    if (depth == 2) {
        // X_2 is a single edge: v plus its opposite-side grandchild
        const vertex_id other = g.opposite_side(v, g1) ? g1 : g2;
        return {2, {other, v}};
    }
    const witness_map w1 = assemble_complete_s(run, g1, depth - 1);
    const witness_map w2 = assemble_complete_s(run, g2, depth - 1);
    const witness_map& opp = g.opposite_side(v, g1) ? w1 : w2;
    const witness_map& same = g.opposite_side(v, g1) ? w2 : w1;
    const std::size_t half = xk_size(depth - 1);
    witness_map out;
    out.target_k = depth;
    out.image.resize(2 * half + 1);
    std::copy(opp.image.begin(), opp.image.end(), out.image.begin());
    std::copy(same.image.begin(), same.image.end(), out.image.begin() + half);
    out.image.back() = v;
    return out;
}

// replace an X_j witness by the copy-2 sub-witness until it has size `to`;
// the root stays on the same side throughout
inline witness_map trim_witness(witness_map w, int to) {
    while (w.target_k > to) {
        if (w.target_k == 2) {
            w.image = {w.image[1]};
        } else {
            const std::size_t half = xk_size(w.target_k - 1);
            std::vector<vertex_id> next(w.image.begin() + half, w.image.begin() + 2 * half);
            w.image = std::move(next);
        }
        --w.target_k;
    }
    return w;
}

// Join step of the witness recursion: the copies extracted below the children
// of z sit in separate components of C_{l-1}(z), and z' is universal to both,
// so z' plus the copies induce the next larger X.
inline witness_map join_witness(const run_record& run, vertex_id z, vertex_id z_prime) {
    const int l = color_index_of(run, z);
    if (l < 3) throw std::invalid_argument("join_witness requires index >= 3 on z");
    const auto& g = run.graph;
    if (!g.same_component(z, z_prime))
        throw structure_violation_error("join pair spans components");
    const auto [z1, z2] = children_of(run, z);
    const witness_map w1 = extract_x_witness(run, z1);
    const witness_map w2 = extract_x_witness(run, z2);
    if (w1.target_k != w2.target_k)
        throw structure_violation_error("asymmetric sub-witnesses below " + std::to_string(z));
    if (!g.opposite_side(z1, z2))
        throw structure_violation_error("children of " + std::to_string(z) +
                                        " are not on opposite sides");
    const witness_map& opp = g.opposite_side(z_prime, z1) ? w1 : w2;
    const witness_map& same = g.opposite_side(z_prime, z1) ? w2 : w1;
    if (w1.target_k == 1) {
        // the joined copy is X_2, the edge from z' to the opposite-side vertex
        return {2, {opp.image[0], z_prime}};
    }
    const std::size_t half = xk_size(w1.target_k);
    witness_map out;
    out.target_k = w1.target_k + 1;
    out.image.resize(2 * half + 1);
    std::copy(opp.image.begin(), opp.image.end(), out.image.begin());
    std::copy(same.image.begin(), same.image.end(), out.image.begin() + half);
    out.image.back() = z_prime;
    return out;
}

// Constructive form of the forcing guarantee: an a_k vertex in a P_9-free run
// yields a verified induced X_{xk_target(k)} rooted on its own side. Failure
// is diagnostic: it indicates a non-P_9-free input or an engine bug.
inline witness_map extract_x_witness(const run_record& run, vertex_id v) {
    if (!run.coloring.assigned(v) || run.coloring.at(v).pal != palette::a ||
        run.coloring.at(v).index < 2)
        throw std::invalid_argument("extract_x_witness requires an a_k vertex with k >= 2");
    const int k = run.coloring.at(v).index;
    const int t = xk_target(k);
    if (t <= 1) return {1, {v}};

    const auto& g = run.graph;
    std::vector<std::string> notes;
    auto finish = [&](witness_map w, const char* how) -> std::optional<witness_map> {
        w = trim_witness(std::move(w), t);
        if (verify_witness(g, w) && g.same_component(w.root_image(), v) &&
            g.same_side(w.root_image(), v))
            return w;
        notes.push_back(std::string(how) + ": assembled map failed verification");
        return std::nullopt;
    };
    auto try_join = [&](vertex_id z, vertex_id z_prime,
                        const char* how) -> std::optional<witness_map> {
        try {
            witness_map w = join_witness(run, z, z_prime);
            if (w.target_k < t) {
                notes.push_back(std::string(how) + ": joined copy smaller than needed");
                return std::nullopt;
            }
            return finish(std::move(w), how);
        } catch (const std::invalid_argument& e) {
            notes.push_back(std::string(how) + ": " + e.what());
        } catch (const structure_violation_error& e) {
            notes.push_back(std::string(how) + ": " + e.what());
        }
        return std::nullopt;
    };

    if (is_complete_s(run, v, t)) {
        witness_map w = assemble_complete_s(run, v, t);
        if (auto ok = finish(std::move(w), "complete S-set")) return *ok;
        throw extraction_error("complete S_" + std::to_string(t) + "(" + std::to_string(v) +
                               ") did not assemble into X_" + std::to_string(t));
    }

    const component_view ck = level_component(g, run.coloring, v, k, false);

    // a c_k vertex across from v recorded its witness pair when it was colored
    for (vertex_id u : ck.side2) {
        if (!run.coloring.assigned(u) || run.coloring.at(u) != col_c(k)) continue;
        const step_trace& tr = run.outcomes[u].trace;
        if (tr.branch != branch_kind::c_branch) continue;
        if (!g.same_component(tr.witness_u2, v) || !g.same_side(tr.witness_u2, v)) continue;
        if (auto ok = try_join(tr.witness_u, tr.witness_u2, "stored c-pair")) return *ok;
    }

    // otherwise the S-set is incomplete: take its first broken pair (x, y) in
    // construction order and win a universal neighbor of x next to y
    {
        std::optional<std::pair<vertex_id, vertex_id>> broken;
        std::vector<vertex_id> ancestors;
        std::function<void(vertex_id, int)> walk = [&](vertex_id u, int left) {
            if (broken) return;
            for (vertex_id anc : ancestors) {
                if (g.opposite_side(anc, u) && !g.adjacent(anc, u)) {
                    broken = {{anc, u}};
                    return;
                }
            }
            if (left <= 1 || color_index_of(run, u) < 3) return;
            const auto [b1, b2] = grandchildren_of(run, u);
            ancestors.push_back(u);
            walk(b1, left - 1);
            walk(b2, left - 1);
            ancestors.pop_back();
        };
        walk(v, t);
        if (broken) {
            const auto [x, y] = *broken;
            const int xi = color_index_of(run, x);
            const int yj = color_index_of(run, y);
            const component_view cx = level_component(g, run.coloring, x, xi - 1, false);
            const auto comps = component_minus_anchor(g, cx, x);
            const component_view* ky = nullptr;
            for (const auto& comp : comps)
                if (comp.contains(y)) ky = &comp;
            if (ky) {
                const component_view cy = level_component(g, run.coloring, y, yj - 1, false);
                for (vertex_id r : g.neighbors(x)) {
                    if (!ky->contains(r)) continue;
                    if (!is_universal(g, r, cy)) continue;
                    if (!g.same_side(r, v)) {
                        notes.push_back("universal neighbor " + std::to_string(r) +
                                        " lies on the wrong side");
                        continue;
                    }
                    if (auto ok = try_join(y, r, "path-vs-universal")) return *ok;
                }
            } else {
                notes.push_back("broken pair's descendant escaped C_" +
                                std::to_string(xi - 1) + "(x)");
            }
        } else {
            notes.push_back("no broken pair found although S-set reported incomplete");
        }
    }

    // last resort: scan for any valid join pair on the final graph
    for (vertex_id z_prime : ck.side1) {
        for (vertex_id z : ck.vertices) {
            const int l = color_index_of(run, z);
            if (l < 3 || !threshold_holds(k, l)) continue;
            const component_view cz = level_component(g, run.coloring, z, l - 1, false);
            if (!is_universal(g, z_prime, cz)) continue;
            if (auto ok = try_join(z, z_prime, "exhaustive scan")) return *ok;
        }
    }

    std::ostringstream msg;
    msg << "no X_" << t << " witness found below a_" << k << " vertex " << v
        << " (non-P9-free input or engine bug)";
    for (const auto& n : notes) msg << "; " << n;
    throw extraction_error(msg.str());
}

struct theorem_report {
    int k = 0;  // largest a/b color index in the run
    std::size_t distinct = 0;
    bool bound_3k = false;
    bool witness_ok = false;
    bool arithmetic_ok = false;
    std::string detail;

    bool pass() const { return bound_3k && witness_ok && arithmetic_ok; }
};

// The accounting of the main guarantee on one bicolormax run: at most 3k
// colors, a verified forced copy below some a_k vertex, and the numeric chain
// 3k <= 6 (t+1)^2 closing.
inline theorem_report theorem_consistency(const run_record& run) {
    if (run.transcript.engine != engine_name(engine_kind::bicolormax))
        throw std::invalid_argument("theorem_consistency expects a bicolormax run");
    theorem_report rep;
    rep.k = run.max_color_index();
    rep.distinct = run.transcript.distinct_colors();
    rep.bound_3k = rep.distinct <= static_cast<std::size_t>(3 * rep.k);
    const int t = xk_target(rep.k);
    rep.arithmetic_ok = 3 * rep.k <= 6 * (t + 1) * (t + 1);
    if (rep.k < 2) {
        rep.witness_ok = true;  // a single color index needs no witness
        return rep;
    }
    std::optional<vertex_id> a_k;
    for (vertex_id v = 0; v < run.graph.size(); ++v) {
        if (run.coloring.assigned(v) && run.coloring.at(v) == col_a(rep.k)) {
            a_k = v;
            break;
        }
    }
    if (!a_k) {
        rep.detail = "no a_" + std::to_string(rep.k) + " vertex exists";
        return rep;
    }
    try {
        const witness_map w = extract_x_witness(run, *a_k);
        rep.witness_ok = w.target_k == t && verify_witness(run.graph, w) &&
                         run.graph.same_side(w.root_image(), *a_k);
        if (!rep.witness_ok) rep.detail = "extracted witness failed verification";
    } catch (const error& e) {
        rep.detail = e.what();
    }
    return rep;
}

// seeded random bipartite instance kept only when P_9-free; sizes up to n_max
inline std::vector<std::vector<vertex_id>> random_p9free_presentation(std::uint64_t seed,
                                                                      int n_max = 14) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto pres = random_bipartite_presentation(seed * 1000003ULL + attempt, 1, n_max);
        if (is_pk_free(presentation_to_adjacency(pres), 9)) return pres;
    }
}

}  // namespace bicolor
