#include <catch2/catch.hpp>

#include "bicolor/analysis.hpp"
#include "bicolor/engines.hpp"
#include "bicolor/forcing.hpp"
#include "bicolor/gen.hpp"
#include "bicolor/graph.hpp"

using namespace bicolor;

namespace {

// present a rooted graph in id order and color everything a_1 so level
// components cover whole components
std::pair<online_bipartite_graph, partial_coloring> as_online(const rooted_bipartite_graph& x) {
    online_bipartite_graph g;
    partial_coloring col;
    for (vertex_id v = 0; v < x.size(); ++v) {
        std::vector<vertex_id> nb;
        for (vertex_id w : x.adj[v])
            if (w < v) nb.push_back(w);
        g.add_vertex(nb);
        col.set(v, col_a(1));
    }
    return {std::move(g), std::move(col)};
}

}  // namespace

TEST_CASE("add_vertex assigns dense ids and keeps adjacency symmetric", "[graph]") {
    online_bipartite_graph g;
    REQUIRE(g.add_vertex({}) == 0);
    REQUIRE(g.add_vertex({0}) == 1);
    REQUIRE(g.adjacent(0, 1));
    REQUIRE(g.adjacent(1, 0));
    REQUIRE(g.neighbors(0) == std::vector<vertex_id>{1});
}

TEST_CASE("add_vertex rejects odd cycles and unknown ids", "[graph]") {
    online_bipartite_graph g;
    g.add_vertex({});
    g.add_vertex({0});
    REQUIRE_THROWS_AS(g.add_vertex({0, 1}), odd_cycle_error);
    REQUIRE(g.size() == 2);  // failed insertion left the graph untouched
    REQUIRE_THROWS_AS(g.add_vertex({7}), unknown_vertex_error);
}

TEST_CASE("parity tags survive component merges", "[graph]") {
    online_bipartite_graph g;
    g.add_vertex({});      // 0
    g.add_vertex({});      // 1
    g.add_vertex({1});     // 2
    g.add_vertex({0, 2});  // 3 joins both components
    REQUIRE(g.same_component(0, 1));
    REQUIRE(g.opposite_side(3, 0));
    REQUIRE(g.opposite_side(3, 2));
    REQUIRE(g.same_side(3, 1));
    REQUIRE(g.check_bipartite());
}

TEST_CASE("level_component on fresh and tiny graphs", "[graph]") {
    online_bipartite_graph g;
    partial_coloring col;
    g.add_vertex({});
    SECTION("freshly presented isolated vertex") {
        const auto view = level_component(g, col, 0, 1, true);
        REQUIRE(view.vertices == std::vector<vertex_id>{0});
        REQUIRE(view.side1 == std::vector<vertex_id>{0});
        REQUIRE(view.side2.empty());
    }
    SECTION("uncolored anchor needs the flag") {
        REQUIRE_THROWS_AS(level_component(g, col, 0, 1, false), uncolored_anchor_error);
    }
    SECTION("colored edge, both levels") {
        col.set(0, col_a(1));
        g.add_vertex({0});
        col.set(1, col_b(1));
        const auto both = level_component(g, col, 1, 1);
        REQUIRE(both.vertices == std::vector<vertex_id>{0, 1});
        REQUIRE(both.side1 == std::vector<vertex_id>{1});
        REQUIRE(both.side2 == std::vector<vertex_id>{0});
        const auto alone = level_component(g, col, 1, 0);
        REQUIRE(alone.vertices == std::vector<vertex_id>{1});
    }
}

TEST_CASE("component_minus_anchor splits into anchored pieces", "[graph]") {
    online_bipartite_graph g;
    partial_coloring col;
    SECTION("star center leaves two singletons") {
        g.add_vertex({});      // 0 = x
        g.add_vertex({});      // 1 = y
        g.add_vertex({0, 1});  // 2 = center
        for (vertex_id v = 0; v < 3; ++v) col.set(v, col_a(1));
        const auto view = level_component(g, col, 2, 1);
        const auto parts = component_minus_anchor(g, view, 2);
        REQUIRE(parts.size() == 2);
        REQUIRE(parts[0].vertices == std::vector<vertex_id>{0});
        REQUIRE(parts[1].vertices == std::vector<vertex_id>{1});
    }
    SECTION("path x-v-y-z splits into {x} and {y,z}") {
        g.add_vertex({});    // 0 = x
        g.add_vertex({0});   // 1 = v
        g.add_vertex({1});   // 2 = y
        g.add_vertex({2});   // 3 = z
        for (vertex_id v = 0; v < 4; ++v) col.set(v, col_a(1));
        const auto view = level_component(g, col, 1, 1);
        const auto parts = component_minus_anchor(g, view, 1);
        REQUIRE(parts.size() == 2);
        REQUIRE(parts[0].vertices == std::vector<vertex_id>{0});
        REQUIRE(parts[1].vertices == std::vector<vertex_id>{2, 3});
        REQUIRE(parts[1].side1 == std::vector<vertex_id>{2});
    }
    SECTION("singleton view leaves nothing") {
        g.add_vertex({});
        col.set(0, col_a(1));
        const auto view = level_component(g, col, 0, 1);
        REQUIRE(component_minus_anchor(g, view, 0).empty());
    }
}

TEST_CASE("is_mixed distinguishes palettes and sides", "[graph]") {
    online_bipartite_graph g;
    partial_coloring col;
    g.add_vertex({});
    g.add_vertex({0});
    col.set(0, col_a(1));
    const auto probe = [&](color_label c1) {
        col.set(1, c1);
        return level_component(g, col, 0, 1);
    };
    SECTION("a1 on both sides is mixed") {
        const auto view = probe(col_a(1));
        REQUIRE(is_mixed(view, col_a(1), col));
    }
    SECTION("a1 on one side only is not") {
        const auto view = probe(col_b(1));
        REQUIRE_FALSE(is_mixed(view, col_a(1), col));
    }
    SECTION("palettes never mix with each other") {
        const auto view = probe(col_b(1));
        REQUIRE_FALSE(is_mixed(view, col_b(1), col));  // b1 only on side2
    }
}

TEST_CASE("is_universal on views", "[graph]") {
    SECTION("same-side target is vacuously dominated") {
        online_bipartite_graph g;
        partial_coloring col;
        g.add_vertex({});
        g.add_vertex({0});
        g.add_vertex({1});  // 0 and 2 share a side
        for (vertex_id v = 0; v < 3; ++v) col.set(v, col_a(1));
        component_view target;
        target.anchor = 2;
        target.vertices = {2};
        target.side1 = {2};
        REQUIRE(is_universal(g, 0, target));
    }
    SECTION("the root of X_3 is universal to the whole structure") {
        const auto x3 = build_xk(3);
        auto [g, col] = as_online(x3);
        const auto whole = level_component(g, col, x3.root, 1);
        REQUIRE(whole.size() == 5);
        REQUIRE(is_universal(g, x3.root, whole));
    }
    SECTION("one missing opposite edge breaks universality") {
        online_bipartite_graph g;
        partial_coloring col;
        g.add_vertex({});   // 0
        g.add_vertex({});   // 1
        g.add_vertex({0});  // 2 adjacent to only one of {0, 1}
        g.add_vertex({0, 1});  // 3 connects everything
        for (vertex_id v = 0; v < 4; ++v) col.set(v, col_a(1));
        const auto whole = level_component(g, col, 2, 1);
        REQUIRE(whole.size() == 4);
        REQUIRE_FALSE(is_universal(g, 2, whole));
        REQUIRE(is_universal(g, 3, whole));
    }
}

TEST_CASE("root universality characterizes X_k roots at desk scale", "[graph][forcing]") {
    for (int k = 1; k <= 5; ++k) {
        const auto xk = build_xk(k);
        auto [g, col] = as_online(xk);
        const auto whole = level_component(g, col, xk.root, 1);
        REQUIRE(whole.size() == xk.size());
        REQUIRE(is_universal(g, xk.root, whole));
        if (k >= 3) {
            for (vertex_id v = 0; v < xk.size(); ++v) {
                if (v == xk.root) continue;
                CHECK_FALSE(is_universal(g, v, whole));
            }
        }
    }
}

TEST_CASE("side tags match shortest-path parity", "[graph][property]") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        online_bipartite_graph g;
        for (const auto& nb : random_bipartite_presentation(seed, 5, 30)) g.add_vertex(nb);
        for (vertex_id s = 0; s < g.size(); ++s) {
            // independent parity computation by plain BFS distance
            std::vector<int> dist(g.size(), -1);
            dist[s] = 0;
            std::vector<vertex_id> frontier{s};
            while (!frontier.empty()) {
                std::vector<vertex_id> next;
                for (vertex_id u : frontier)
                    for (vertex_id w : g.neighbors(u))
                        if (dist[w] < 0) {
                            dist[w] = dist[u] + 1;
                            next.push_back(w);
                        }
                frontier = std::move(next);
            }
            for (vertex_id w = 0; w < g.size(); ++w) {
                REQUIRE(g.same_component(s, w) == (dist[w] >= 0));
                if (dist[w] >= 0) REQUIRE(g.same_side(s, w) == (dist[w] % 2 == 0));
            }
        }
    }
}

TEST_CASE("level components grow with the level and split cleanly", "[graph][property]") {
    const auto run = run_colorer(engine_kind::bicolormax,
                                 random_bipartite_presentation(42, 20, 40));
    const auto& g = run.graph;
    for (vertex_id v = 0; v < g.size(); v += 3) {
        component_view previous;
        for (int level = 0; level <= run.max_index_any() + 1; ++level) {
            const auto view = level_component(g, run.coloring, v, level);
            REQUIRE(std::includes(view.vertices.begin(), view.vertices.end(),
                                  previous.vertices.begin(), previous.vertices.end()));
            // sides partition the view and no edge stays inside a side
            REQUIRE(view.side1.size() + view.side2.size() == view.vertices.size());
            for (vertex_id a : view.side1)
                for (vertex_id b : view.side1)
                    REQUIRE_FALSE((a != b && g.adjacent(a, b)));
            previous = view;
        }
        // deleting the anchor partitions the component with no cross edges
        const auto view = level_component(g, run.coloring, v, run.max_index_any());
        const auto parts = component_minus_anchor(g, view, v);
        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        REQUIRE(total + 1 == view.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (vertex_id a : parts[i].vertices)
                    for (vertex_id b : parts[j].vertices) REQUIRE_FALSE(g.adjacent(a, b));
    }
}
