#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "bicolor/gen.hpp"
#include "bicolor/graph.hpp"
#include "bicolor/transcript.hpp"

namespace bicolor {

enum class engine_kind { bicolormax, first_fit, cbip, random_fit };

inline std::string engine_name(engine_kind e) {
    switch (e) {
    case engine_kind::bicolormax: return "bicolormax";
    case engine_kind::first_fit: return "firstfit";
    case engine_kind::cbip: return "cbip";
    default: return "randomfit";
    }
}

inline std::optional<engine_kind> engine_from_name(const std::string& name) {
    if (name == "bicolormax") return engine_kind::bicolormax;
    if (name == "firstfit") return engine_kind::first_fit;
    if (name == "cbip") return engine_kind::cbip;
    if (name == "randomfit") return engine_kind::random_fit;
    return std::nullopt;
}

enum class branch_kind : std::uint8_t { none, b_branch, a_via_c, c_branch, a_default };

inline std::string branch_name(branch_kind b) {
    switch (b) {
    case branch_kind::b_branch: return "B-branch";
    case branch_kind::a_via_c: return "A-via-c";
    case branch_kind::c_branch: return "C-branch";
    case branch_kind::a_default: return "A-default";
    default: return "";
    }
}

// diagnostic record of one bicolormax decision
struct step_trace {
    int m = 0;
    std::vector<color_label> i2_colors;  // distinct labels on I2 of C_m[v], ascending
    branch_kind branch = branch_kind::none;
    vertex_id witness_u = 0;   // C-branch pair (u, u'); meaningful iff branch == c_branch
    vertex_id witness_u2 = 0;
};

struct step_outcome {
    vertex_id vertex{};
    color_label color;
    step_trace trace;
};

struct bicolormax_options {
    // "color index" ranges over palettes a/b; letting palette-c vertices serve
    // as the threshold witness u is the alternate reading, off by default
    bool c_palette_witness = false;
};

struct colorer_state {
    online_bipartite_graph graph;
    partial_coloring coloring;
    int max_index_used = 0;  // largest index assigned so far, any palette
    bicolormax_options options{};
    splitmix64 rng{0};  // random_fit only
};

// j >= m - sqrt(2m) + 2, decided exactly over the integers:
// with t = m + 2 - j, true iff t <= 0 or t^2 <= 2m.
inline bool threshold_holds(int m, int j) {
    assert(m >= 1 && j >= 1);
    const long long t = static_cast<long long>(m) + 2 - j;
    return t <= 0 || t * t <= 2LL * m;
}

inline step_outcome bicolormax_step(colorer_state& st, const std::vector<vertex_id>& neighbors) {
    const vertex_id v = st.graph.add_vertex(neighbors);
    st.coloring.ensure_size(static_cast<std::size_t>(v) + 1);
    const auto& g = st.graph;
    const auto& col = st.coloring;

    // m = 1 + max{ i >= 1 : a_i mixed in C_i[v] }; no index above
    // max_index_used exists, so the scan range is exhaustive
    int m = 1;
    for (int i = 1; i <= st.max_index_used + 1; ++i) {
        component_view ci = level_component(g, col, v, i, true);
        if (is_mixed(ci, col_a(i), col)) m = i + 1;
    }

    component_view cm = level_component(g, col, v, m, true);
    step_trace tr;
    tr.m = m;
    for (vertex_id u : cm.side2)
        if (col.assigned(u)) tr.i2_colors.push_back(col.at(u));
    std::sort(tr.i2_colors.begin(), tr.i2_colors.end());
    tr.i2_colors.erase(std::unique(tr.i2_colors.begin(), tr.i2_colors.end()),
                       tr.i2_colors.end());
    auto on_i2 = [&](color_label c) {
        return std::binary_search(tr.i2_colors.begin(), tr.i2_colors.end(), c);
    };

    color_label chosen;
    if (on_i2(col_a(m))) {
        chosen = col_b(m);
        tr.branch = branch_kind::b_branch;
    } else if (on_i2(col_c(m))) {
        chosen = col_a(m);
        tr.branch = branch_kind::a_via_c;
    } else {
        // third condition: u anywhere in C_m[v] with high enough color index,
        // u' on I2 universal to C_{j-1}[u]
        std::optional<std::pair<vertex_id, vertex_id>> witness;
        for (vertex_id u : cm.vertices) {
            if (!col.assigned(u)) continue;  // skips the in-flight v
            const color_label cu = col.at(u);
            if (cu.pal == palette::c && !st.options.c_palette_witness) continue;
            const int j = cu.index;
            if (!threshold_holds(m, j)) continue;
            component_view cj = level_component(g, col, u, j - 1, false);
            for (vertex_id u2 : cm.side2) {
                if (is_universal(g, u2, cj)) {
                    witness = {u, u2};
                    break;
                }
            }
            if (witness) break;
        }
        if (witness) {
            assert(m >= 2);  // c_1 is unreachable: j <= m and the threshold force m >= 2
            chosen = col_c(m);
            tr.branch = branch_kind::c_branch;
            tr.witness_u = witness->first;
            tr.witness_u2 = witness->second;
        } else {
            chosen = col_a(m);
            tr.branch = branch_kind::a_default;
        }
    }

    st.coloring.set(v, chosen);
    st.max_index_used = std::max(st.max_index_used, chosen.index);
    return {v, chosen, tr};
}

// least admissible positive integer, encoded on palette a
inline step_outcome first_fit_step(colorer_state& st, const std::vector<vertex_id>& neighbors) {
    const vertex_id v = st.graph.add_vertex(neighbors);
    std::vector<char> used(st.max_index_used + 2, 0);
    for (vertex_id u : st.graph.neighbors(v))
        if (st.coloring.assigned(u)) used[st.coloring.at(u).index] = 1;
    int c = 1;
    while (used[c]) ++c;
    st.coloring.set(v, col_a(c));
    st.max_index_used = std::max(st.max_index_used, c);
    return {v, col_a(c), {}};
}

// least integer not used on the opposite side of v's current component
inline step_outcome cbip_step(colorer_state& st, const std::vector<vertex_id>& neighbors) {
    const vertex_id v = st.graph.add_vertex(neighbors);
    std::vector<char> used(st.max_index_used + 2, 0);
    for (vertex_id u = 0; u < st.graph.size(); ++u)
        if (u != v && st.graph.opposite_side(v, u)) used[st.coloring.at(u).index] = 1;
    int c = 1;
    while (used[c]) ++c;
    st.coloring.set(v, col_a(c));
    st.max_index_used = std::max(st.max_index_used, c);
    return {v, col_a(c), {}};
}

// seeded random proper colorer: uniform over the admissible part of
// {1, ..., max_index_used + 1}; the fresh color keeps the set nonempty
inline step_outcome random_fit_step(colorer_state& st, const std::vector<vertex_id>& neighbors) {
    const vertex_id v = st.graph.add_vertex(neighbors);
    std::vector<char> banned(st.max_index_used + 2, 0);
    for (vertex_id u : st.graph.neighbors(v))
        if (st.coloring.assigned(u)) banned[st.coloring.at(u).index] = 1;
    std::vector<int> candidates;
    for (int c = 1; c <= st.max_index_used + 1; ++c)
        if (!banned[c]) candidates.push_back(c);
    const int c = candidates[st.rng.below(candidates.size())];
    st.coloring.set(v, col_a(c));
    st.max_index_used = std::max(st.max_index_used, c);
    return {v, col_a(c), {}};
}

inline step_outcome engine_step(engine_kind kind, colorer_state& st,
                                const std::vector<vertex_id>& neighbors) {
    switch (kind) {
    case engine_kind::bicolormax: return bicolormax_step(st, neighbors);
    case engine_kind::first_fit: return first_fit_step(st, neighbors);
    case engine_kind::cbip: return cbip_step(st, neighbors);
    default: return random_fit_step(st, neighbors);
    }
}

// One finished game plus everything needed to interrogate it afterwards.
struct run_record {
    game_transcript transcript;
    online_bipartite_graph graph;
    partial_coloring coloring;
    std::vector<step_outcome> outcomes;

    int max_color_index() const { return transcript.max_color_index(); }
    int max_index_any() const { return transcript.max_index(); }
};

// Stateful driver for adaptive adversaries: present vertices one at a time,
// observe colors, take the finished record at the end.
class engine_session {
public:
    explicit engine_session(engine_kind kind, std::uint64_t seed = 0,
                            bicolormax_options opts = {})
        : kind_(kind) {
        state_.options = opts;
        state_.rng = splitmix64(seed);
        record_.transcript.engine = engine_name(kind);
        record_.transcript.seed = seed;
    }

    color_label present(std::vector<vertex_id> neighbors) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
        step_outcome out = engine_step(kind_, state_, neighbors);
        record_.transcript.steps.push_back(
            {neighbors, out.color, branch_name(out.trace.branch)});
        record_.outcomes.push_back(out);
        return out.color;
    }

    const online_bipartite_graph& graph() const { return state_.graph; }
    const partial_coloring& coloring() const { return state_.coloring; }
    game_transcript& transcript() { return record_.transcript; }

    run_record finish() && {
        record_.graph = std::move(state_.graph);
        record_.coloring = std::move(state_.coloring);
        return std::move(record_);
    }

private:
    engine_kind kind_;
    colorer_state state_;
    run_record record_;
};

inline run_record run_colorer(engine_kind kind,
                              const std::vector<std::vector<vertex_id>>& pres,
                              std::uint64_t seed = 0, bicolormax_options opts = {}) {
    engine_session session(kind, seed, opts);
    for (const auto& neighbors : pres) session.present(neighbors);
    return std::move(session).finish();
}

// Re-run the named engine over the recorded presentation and demand the same
// colors (and branches, when recorded).
inline run_record replay(const game_transcript& t) {
    const auto kind = engine_from_name(t.engine);
    if (!kind) throw parse_error("unknown engine '" + t.engine + "'");
    run_record fresh = run_colorer(*kind, t.presentation(), t.seed);
    fresh.transcript.adversary = t.adversary;
    fresh.transcript.k = t.k;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (fresh.transcript.steps[i].color != t.steps[i].color)
            throw replay_mismatch_error(
                "step " + std::to_string(i) + ": transcript says " +
                to_string(t.steps[i].color) + ", engine computed " +
                to_string(fresh.transcript.steps[i].color));
        if (!t.steps[i].branch.empty() &&
            fresh.transcript.steps[i].branch != t.steps[i].branch)
            throw replay_mismatch_error("step " + std::to_string(i) + ": branch mismatch");
    }
    return fresh;
}

}  // namespace bicolor
