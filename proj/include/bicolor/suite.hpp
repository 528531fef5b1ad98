#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bicolor/analysis.hpp"
#include "bicolor/engines.hpp"
#include "bicolor/forcing.hpp"
#include "bicolor/gen.hpp"
#include "bicolor/solver.hpp"

namespace bicolor::suite {

struct criterion_result {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
};

struct unknown_suite_error : error {
    using error::error;
};

namespace detail {

class failure_log {
public:
    void add(const std::string& what) {
        if (items_ < 5) text_ += (items_ ? "; " : "") + what;
        ++items_;
    }

    bool ok() const { return items_ == 0; }

    std::string render(const std::string& stats) const {
        if (ok()) return stats;
        std::ostringstream out;
        out << stats << " | " << items_ << " failure(s): " << text_;
        if (items_ > 5) out << "; ...";
        return out.str();
    }

private:
    std::size_t items_ = 0;
    std::string text_;
};

// exhaustive, unpruned enumeration of injective vertex sequences; the
// independent oracle for find_induced_path
inline bool induced_path_exists_bruteforce(const std::vector<std::vector<vertex_id>>& adj,
                                           int length,
                                           std::optional<vertex_id> endpoint = std::nullopt) {
    const std::size_t n = adj.size();
    auto adjacent = [&](vertex_id u, vertex_id w) {
        return std::binary_search(adj[u].begin(), adj[u].end(), w);
    };
    std::vector<vertex_id> seq;
    std::vector<char> used(n, 0);
    std::function<bool()> rec = [&]() -> bool {
        if (seq.size() == static_cast<std::size_t>(length)) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j) {
                    const bool want = (j == i + 1);
                    if (adjacent(seq[i], seq[j]) != want) return false;
                }
            return true;
        }
        for (vertex_id v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (seq.empty() && endpoint && v != *endpoint) continue;
            used[v] = 1;
            seq.push_back(v);
            if (rec()) return true;
            seq.pop_back();
            used[v] = 0;
        }
        return false;
    };
    if (length < 1 || static_cast<std::size_t>(length) > n) return false;
    return rec();
}

inline int log2_floor(std::size_t n) {
    return n ? std::bit_width(n) - 1 : 0;
}

}  // namespace detail

// A1: on every bicolormax run of the suite, at most 3k distinct colors and a
// verified induced X_{floor(sqrt(k/2))} rooted on the a_k vertex's side.
inline criterion_result a1_theorem_chain() {
    detail::failure_log log;
    std::size_t runs = 0;
    int max_k = 0;
    auto check = [&](const run_record& run, const std::string& tag) {
        ++runs;
        const theorem_report rep = theorem_consistency(run);
        max_k = std::max(max_k, rep.k);
        if (!rep.pass()) {
            std::ostringstream o;
            o << tag << ": k=" << rep.k << " colors=" << rep.distinct
              << (rep.bound_3k ? "" : " 3k-bound broken")
              << (rep.witness_ok ? "" : " witness failed")
              << (rep.arithmetic_ok ? "" : " arithmetic broken");
            if (!rep.detail.empty()) o << " (" << rep.detail << ")";
            log.add(o.str());
        }
    };
    for (int k = 1; k <= 8; ++k)
        check(adversary_force(k, engine_kind::bicolormax).run, "xk k=" + std::to_string(k));
    for (std::uint64_t seed = 1; seed <= 500; ++seed)
        check(run_colorer(engine_kind::bicolormax, random_p9free_presentation(seed)),
              "random seed=" + std::to_string(seed));
    for (int i = 0; i < 100; ++i)
        check(forest_adversary(1 + i % 6, engine_kind::bicolormax, i),
              "forest i=" + std::to_string(i));
    for (int i = 0; i < 100; ++i)
        check(run_colorer(engine_kind::bicolormax, crown_presentation(1 + i % 20)),
              "crown i=" + std::to_string(i));
    std::ostringstream stats;
    stats << runs << " runs, max color index " << max_k;
    return {"A1", "theorem chain (3k bound + forced-copy witness)", log.ok(),
            log.render(stats.str())};
}

// A2: every engine stays proper on every placement; at least 1e5 placements.
inline criterion_result a2_properness() {
    detail::failure_log log;
    std::size_t placements = 0;
    const engine_kind engines[] = {engine_kind::bicolormax, engine_kind::first_fit,
                                   engine_kind::cbip, engine_kind::random_fit};
    for (std::uint64_t seed = 1; seed <= 800; ++seed) {
        const auto pres = random_bipartite_presentation(seed, 20, 60);
        for (engine_kind e : engines) {
            engine_session s(e, seed);
            for (const auto& nb : pres) {
                const color_label c = s.present(nb);
                ++placements;
                for (vertex_id u : nb) {
                    if (s.coloring().at(u) == c) {
                        log.add(engine_name(e) + " seed " + std::to_string(seed) +
                                ": monochromatic edge");
                        break;
                    }
                }
            }
        }
    }
    if (placements < 100000)
        log.add("only " + std::to_string(placements) + " placements");
    return {"A2", "properness on >= 1e5 placements", log.ok(),
            log.render(std::to_string(placements) + " placements over 4 engines")};
}

// A3: adversary_force(k) beats every engine: >= k colors on 2^{k-1} vertices,
// bipartite, induced inside X_k, P_6-free at desk scale.
inline criterion_result a3_forcing_lower_bound() {
    detail::failure_log log;
    const engine_kind engines[] = {engine_kind::bicolormax, engine_kind::first_fit,
                                   engine_kind::cbip, engine_kind::random_fit};
    for (int k = 1; k <= 8; ++k) {
        for (engine_kind e : engines) {
            const std::string tag = "k=" + std::to_string(k) + " vs " + engine_name(e);
            forcing_result fr;
            try {
                fr = adversary_force(k, e, 1000 + k);
            } catch (const error& err) {
                log.add(tag + ": " + err.what());
                continue;
            }
            if (fr.run.transcript.distinct_colors() < static_cast<std::size_t>(k))
                log.add(tag + ": fewer than k colors");
            if (fr.run.graph.size() != (std::size_t{1} << (k - 1)))
                log.add(tag + ": wrong vertex count");
            if (!fr.run.graph.check_bipartite()) log.add(tag + ": not bipartite");
            if (!verify_induced_embedding(fr.run.graph, fr.embed, fr.xk))
                log.add(tag + ": embedding into X_k broken");
            if (k <= 5 && !is_pk_free(fr.run.graph, 6)) log.add(tag + ": not P_6-free");
        }
    }
    return {"A3", "forcing lower bound vs all engines", log.ok(),
            log.render("k=1..8 against 4 engines")};
}

// A4: First-Fit loses exactly p colors on the crown, CBIP stays within
// 2 floor(log2 n) + 1 everywhere, the forest strategy forces k colors.
inline criterion_result a4_baseline_separations() {
    detail::failure_log log;
    for (int p = 1; p <= 20; ++p) {
        const auto run = run_colorer(engine_kind::first_fit, crown_presentation(p));
        if (run.transcript.distinct_colors() != static_cast<std::size_t>(p))
            log.add("firstfit crown p=" + std::to_string(p) + ": " +
                    std::to_string(run.transcript.distinct_colors()) + " colors");
    }
    auto cbip_bound = [&](const game_transcript& t, const std::string& tag) {
        const std::size_t n = t.steps.size();
        if (n == 0) return;
        const std::size_t bound = 2 * detail::log2_floor(n) + 1;
        if (t.distinct_colors() > bound)
            log.add("cbip " + tag + ": " + std::to_string(t.distinct_colors()) + " > " +
                    std::to_string(bound));
    };
    for (int p = 1; p <= 20; ++p)
        cbip_bound(run_colorer(engine_kind::cbip, crown_presentation(p)).transcript,
                   "crown p=" + std::to_string(p));
    for (int k = 1; k <= 8; ++k)
        cbip_bound(adversary_force(k, engine_kind::cbip).run.transcript,
                   "xk k=" + std::to_string(k));
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        cbip_bound(
            run_colorer(engine_kind::cbip, random_bipartite_presentation(seed, 2, 60)).transcript,
            "random seed=" + std::to_string(seed));
    const engine_kind engines[] = {engine_kind::bicolormax, engine_kind::first_fit,
                                   engine_kind::cbip};
    for (int k = 1; k <= 6; ++k) {
        for (engine_kind e : engines) {
            const std::string tag = "forest k=" + std::to_string(k) + " vs " + engine_name(e);
            const run_record run = forest_adversary(k, e);
            cbip_bound(run.transcript, tag);
            if (run.transcript.distinct_colors() < static_cast<std::size_t>(k))
                log.add(tag + ": fewer than k colors");
            if (run.graph.size() != (std::size_t{1} << (k - 1)))
                log.add(tag + ": wrong vertex count");
            if (run.graph.edge_count() != run.graph.size() - run.graph.component_count())
                log.add(tag + ": presented graph has a cycle");
        }
    }
    return {"A4", "baseline separations (crown, CBIP bound, forest)", log.ok(),
            log.render("crowns p<=20, forests k<=6, 200 random instances")};
}

// A5: the family itself: sizes, root universality, P_6-freeness, and the
// binary-sequence embedding claim at desk scale.
inline criterion_result a5_structure_family() {
    detail::failure_log log;
    for (int k = 2; k <= 12; ++k) {
        const rooted_bipartite_graph x = build_xk(k);
        const std::size_t expect = 3 * (std::size_t{1} << (k - 2)) - 1;
        if (x.size() != expect || xk_size(k) != expect)
            log.add("size of X_" + std::to_string(k));
        if (x.adj[x.root] != x.non_root_side())
            log.add("root not universal in X_" + std::to_string(k));
        if (x.non_root_side().size() != xk_size(k - 1))
            log.add("non-root side of X_" + std::to_string(k));
    }
    for (int k = 1; k <= 5; ++k)
        if (!is_pk_free(build_xk(k), 6)) log.add("X_" + std::to_string(k) + " has a P_6");
    std::size_t plans = 0;
    for (int k = 2; k <= 6; ++k) {
        const rooted_bipartite_graph x = build_xk(k);
        for (std::uint32_t bits = 0; bits < (1u << (k - 1)); ++bits) {
            std::vector<std::uint8_t> alpha(k - 1);
            for (int i = 0; i < k - 1; ++i) alpha[i] = (bits >> i) & 1u;
            ++plans;
            if (!verify_embedding(x, embed_copies(k, alpha)))
                log.add("embedding k=" + std::to_string(k) + " alpha=" + std::to_string(bits));
        }
    }
    return {"A5", "X_k family structure and embeddings", log.ok(),
            log.render("k<=12 sizes, k<=5 P_6-freeness, " + std::to_string(plans) + " plans")};
}

// A6: c_1 never appears, the threshold predicate matches the floating-point
// reading away from exact squares, children sit in distinct components.
inline criterion_result a6_engine_fine_structure() {
    detail::failure_log log;
    std::size_t children_checked = 0;
    auto scan_run = [&](const run_record& run, const std::string& tag) {
        for (const auto& s : run.transcript.steps)
            if (s.color == col_c(1)) log.add(tag + ": c_1 assigned");
        for (vertex_id v = 0; v < run.graph.size(); ++v) {
            const int k = color_index_of(run, v);
            if (k < 2) continue;
            try {
                const auto [c1, c2] = children_of(run, v);
                ++children_checked;
                if (run.coloring.at(c1) != col_a(k - 1) ||
                    run.coloring.at(c2) != col_a(k - 1))
                    log.add(tag + ": children of " + std::to_string(v) + " miscolored");
                if (!run.graph.opposite_side(c1, c2))
                    log.add(tag + ": children of " + std::to_string(v) + " share a side");
            } catch (const error& e) {
                log.add(tag + ": children of " + std::to_string(v) + ": " + e.what());
            }
        }
    };
    for (int k = 1; k <= 8; ++k)
        scan_run(adversary_force(k, engine_kind::bicolormax).run, "xk k=" + std::to_string(k));
    for (std::uint64_t seed = 601; seed <= 700; ++seed)
        scan_run(run_colorer(engine_kind::bicolormax, random_p9free_presentation(seed)),
                 "random seed=" + std::to_string(seed));
    for (int p = 1; p <= 20; ++p)
        scan_run(run_colorer(engine_kind::bicolormax, crown_presentation(p)),
                 "crown p=" + std::to_string(p));
    for (int k = 1; k <= 6; ++k)
        scan_run(forest_adversary(k, engine_kind::bicolormax), "forest k=" + std::to_string(k));

    std::size_t mismatches = 0;
    for (int m = 1; m <= 10000; ++m) {
        const double root = std::sqrt(2.0 * m);
        for (int j = 1; j <= m + 2; ++j) {
            const bool exact = threshold_holds(m, j);
            const bool approx = static_cast<double>(j) >= static_cast<double>(m) - root + 2.0;
            if (exact != approx) {
                ++mismatches;
                const long long d = static_cast<long long>(m) + 2 - j;
                if (d * d != 2LL * m)
                    log.add("threshold m=" + std::to_string(m) + " j=" + std::to_string(j) +
                            " differs away from a square boundary");
            }
        }
    }
    std::ostringstream stats;
    stats << children_checked << " children pairs, " << mismatches
          << " float mismatches (all at square boundaries)";
    return {"A6", "engine fine structure (c_1, threshold, children)", log.ok(),
            log.render(stats.str())};
}

// A7: the exact solver against pinned tiny instances plus the induced-path
// oracle equivalence.
inline criterion_result a7_exact_solver() {
    detail::failure_log log;
    {
        small_graph k1;
        k1.n = 1;
        if (online_chromatic_number(k1, 2) != 1) log.add("chi*(K_1) != 1");
        small_graph k2;
        k2.n = 2;
        k2.add_edge(0, 1);
        if (online_chromatic_number(k2, 3) != 2) log.add("chi*(K_2) != 2");
    }
    {
        const rooted_bipartite_graph x3 = build_xk(3);
        const int solver_value = online_chromatic_number(to_small_graph(x3), 5);
        if (solver_value < 3) log.add("chi*(X_3) < 3");
        // the best engine's adversarial worst case over all presentation
        // orders of X_3 must meet the solver value exactly
        int best_engine_worst = 1 << 20;
        const engine_kind engines[] = {engine_kind::bicolormax, engine_kind::first_fit,
                                       engine_kind::cbip};
        std::vector<int> order(x3.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        for (engine_kind e : engines) {
            int worst = 0;
            std::vector<int> perm = order;
            do {
                std::vector<int> pos(perm.size());
                for (std::size_t t = 0; t < perm.size(); ++t) pos[perm[t]] = static_cast<int>(t);
                std::vector<std::vector<vertex_id>> pres(perm.size());
                for (std::size_t t = 0; t < perm.size(); ++t) {
                    for (vertex_id w : x3.adj[perm[t]])
                        if (pos[w] < static_cast<int>(t))
                            pres[t].push_back(static_cast<vertex_id>(pos[w]));
                    std::sort(pres[t].begin(), pres[t].end());
                }
                worst = std::max(worst,
                                 static_cast<int>(run_colorer(e, pres).transcript.distinct_colors()));
            } while (std::next_permutation(perm.begin(), perm.end()));
            best_engine_worst = std::min(best_engine_worst, worst);
        }
        if (solver_value != best_engine_worst)
            log.add("chi*(X_3)=" + std::to_string(solver_value) + " but best engine worst case is " +
                    std::to_string(best_engine_worst));
        for (engine_kind e : {engine_kind::bicolormax, engine_kind::first_fit, engine_kind::cbip})
            if (adversary_force(3, e).run.transcript.distinct_colors() < 3)
                log.add("adversary_force(3) lost against " + engine_name(e));
    }
    std::size_t comparisons = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto adj = random_graph_adjacency(seed, 1, 7);
        const int n = static_cast<int>(adj.size());
        for (int len = 1; len <= n; ++len) {
            ++comparisons;
            const bool fast = find_induced_path(adj, len).has_value();
            const bool slow = detail::induced_path_exists_bruteforce(adj, len);
            if (fast != slow)
                log.add("oracle mismatch seed=" + std::to_string(seed) +
                        " len=" + std::to_string(len));
            const bool fast0 = find_induced_path(adj, len, vertex_id{0}).has_value();
            const bool slow0 = detail::induced_path_exists_bruteforce(adj, len, vertex_id{0});
            if (fast0 != slow0)
                log.add("endpoint oracle mismatch seed=" + std::to_string(seed) +
                        " len=" + std::to_string(len));
        }
    }
    return {"A7", "exact solver and induced-path oracle", log.ok(),
            log.render(std::to_string(comparisons) + " oracle comparisons, chi* pinned on K_1/K_2/X_3")};
}

inline std::vector<criterion_result> all_criteria() {
    return {a1_theorem_chain(),      a2_properness(),     a3_forcing_lower_bound(),
            a4_baseline_separations(), a5_structure_family(), a6_engine_fine_structure(),
            a7_exact_solver()};
}

inline const std::map<std::string, std::vector<std::string>>& suite_names() {
    static const std::map<std::string, std::vector<std::string>> names = {
        {"theorem", {"A1"}},          {"properness", {"A2"}},
        {"forcing", {"A3", "A6"}},    {"baselines", {"A4"}},
        {"family", {"A5"}},           {"engine", {"A6"}},
        {"solver", {"A7"}},           {"all", {"A1", "A2", "A3", "A4", "A5", "A6", "A7"}},
    };
    return names;
}

inline std::vector<criterion_result> run_suite(const std::string& name) {
    const auto& names = suite_names();
    const auto it = names.find(name);
    if (it == names.end()) throw unknown_suite_error("unknown suite '" + name + "'");
    std::vector<criterion_result> out;
    for (const std::string& id : it->second) {
        if (id == "A1") out.push_back(a1_theorem_chain());
        else if (id == "A2") out.push_back(a2_properness());
        else if (id == "A3") out.push_back(a3_forcing_lower_bound());
        else if (id == "A4") out.push_back(a4_baseline_separations());
        else if (id == "A5") out.push_back(a5_structure_family());
        else if (id == "A6") out.push_back(a6_engine_fine_structure());
        else out.push_back(a7_exact_solver());
    }
    return out;
}

}  // namespace bicolor::suite
