#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicolor/analysis.hpp"
#include "bicolor/engines.hpp"
#include "bicolor/forcing.hpp"
#include "bicolor/gen.hpp"
#include "bicolor/solver.hpp"
#include "bicolor/suite.hpp"
#include "bicolor/transcript.hpp"

namespace fs = std::filesystem;
using namespace bicolor;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    out << text;
}

void append_summary(const fs::path& dir, const game_transcript& t) {
    const fs::path path = dir / "summary.csv";
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw error("cannot write " + path.string());
    if (fresh) out << summary_csv_header() << '\n';
    out << summary_csv_row(t) << '\n';
}

// random bipartite instance of size k; P_9-filtered while the exhaustive
// check is feasible
std::vector<std::vector<vertex_id>> random_instance(std::uint64_t seed, int k) {
    if (k > 14) return random_bipartite_presentation(seed, k, k);
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto pres = random_bipartite_presentation(seed * 1000003ULL + attempt, k, k);
        if (is_pk_free(presentation_to_adjacency(pres), 9)) return pres;
    }
}

struct run_options {
    std::string engine = "bicolormax";
    std::string adversary = "xk";
    int k = 4;
    std::uint64_t seed = 0;
    int reps = 1;
    std::string out_dir = ".";
    std::string in_file;
};

int cmd_run(const run_options& opt) {
    const auto kind = engine_from_name(opt.engine);
    if (!kind) {
        std::cerr << "unknown engine '" << opt.engine << "'\n";
        return exit_usage;
    }
    const bool known_adversary = opt.adversary == "xk" || opt.adversary == "crown" ||
                                 opt.adversary == "forest" || opt.adversary == "replay" ||
                                 opt.adversary == "random";
    if (!known_adversary) {
        std::cerr << "unknown adversary '" << opt.adversary << "'\n";
        return exit_usage;
    }
    if (opt.adversary == "replay" && opt.in_file.empty()) {
        std::cerr << "replay needs --in <transcript>\n";
        return exit_usage;
    }
    fs::create_directories(opt.out_dir);
    for (int rep = 0; rep < opt.reps; ++rep) {
        const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(rep);
        run_record run;
        if (opt.adversary == "xk") {
            run = adversary_force(opt.k, *kind, seed).run;
        } else if (opt.adversary == "forest") {
            run = forest_adversary(opt.k, *kind, seed);
        } else if (opt.adversary == "crown") {
            run = run_colorer(*kind, crown_presentation(opt.k), seed);
        } else if (opt.adversary == "random") {
            run = run_colorer(*kind, random_instance(seed, opt.k), seed);
        } else {
            const game_transcript source = from_jsonl(read_file(opt.in_file));
            run = run_colorer(*kind, source.presentation(), seed);
        }
        run.transcript.adversary = opt.adversary;
        run.transcript.k = opt.k;
        run.transcript.seed = seed;
        std::ostringstream name;
        name << "run_" << opt.engine << "_" << opt.adversary << "_k" << opt.k << "_s" << seed
             << ".jsonl";
        const fs::path out_path = fs::path(opt.out_dir) / name.str();
        write_file(out_path, to_jsonl(run.transcript));
        append_summary(opt.out_dir, run.transcript);
        std::cout << summary_csv_row(run.transcript) << "  -> " << out_path.string() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::vector<std::string>& paths) {
    bool all_ok = true;
    for (const auto& path : paths) {
        std::cout << path << ":\n";
        game_transcript t;
        run_record run;
        try {
            t = from_jsonl(read_file(path));
            run = replay(t);
        } catch (const error& e) {
            std::cout << "  replay            FAIL (" << e.what() << ")\n";
            all_ok = false;
            continue;
        }
        std::cout << "  replay            ok\n";

        const bool proper = check_proper(run.graph, run.coloring);
        std::cout << "  proper coloring   " << (proper ? "ok" : "FAIL") << '\n';
        all_ok = all_ok && proper;

        const bool bip = run.graph.check_bipartite();
        std::cout << "  bipartite         " << (bip ? "ok" : "FAIL") << '\n';
        all_ok = all_ok && bip;

        // P_9-freeness: exhaustively when small, and always for the xk
        // generator, whose output is P_6-free by construction
        std::optional<bool> p9;
        if (run.graph.size() <= 14 || t.adversary == "xk") p9 = is_pk_free(run.graph, 9);
        if (p9.has_value()) {
            const bool claimed_free = t.adversary == "xk" || t.adversary == "random";
            std::cout << "  P9-free           " << (*p9 ? "yes" : "no");
            if (claimed_free && !*p9) {
                std::cout << " (FAIL: generator promised P9-freeness)";
                all_ok = false;
            }
            std::cout << '\n';
        } else {
            std::cout << "  P9-free           skipped (n > 14)\n";
        }

        if (t.engine == engine_name(engine_kind::bicolormax)) {
            const theorem_report rep = theorem_consistency(run);
            const bool witness_required = p9.value_or(false);
            const bool ok = rep.bound_3k && rep.arithmetic_ok &&
                            (rep.witness_ok || !witness_required);
            std::cout << "  theorem chain     " << (ok ? "ok" : "FAIL") << " (k=" << rep.k
                      << ", colors=" << rep.distinct;
            if (!rep.detail.empty()) std::cout << ", " << rep.detail;
            std::cout << ")\n";
            all_ok = all_ok && ok;
        } else {
            std::cout << "  theorem chain     skipped (engine " << t.engine << ")\n";
        }
    }
    return all_ok ? exit_ok : exit_failure;
}

int cmd_xk(int k, const std::string& out_file) {
    const rooted_bipartite_graph x = build_xk(k);
    std::ostringstream out;
    out << "root " << x.root << '\n';
    for (vertex_id v = 0; v < x.size(); ++v)
        out << "side " << v << ' ' << (x.on_root_side[v] ? 1 : 0) << '\n';
    for (vertex_id v = 0; v < x.size(); ++v)
        for (vertex_id w : x.adj[v])
            if (v < w) out << v << ' ' << w << '\n';
    if (out_file.empty())
        std::cout << out.str();
    else
        write_file(out_file, out.str());
    return exit_ok;
}

int cmd_suite(const std::string& name) {
    std::vector<suite::criterion_result> results;
    try {
        results = suite::run_suite(name);
    } catch (const suite::unknown_suite_error& e) {
        std::cerr << e.what() << "; known suites:";
        for (const auto& [n, ids] : suite::suite_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return exit_usage;
    }
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.title << " — "
                  << r.detail << '\n';
        all_ok = all_ok && r.pass;
    }
    return all_ok ? exit_ok : exit_failure;
}

small_graph read_graph_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "root") continue;
        if (head == "side") {
            int v, bit;
            ls >> v >> bit;
            max_id = std::max(max_id, v);
            continue;
        }
        int u = std::stoi(head), v;
        if (!(ls >> v)) throw parse_error("bad edge line: " + line);
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    if (max_id < 0) throw parse_error("no vertices found in " + path);
    if (max_id >= 15) throw solver_limit_error("graph too large for the solver");
    small_graph g;
    g.n = max_id + 1;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int cmd_chi_star(const std::string& graph_file, int xk_k, int budget, int limit) {
    small_graph g;
    if (xk_k > 0)
        g = to_small_graph(build_xk(xk_k));
    else
        g = read_graph_file(graph_file);
    const int b = budget > 0 ? budget : g.n;
    const int value = online_chromatic_number(g, b, limit);
    std::cout << value << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online coloring of P9-free bipartite graphs: engines, adversaries, verification"};
    app.require_subcommand(1);

    run_options ropt;
    auto* run_cmd = app.add_subcommand("run", "play one or more games and record transcripts");
    run_cmd->add_option("--engine", ropt.engine, "bicolormax | firstfit | cbip");
    run_cmd->add_option("--adversary", ropt.adversary, "xk | crown | forest | random | replay");
    run_cmd->add_option("--k", ropt.k, "size parameter (k, pairs, or n)");
    run_cmd->add_option("--seed", ropt.seed, "base seed; rep r uses seed + r");
    run_cmd->add_option("--reps", ropt.reps, "repetitions");
    run_cmd->add_option("--out", ropt.out_dir, "output directory");
    run_cmd->add_option("--in", ropt.in_file, "transcript supplying the presentation (replay)");

    std::vector<std::string> verify_paths;
    auto* verify_cmd = app.add_subcommand("verify", "replay transcripts and check them");
    verify_cmd->add_option("transcripts", verify_paths, "transcript files")->required();

    int xk_k = 3;
    std::string xk_out;
    auto* xk_cmd = app.add_subcommand("xk", "emit the forcing structure X_k as an edge list");
    xk_cmd->add_option("k", xk_k, "family index")->required();
    xk_cmd->add_option("--out", xk_out, "output file (default stdout)");

    std::string suite_name;
    auto* suite_cmd = app.add_subcommand("suite", "run a named acceptance suite");
    suite_cmd->add_option("name", suite_name, "suite name (see --help)")->required();

    std::string chi_graph;
    int chi_xk = 0, chi_budget = 0, chi_limit = 7;
    auto* chi_cmd = app.add_subcommand("chi-star", "exact on-line chromatic number of a tiny graph");
    chi_cmd->add_option("--graph", chi_graph, "edge-list file (xk format accepted)");
    chi_cmd->add_option("--xk", chi_xk, "solve for X_k instead of a file");
    chi_cmd->add_option("--budget", chi_budget, "color budget (default: vertex count)");
    chi_cmd->add_option("--limit", chi_limit, "solver size limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(ropt);
        if (verify_cmd->parsed()) return cmd_verify(verify_paths);
        if (xk_cmd->parsed()) return cmd_xk(xk_k, xk_out);
        if (suite_cmd->parsed()) return cmd_suite(suite_name);
        if (chi_cmd->parsed()) {
            if (chi_xk <= 0 && chi_graph.empty()) {
                std::cerr << "chi-star needs --graph or --xk\n";
                return exit_usage;
            }
            return cmd_chi_star(chi_graph, chi_xk, chi_budget, chi_limit);
        }
    } catch (const solver_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
