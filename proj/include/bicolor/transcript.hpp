#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicolor/types.hpp"

namespace bicolor {

struct transcript_step {
    std::vector<vertex_id> neighbors;  // ascending, all smaller than the step position
    color_label color;
    std::string branch;  // bicolormax if-cascade tag, empty for baselines

    bool operator==(const transcript_step&) const = default;
};

// Full record of one adversary-vs-colorer game.
struct game_transcript {
    std::string engine;
    std::string adversary;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<transcript_step> steps;

    std::size_t distinct_colors() const {
        std::set<color_label> used;
        for (const auto& s : steps) used.insert(s.color);
        return used.size();
    }

    // largest index over all palettes, 0 when empty
    int max_index() const {
        int m = 0;
        for (const auto& s : steps) m = std::max(m, s.color.index);
        return m;
    }

    // largest index over palettes a/b only
    int max_color_index() const {
        int m = 0;
        for (const auto& s : steps)
            if (s.color.pal != palette::c) m = std::max(m, s.color.index);
        return m;
    }

    std::vector<std::vector<vertex_id>> presentation() const {
        std::vector<std::vector<vertex_id>> pres;
        pres.reserve(steps.size());
        for (const auto& s : steps) pres.push_back(s.neighbors);
        return pres;
    }

    bool operator==(const game_transcript&) const = default;
};

// JSON-lines: one meta object, then one step object per line with fields
// v, neighbors, palette, index, branch.
inline std::string to_jsonl(const game_transcript& t) {
    std::ostringstream out;
    nlohmann::json meta{
        {"engine", t.engine}, {"adversary", t.adversary}, {"k", t.k}, {"seed", t.seed}};
    out << meta.dump() << '\n';
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        nlohmann::json line{{"v", i},
                            {"neighbors", s.neighbors},
                            {"palette", std::string(1, palette_letter(s.color.pal))},
                            {"index", s.color.index},
                            {"branch", s.branch}};
        out << line.dump() << '\n';
    }
    return out.str();
}

inline game_transcript from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    game_transcript t;
    bool meta_seen = false;
    std::size_t step_no = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("bad transcript line: ") + e.what());
        }
        if (!meta_seen) {
            if (!j.contains("engine"))
                throw parse_error("transcript must start with a meta line");
            t.engine = j.at("engine").get<std::string>();
            t.adversary = j.value("adversary", std::string{});
            t.k = j.value("k", 0);
            t.seed = j.value("seed", std::uint64_t{0});
            meta_seen = true;
            continue;
        }
        transcript_step s;
        try {
            if (j.at("v").get<std::size_t>() != step_no)
                throw parse_error("step ids must be dense and in order");
            s.neighbors = j.at("neighbors").get<std::vector<vertex_id>>();
            const auto pal_str = j.at("palette").get<std::string>();
            const auto pal = pal_str.size() == 1 ? palette_from_letter(pal_str[0]) : std::nullopt;
            if (!pal) throw parse_error("unknown palette '" + pal_str + "'");
            s.color.pal = *pal;
            s.color.index = j.at("index").get<int>();
            s.branch = j.value("branch", std::string{});
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("bad step line: ") + e.what());
        }
        if (s.color.index < 1) throw parse_error("color index must be positive");
        for (vertex_id u : s.neighbors)
            if (u >= step_no)
                throw parse_error("step " + std::to_string(step_no) +
                                  " references future vertex " + std::to_string(u));
        t.steps.push_back(std::move(s));
        ++step_no;
    }
    if (!meta_seen) throw parse_error("empty transcript");
    return t;
}

inline std::string summary_csv_header() {
    return "engine,adversary,k,n,colors,max_index,seed";
}

inline std::string summary_csv_row(const game_transcript& t) {
    std::ostringstream out;
    out << t.engine << ',' << t.adversary << ',' << t.k << ',' << t.steps.size() << ','
        << t.distinct_colors() << ',' << t.max_index() << ',' << t.seed;
    return out.str();
}

}  // namespace bicolor
