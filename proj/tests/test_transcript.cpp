#include <catch2/catch.hpp>

#include "bicolor/engines.hpp"
#include "bicolor/forcing.hpp"
#include "bicolor/transcript.hpp"

using namespace bicolor;

TEST_CASE("transcripts round-trip through JSON lines", "[transcript][property]") {
    auto fr = adversary_force(5, engine_kind::bicolormax, 3);
    REQUIRE(from_jsonl(to_jsonl(fr.run.transcript)) == fr.run.transcript);

    auto crown = run_colorer(engine_kind::first_fit, crown_presentation(4), 9);
    crown.transcript.adversary = "crown";
    crown.transcript.k = 4;
    REQUIRE(from_jsonl(to_jsonl(crown.transcript)) == crown.transcript);
}

TEST_CASE("identically seeded games serialize byte for byte", "[transcript][property]") {
    const auto first = adversary_force(6, engine_kind::bicolormax, 5);
    const auto second = adversary_force(6, engine_kind::bicolormax, 5);
    REQUIRE(to_jsonl(first.run.transcript) == to_jsonl(second.run.transcript));
}

TEST_CASE("parser rejects malformed input", "[transcript]") {
    REQUIRE_THROWS_AS(from_jsonl(""), parse_error);
    REQUIRE_THROWS_AS(from_jsonl("{\"v\":0}\n"), parse_error);  // no meta line
    const std::string meta = "{\"engine\":\"firstfit\",\"adversary\":\"crown\",\"k\":1,\"seed\":0}\n";
    REQUIRE_THROWS_AS(from_jsonl(meta + "not json\n"), parse_error);
    REQUIRE_THROWS_AS(
        from_jsonl(meta + "{\"v\":0,\"neighbors\":[0],\"palette\":\"a\",\"index\":1,\"branch\":\"\"}\n"),
        parse_error);  // self-loop into the future
    REQUIRE_THROWS_AS(
        from_jsonl(meta + "{\"v\":0,\"neighbors\":[],\"palette\":\"q\",\"index\":1,\"branch\":\"\"}\n"),
        parse_error);  // unknown palette
    REQUIRE_THROWS_AS(
        from_jsonl(meta + "{\"v\":0,\"neighbors\":[],\"palette\":\"a\",\"index\":0,\"branch\":\"\"}\n"),
        parse_error);  // index must be positive
}

TEST_CASE("summary rows carry the run's shape", "[transcript]") {
    auto run = run_colorer(engine_kind::first_fit, crown_presentation(3), 7);
    run.transcript.adversary = "crown";
    run.transcript.k = 3;
    run.transcript.seed = 7;
    REQUIRE(summary_csv_header() == "engine,adversary,k,n,colors,max_index,seed");
    REQUIRE(summary_csv_row(run.transcript) == "firstfit,crown,3,6,3,3,7");
}

TEST_CASE("distinct counts ignore palette collisions across indexes", "[transcript]") {
    game_transcript t;
    t.engine = "bicolormax";
    t.steps.push_back({{}, col_a(1), "A-default"});
    t.steps.push_back({{0}, col_b(1), "B-branch"});
    t.steps.push_back({{}, col_a(1), "A-default"});
    REQUIRE(t.distinct_colors() == 2);
    REQUIRE(t.max_index() == 1);
    REQUIRE(t.max_color_index() == 1);
    t.steps.push_back({{}, col_c(4), "C-branch"});
    REQUIRE(t.max_index() == 4);
    REQUIRE(t.max_color_index() == 1);
}
