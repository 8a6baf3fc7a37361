#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zeronash/cli.hpp"
#include "zeronash/format.hpp"
#include "zeronash/game.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zeronash;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult result;
    result.exit_code = cli::run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

size_t count_lines(const std::string& text) {
    size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("games list prints the catalog") {
    const RunResult r = run_cli({"games", "list"});
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(count_lines(r.out) == 8);
    CHECK(contains(r.out, "G5: 2 players, 3x3 types, 4x4 actions"));
    CHECK(contains(r.out, "G6: 3 players, 2x2x2 types, 2x2x2 actions"));
}

TEST_CASE("games show prints the canonical serialization") {
    const RunResult r = run_cli({"games", "show", "G3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == serialize_game(registry_get("G3")));
}

TEST_CASE("games show reads a game file") {
    const auto path = temp_path("zeronash_cli_show.game");
    {
        std::ofstream file(path);
        file << serialize_game(registry_get("G4"));
    }
    const RunResult from_file =
        run_cli({"games", "show", "--game-file", path.string()});
    const RunResult from_builtin = run_cli({"games", "show", "G4"});
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_builtin.out);
    std::filesystem::remove(path);

    const RunResult both =
        run_cli({"games", "show", "G4", "--game-file", path.string()});
    CHECK(both.exit_code == 2);
    CHECK(contains(both.err, "not both"));

    const RunResult missing =
        run_cli({"games", "show", "--game-file", "/nonexistent/zzz.game"});
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.err, "error:"));
}

TEST_CASE("games check demands the classical flag") {
    const RunResult r = run_cli({"games", "check", "G5"});
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "requires --classical"));
}

TEST_CASE("games check decides feasibility with certificates") {
    const RunResult square = run_cli({"games", "check", "G5", "--classical"});
    CHECK(square.exit_code == 1);
    CHECK(contains(square.out, "zero-error coordination is infeasible"));
    CHECK(contains(square.out, "profiles enumerated: 4096"));
    CHECK(contains(square.out, "zero-error profiles: 0"));
    CHECK(contains(square.out, "first counterexample:"));
    CHECK(contains(square.out, "prior-independent"));

    const RunResult matching = run_cli({"games", "check", "G3", "--classical"});
    CHECK(matching.exit_code == 0);
    CHECK(contains(matching.out, "zero-error coordination is feasible"));
    CHECK(contains(matching.out, "witness: A: x1->0 x2->1 | B: y1->0 y2->1"));
}

TEST_CASE("games check --strong reports covers and gaps") {
    const RunResult gap = run_cli({"games", "check", "G7", "--classical", "--strong"});
    CHECK(gap.exit_code == 1);
    CHECK(contains(gap.out, "strong-zero-error coordination is infeasible"));
    CHECK(contains(gap.out,
                   "uncovered: allowed outcome 1,1 at (x1, y1) is reachable by no "
                   "zero-error profile"));

    const RunResult cover = run_cli({"games", "check", "G4", "--classical", "--strong"});
    CHECK(cover.exit_code == 0);
    CHECK(contains(cover.out, "strong-zero-error coordination is feasible"));
    CHECK(contains(cover.out, "mixture witness over 2 profiles:"));
    CHECK(contains(cover.out, "weight 1/2:"));
}

TEST_CASE("games check accepts only the uniform prior selector") {
    const RunResult ok =
        run_cli({"games", "check", "G5", "--classical", "--prior", "uniform"});
    CHECK(ok.exit_code == 1);
    const RunResult bad =
        run_cli({"games", "check", "G5", "--classical", "--prior", "skewed"});
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.err, "uniform"));
}

TEST_CASE("nash lists the equilibria of one cell's stage game") {
    const RunResult r = run_cli({"nash", "G5", "--type-profile", "x1,y1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "type profile (x1, y1): 8 pure equilibria"));
    CHECK(contains(r.out, "  1,1\n"));
    CHECK(contains(r.out, "  4,4\n"));

    const RunResult unknown = run_cli({"nash", "G5", "--type-profile", "x9,y1"});
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.err, "unknown type"));

    const RunResult arity = run_cli({"nash", "G5", "--type-profile", "x1"});
    CHECK(arity.exit_code == 2);
    CHECK(contains(arity.err, "comma-separated"));

    const RunResult missing = run_cli({"nash", "G5"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("quantum verify picks the natural strategy per game") {
    const RunResult square = run_cli({"quantum", "verify", "G5"});
    CHECK(square.exit_code == 0);
    CHECK(contains(square.out, "strategy magic-square"));
    CHECK(contains(square.out, "verification PASS"));

    const RunResult parity = run_cli({"quantum", "verify", "G6", "--strong"});
    CHECK(parity.exit_code == 0);
    CHECK(contains(parity.out, "strategy ghz"));
    CHECK(contains(parity.out, "min allowed probability: 0.125"));

    const RunResult hardy = run_cli({"quantum", "verify", "G7", "--strong"});
    CHECK(hardy.exit_code == 0);
    CHECK(contains(hardy.out, "strategy hardy"));
    CHECK(contains(hardy.out, "min allowed probability: 0.0125"));
}

TEST_CASE("quantum verify honors hardy options") {
    const RunResult diagonal =
        run_cli({"quantum", "verify", "G7", "--mode", "literal-x", "--gamma",
                 "0.7853981633974483", "--delta", "0.7853981633974483"});
    CHECK(diagonal.exit_code == 0);
    CHECK(contains(diagonal.out, "PASS"));

    const RunResult off = run_cli({"quantum", "verify", "G7", "--mode", "literal-x"});
    CHECK(off.exit_code == 1);
    CHECK(contains(off.out, "FAIL"));

    const RunResult bad_mode =
        run_cli({"quantum", "verify", "G7", "--mode", "sideways"});
    CHECK(bad_mode.exit_code == 2);
    CHECK(contains(bad_mode.err, "unknown hardy mode"));

    const RunResult mismatched =
        run_cli({"quantum", "verify", "G7", "--strategy", "ghz"});
    CHECK(mismatched.exit_code == 2);
    CHECK(contains(mismatched.err, "error:"));

    const RunResult loose_tol =
        run_cli({"quantum", "verify", "G7", "--mode", "literal-x", "--tol", "0.1"});
    CHECK(loose_tol.exit_code == 0);
}

TEST_CASE("quantum verify takes no game file") {
    const RunResult r =
        run_cli({"quantum", "verify", "--game-file", "/tmp/zzz.game"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("hardy scan summarizes the grid and writes CSV") {
    const auto path = temp_path("zeronash_cli_scan.csv");
    const RunResult r = run_cli({"hardy", "scan", "--gamma-steps", "3",
                                 "--delta-steps", "3", "--out", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "hardy scan: 3x3 interior grid"));
    CHECK(contains(r.out, "best witness: P(1,1 | x1,y1) = 0.0833333333333"));
    CHECK(contains(r.out, "points passing the strengthened check: 9/9"));

    std::ifstream file(path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header ==
          "gamma,delta,witness_probability,schmidt_min,max_leak,"
          "min_allowed_probability,pass");
    size_t rows = 0;
    for (std::string line; std::getline(file, line);) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 9);
    std::filesystem::remove(path);

    const RunResult missing = run_cli({"hardy", "scan", "--gamma-steps", "3"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("noise sweep maps the advantage region") {
    const auto path = temp_path("zeronash_cli_sweep.csv");
    const RunResult r = run_cli(
        {"noise", "sweep", "G5", "--grid", "5x5", "--out", path.string()});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "classical floor: 1/9"));
    CHECK(contains(r.out, "cells with quantum advantage:"));
    CHECK(contains(r.out, "max |numeric - closed form|:"));

    std::ifstream file(path);
    REQUIRE(file.good());
    size_t lines = 0;
    for (std::string line; std::getline(file, line);) {
        if (!line.empty()) ++lines;
    }
    CHECK(lines == 26);  // header + 25 cells
    std::filesystem::remove(path);

    CHECK(run_cli({"noise", "sweep", "G5", "--grid", "5"}).exit_code == 2);
    CHECK(run_cli({"noise", "sweep", "G5", "--grid", "1x5"}).exit_code == 2);
    CHECK(run_cli({"noise", "sweep", "G5"}).exit_code == 2);
}

TEST_CASE("noise floor prints the exact rational floor") {
    const RunResult square = run_cli({"noise", "floor", "G5"});
    CHECK(square.exit_code == 0);
    CHECK(contains(square.out, "classical floor 1/9"));
    CHECK(contains(square.out, "achieved by: A: x1->1 x2->1 x3->1"));

    const RunResult matching = run_cli({"noise", "floor", "G3"});
    CHECK(matching.exit_code == 0);
    CHECK(contains(matching.out, "classical floor 0"));
}

TEST_CASE("json reports parse and carry the same verdicts") {
    const RunResult check = run_cli({"--json", "games", "check", "G5", "--classical"});
    CHECK(check.exit_code == 1);
    const json check_doc = json::parse(check.out);
    CHECK(check_doc.at("feasible") == false);
    CHECK(check_doc.at("profiles_enumerated") == 4096);
    CHECK(check_doc.at("certificates").size() == 4096);

    const RunResult strong =
        run_cli({"--json", "games", "check", "G7", "--classical", "--strong"});
    CHECK(strong.exit_code == 1);
    const json strong_doc = json::parse(strong.out);
    CHECK(strong_doc.at("uncovered").size() == 1);
    CHECK(strong_doc.at("uncovered")[0].at("action_profile") ==
          json::array({"1", "1"}));
    CHECK(strong_doc.at("zero_error_profiles") == 5);

    const RunResult verify = run_cli({"--json", "quantum", "verify", "G5"});
    CHECK(verify.exit_code == 0);
    const json verify_doc = json::parse(verify.out);
    CHECK(verify_doc.at("pass") == true);
    CHECK(verify_doc.at("max_leak").get<double>() <= 1e-12);
    CHECK(verify_doc.at("leaks").size() == 9);

    const RunResult floor = run_cli({"--json", "noise", "floor", "G5"});
    CHECK(floor.exit_code == 0);
    const json floor_doc = json::parse(floor.out);
    CHECK(floor_doc.at("min_error") == "1/9");

    const RunResult list = run_cli({"--json", "games", "list"});
    CHECK(json::parse(list.out).at("games").size() == 8);

    const RunResult nash = run_cli({"--json", "nash", "G7", "--type-profile", "x2,y2"});
    CHECK(nash.exit_code == 0);
    CHECK(json::parse(nash.out).at("equilibria").size() == 3);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> invocations = {
        {"games", "check", "G7", "--classical", "--strong"},
        {"quantum", "verify", "G5", "--strong"},
        {"noise", "sweep", "G5", "--grid", "3x3"},
        {"--json", "games", "check", "G6", "--classical"},
        {"hardy", "scan", "--gamma-steps", "2", "--delta-steps", "2"},
    };
    for (const auto& args : invocations) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}

TEST_CASE("unknown names and subcommands exit with usage errors") {
    const RunResult unknown_game = run_cli({"games", "show", "G9"});
    CHECK(unknown_game.exit_code == 2);
    CHECK(contains(unknown_game.err, "error:"));

    CHECK(run_cli({"bogus"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"games"}).exit_code == 2);

    const RunResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "zero-error coordination analyzer"));
}
