#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zeronash/format.hpp"
#include "zeronash/game.hpp"

using namespace zeronash;

namespace {

std::set<ActionProfile> pairs(std::initializer_list<int> codes) {
    std::set<ActionProfile> out;
    for (int code : codes) out.insert({code / 10 - 1, code % 10 - 1});
    return out;
}

// Independent equilibrium check: a profile is stable when every player's
// payoff equals their best-response payoff against the others.
std::set<ActionProfile> oracle_nash(const StageGame& game) {
    std::set<ActionProfile> out;
    for (const ActionProfile& ap : game.action_profiles()) {
        bool stable = true;
        for (int player = 0; player < game.player_count(); ++player) {
            double best = -1.0;
            ActionProfile probe = ap;
            const int count = static_cast<int>(game.action_labels[player].size());
            for (int a = 0; a < count; ++a) {
                probe[player] = a;
                best = std::max(best, game.payoffs.at(probe)[player]);
            }
            if (game.payoffs.at(ap)[player] < best) {
                stable = false;
                break;
            }
        }
        if (stable) out.insert(ap);
    }
    return out;
}

}  // namespace

TEST_CASE("registry lists eight games") {
    const auto names = registry_names();
    REQUIRE(names.size() == 8);
    CHECK(names.front() == "G1");
    CHECK(names.back() == "G7_appendix");
    for (const std::string& name : names) {
        const BayesianGame g = registry_get(name);
        CHECK(g.name == name);
        CHECK_NOTHROW(g.validate());
        Rational total(0);
        for (const auto& [tp, p] : g.prior) total += p;
        CHECK(total == Rational(1));
    }
    CHECK_THROWS_WITH_AS(registry_get("G9"), doctest::Contains("available"),
                         std::invalid_argument);
}

TEST_CASE("single-type games carry both equilibria of their stage game") {
    for (const std::string& name : {"G1", "G2"}) {
        const BayesianGame g = registry_get(name);
        CHECK(g.player_count() == 2);
        CHECK(g.type_labels[0].size() == 1);
        const std::set<ActionProfile> expected = {{0, 0}, {1, 1}};
        CHECK(g.allowed.at({0, 0}) == expected);
    }
}

TEST_CASE("type-matching game pairs each profile with its complement") {
    const BayesianGame g = registry_get("G3");
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const std::set<ActionProfile> expected = {{x, y}, {1 - x, 1 - y}};
            CHECK(g.allowed.at({x, y}) == expected);
        }
    }
}

TEST_CASE("parity game allows exactly the parity-matching profiles") {
    const BayesianGame g = registry_get("G4");
    CHECK(g.allowed.at({0, 0}) == std::set<ActionProfile>{{0, 0}, {1, 1}});
    CHECK(g.allowed.at({0, 1}) == std::set<ActionProfile>{{0, 1}, {1, 0}});
    CHECK(g.allowed.at({1, 0}) == std::set<ActionProfile>{{0, 1}, {1, 0}});
    CHECK(g.allowed.at({1, 1}) == std::set<ActionProfile>{{0, 0}, {1, 1}});
}

TEST_CASE("magic-square game matches the fixed allowed-set table") {
    const BayesianGame g = registry_get("G5");
    CHECK(g.player_count() == 2);
    CHECK(g.type_labels[0] == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(g.action_labels[1] == std::vector<std::string>{"1", "2", "3", "4"});

    const std::set<ActionProfile> expected[3][3] = {
        {pairs({11, 12, 21, 22, 33, 34, 43, 44}),
         pairs({11, 12, 23, 24, 31, 32, 43, 44}),
         pairs({11, 12, 23, 24, 33, 34, 41, 42})},
        {pairs({11, 13, 21, 23, 32, 34, 42, 44}),
         pairs({11, 13, 22, 24, 31, 33, 42, 44}),
         pairs({11, 13, 22, 24, 32, 34, 41, 43})},
        {pairs({11, 14, 21, 24, 32, 33, 42, 43}),
         pairs({11, 14, 22, 23, 31, 34, 42, 43}),
         pairs({12, 13, 21, 24, 31, 34, 42, 43})},
    };
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            CHECK(g.allowed.at({x, y}).size() == 8);
            CHECK(g.allowed.at({x, y}) == expected[x][y]);
        }
    }
    CHECK(g.prior.at({0, 0}) == Rational(1, 9));
}

TEST_CASE("three-player game constrains parity in four cells") {
    const BayesianGame g = registry_get("G6");
    CHECK(g.player_count() == 3);
    const std::set<ActionProfile> even = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    const std::set<ActionProfile> odd = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}};

    CHECK(g.allowed.at({0, 0, 0}) == even);
    CHECK(g.allowed.at({1, 1, 0}) == odd);
    CHECK(g.allowed.at({0, 1, 1}) == odd);
    CHECK(g.allowed.at({1, 0, 1}) == odd);
    for (const TypeProfile& tp :
         {TypeProfile{0, 1, 0}, TypeProfile{1, 0, 0}, TypeProfile{0, 0, 1},
          TypeProfile{1, 1, 1}}) {
        CHECK(g.allowed.at(tp).size() == 8);
    }
}

TEST_CASE("forbidden-pair games match their tables") {
    const BayesianGame g7 = registry_get("G7");
    CHECK(g7.allowed.at({0, 0}) == pairs({11, 12, 21, 22}));
    CHECK(g7.allowed.at({0, 1}) == pairs({11, 21, 22}));
    CHECK(g7.allowed.at({1, 0}) == pairs({11, 12, 22}));
    CHECK(g7.allowed.at({1, 1}) == pairs({12, 21, 22}));

    const BayesianGame ga = registry_get("G7_appendix");
    CHECK(ga.allowed.at({0, 0}) == pairs({11, 12, 22}));
    CHECK(ga.allowed.at({0, 1}) == pairs({11, 21, 22}));
    CHECK(ga.allowed.at({1, 0}) == pairs({11, 21, 22}));
    CHECK(ga.allowed.at({1, 1}) == pairs({12, 21, 22}));
}

TEST_CASE("pure Nash search uses weak inequalities") {
    // Payoff 1 only at (0, 0): the zero-payoff profile (1, 1) is still an
    // equilibrium because no unilateral deviation from it gains anything.
    StageGame g;
    g.action_labels = {{"0", "1"}, {"0", "1"}};
    for (const ActionProfile& ap : g.action_profiles()) {
        const double v = (ap == ActionProfile{0, 0}) ? 1.0 : 0.0;
        g.payoffs[ap] = {v, v};
    }
    const std::set<ActionProfile> expected = {{0, 0}, {1, 1}};
    CHECK(compute_pure_nash(g) == expected);
    CHECK(oracle_nash(g) == expected);
}

TEST_CASE("constant-payoff game makes every profile an equilibrium") {
    StageGame g;
    g.action_labels = {{"a", "b", "c"}, {"a", "b"}};
    for (const ActionProfile& ap : g.action_profiles()) {
        g.payoffs[ap] = {0.0, 0.0};
    }
    CHECK(compute_pure_nash(g).size() == 6);
}

TEST_CASE("asymmetric payoffs single out the strict equilibrium") {
    StageGame g;
    g.action_labels = {{"0", "1"}, {"0", "1"}};
    g.payoffs[{0, 0}] = {2.0, 1.0};
    g.payoffs[{0, 1}] = {0.0, 0.0};
    g.payoffs[{1, 0}] = {0.0, 0.0};
    g.payoffs[{1, 1}] = {1.0, 2.0};
    const std::set<ActionProfile> expected = {{0, 0}, {1, 1}};
    CHECK(compute_pure_nash(g) == expected);
    CHECK(oracle_nash(g) == expected);
}

TEST_CASE("every stored allowed set is the Nash set of its indicator game") {
    for (const std::string& name : registry_names()) {
        const BayesianGame g = registry_get(name);
        for (const TypeProfile& tp : g.type_profiles()) {
            const StageGame stage = indicator_stage_game(g, tp);
            CHECK(compute_pure_nash(stage) == g.allowed.at(tp));
            CHECK(oracle_nash(stage) == g.allowed.at(tp));
        }
    }
}

TEST_CASE("serialization round-trips every registry game") {
    for (const std::string& name : registry_names()) {
        const BayesianGame g = registry_get(name);
        const std::string text = serialize_game(g);
        const BayesianGame reparsed = parse_game(text);
        CHECK(reparsed == g);
        CHECK(serialize_game(reparsed) == text);
        CHECK(serialize_game(g) == text);  // twice over, byte-stable
    }
}

TEST_CASE("shipped fixture files parse to the registry games") {
    for (const std::string& name : registry_names()) {
        const std::string path =
            std::string(ZERONASH_FIXTURE_DIR) + "/" + name + ".game";
        const BayesianGame from_file = load_game_file(path);
        CHECK(from_file == registry_get(name));
    }
}

TEST_CASE("explicit priors parse and serialize stably") {
    const std::string text =
        "game tilted\n"
        "players 2\n"
        "types A: x1 x2\n"
        "types B: y1 y2\n"
        "actions A: 0 1\n"
        "actions B: 0 1\n"
        "prior x1 y1 = 1/2\n"
        "prior x1 y2 = 1/6\n"
        "prior x2 y1 = 1/6\n"
        "prior x2 y2 = 1/6\n"
        "allow x1 y1 : 0,0\n"
        "allow x1 y2 : 0,1\n"
        "allow x2 y1 : 1,0\n"
        "allow x2 y2 :\n";
    const BayesianGame g = parse_game(text);
    CHECK_FALSE(g.uniform_prior);
    CHECK(g.prior.at({0, 0}) == Rational(1, 2));
    CHECK(g.allowed.at({1, 1}).empty());
    CHECK(serialize_game(g) == text);
    CHECK(parse_game(serialize_game(g)) == g);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text =
        "# a coordination game\n"
        "game tiny  # trailing comment\n"
        "\n"
        "players 2\n"
        "types A: x1\n"
        "types B: y1\n"
        "actions A: 0 1\n"
        "actions B: 0 1\n"
        "prior uniform\n"
        "allow x1 y1 : 0,0 1,1\n";
    const BayesianGame g = parse_game(text);
    CHECK(g.name == "tiny");
    CHECK(g.allowed.at({0, 0}).size() == 2);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_game("game ok\nplayers 2\nbogus directive\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
}

TEST_CASE("semantic errors name the offending content") {
    const std::string header =
        "game g\n"
        "players 2\n"
        "types A: x1\n"
        "types B: y1\n"
        "actions A: 0 1\n"
        "actions B: 0 1\n";

    // Unknown type label.
    CHECK_THROWS_WITH_AS(
        parse_game(header + "prior uniform\nallow x9 y1 : 0,0\nallow x1 y1 : 0,0\n"),
        doctest::Contains("unknown type \"x9\""), ParseError);

    // Unknown action label.
    CHECK_THROWS_WITH_AS(parse_game(header + "prior uniform\nallow x1 y1 : 0,7\n"),
                         doctest::Contains("unknown action \"7\""), ParseError);

    // Duplicate type profile.
    CHECK_THROWS_WITH_AS(
        parse_game(header + "prior uniform\nallow x1 y1 : 0,0\nallow x1 y1 : 1,1\n"),
        doctest::Contains("duplicate allow"), ParseError);

    // Missing type profile.
    const std::string two_types =
        "game g\n"
        "players 2\n"
        "types A: x1 x2\n"
        "types B: y1\n"
        "actions A: 0 1\n"
        "actions B: 0 1\n"
        "prior uniform\n"
        "allow x1 y1 : 0,0\n";
    CHECK_THROWS_WITH_AS(parse_game(two_types),
                         doctest::Contains("missing type profile x2 y1"), ParseError);

    // Prior that does not sum to 1, reported at the last prior line.
    try {
        parse_game(header +
                   "prior x1 y1 = 17/16\n"
                   "allow x1 y1 : 0,0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
        CHECK(std::string(e.what()).find("17/16") != std::string::npos);
    }

    // Malformed rational.
    CHECK_THROWS_WITH_AS(
        parse_game(header + "prior x1 y1 = 1/0\nallow x1 y1 : 0,0\n"),
        doctest::Contains("invalid rational"), ParseError);

    // Joint action with wrong arity.
    CHECK_THROWS_WITH_AS(parse_game(header + "prior uniform\nallow x1 y1 : 0,0,1\n"),
                         doctest::Contains("expected 2"), ParseError);

    // Structure line before the header is complete.
    CHECK_THROWS_WITH_AS(
        parse_game("game g\nplayers 2\ntypes A: x1\nallow x1 y1 : 0,0\n"),
        doctest::Contains("missing types"), ParseError);

    // Empty document.
    CHECK_THROWS_AS(parse_game(""), ParseError);

    // Duplicate label in a types line.
    CHECK_THROWS_WITH_AS(
        parse_game("game g\nplayers 2\ntypes A: x1 x1\n"),
        doctest::Contains("duplicate label"), ParseError);
}

TEST_CASE("uniform prior splits evenly") {
    const BayesianGame g5 = registry_get("G5");
    const auto prior = uniform_prior_for(g5);
    CHECK(prior.size() == 9);
    for (const auto& [tp, p] : prior) CHECK(p == Rational(1, 9));
}
