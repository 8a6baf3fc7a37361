#include "zeronash/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeronash {

namespace {

// Odometer over per-position radices, first position most significant.
std::vector<std::vector<int>> enumerate_profiles(const std::vector<int>& radices) {
    std::vector<std::vector<int>> out;
    long long total = 1;
    for (int r : radices) total *= r;
    out.reserve(static_cast<size_t>(total));
    std::vector<int> current(radices.size(), 0);
    for (long long i = 0; i < total; ++i) {
        out.push_back(current);
        for (int pos = static_cast<int>(radices.size()) - 1; pos >= 0; --pos) {
            if (++current[pos] < radices[pos]) break;
            current[pos] = 0;
        }
    }
    return out;
}

int index_of(const std::vector<std::string>& labels, const std::string& label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

}  // namespace

std::vector<TypeProfile> BayesianGame::type_profiles() const {
    std::vector<int> radices;
    for (const auto& t : type_labels) radices.push_back(static_cast<int>(t.size()));
    return enumerate_profiles(radices);
}

std::vector<ActionProfile> BayesianGame::action_profiles() const {
    std::vector<int> radices;
    for (const auto& a : action_labels) radices.push_back(static_cast<int>(a.size()));
    return enumerate_profiles(radices);
}

std::vector<std::string> BayesianGame::type_profile_labels(const TypeProfile& tp) const {
    std::vector<std::string> out;
    for (size_t i = 0; i < tp.size(); ++i) out.push_back(type_labels[i][tp[i]]);
    return out;
}

std::vector<std::string> BayesianGame::action_profile_labels(const ActionProfile& ap) const {
    std::vector<std::string> out;
    for (size_t i = 0; i < ap.size(); ++i) out.push_back(action_labels[i][ap[i]]);
    return out;
}

int BayesianGame::type_index(int player, const std::string& label) const {
    return index_of(type_labels[player], label);
}

int BayesianGame::action_index(int player, const std::string& label) const {
    return index_of(action_labels[player], label);
}

void BayesianGame::validate() const {
    const int n = player_count();
    if (n < 2 || n > 3) {
        throw std::invalid_argument("game " + name + ": " + std::to_string(n) +
                                    " players, supported range is 2 to 3");
    }
    if (static_cast<int>(type_labels.size()) != n ||
        static_cast<int>(action_labels.size()) != n) {
        throw std::invalid_argument("game " + name +
                                    ": type/action lists do not match player count");
    }
    for (int i = 0; i < n; ++i) {
        if (type_labels[i].empty()) {
            throw std::invalid_argument("game " + name + ": player " + players[i] +
                                        " has no types");
        }
        if (action_labels[i].empty()) {
            throw std::invalid_argument("game " + name + ": player " + players[i] +
                                        " has no actions");
        }
    }
    Rational total(0);
    for (const TypeProfile& tp : type_profiles()) {
        const auto pit = prior.find(tp);
        if (pit == prior.end()) {
            throw std::invalid_argument("game " + name +
                                        ": missing prior for a type profile");
        }
        if (pit->second < Rational(0)) {
            throw std::invalid_argument("game " + name + ": negative prior");
        }
        total += pit->second;
        const auto ait = allowed.find(tp);
        if (ait == allowed.end()) {
            throw std::invalid_argument("game " + name +
                                        ": missing allowed set for a type profile");
        }
        for (const ActionProfile& ap : ait->second) {
            if (static_cast<int>(ap.size()) != n) {
                throw std::invalid_argument("game " + name +
                                            ": allowed profile arity mismatch");
            }
            for (int i = 0; i < n; ++i) {
                if (ap[i] < 0 || ap[i] >= static_cast<int>(action_labels[i].size())) {
                    throw std::invalid_argument("game " + name +
                                                ": allowed action out of range");
                }
            }
        }
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("game " + name + ": prior sums to " +
                                    to_string(total) + ", expected 1");
    }
}

std::vector<ActionProfile> StageGame::action_profiles() const {
    std::vector<int> radices;
    for (const auto& a : action_labels) radices.push_back(static_cast<int>(a.size()));
    return enumerate_profiles(radices);
}

StageGame indicator_stage_game(const BayesianGame& game, const TypeProfile& tp) {
    const auto it = game.allowed.find(tp);
    if (it == game.allowed.end()) {
        throw std::invalid_argument("indicator_stage_game: unknown type profile");
    }
    StageGame stage;
    stage.action_labels = game.action_labels;
    const int n = game.player_count();
    for (const ActionProfile& ap : stage.action_profiles()) {
        const double value = it->second.count(ap) ? 1.0 : 0.0;
        stage.payoffs[ap] = std::vector<double>(n, value);
    }
    return stage;
}

std::set<ActionProfile> compute_pure_nash(const StageGame& game) {
    std::set<ActionProfile> equilibria;
    const int n = game.player_count();
    for (const ActionProfile& ap : game.action_profiles()) {
        const std::vector<double>& here = game.payoffs.at(ap);
        bool stable = true;
        for (int player = 0; player < n && stable; ++player) {
            ActionProfile deviation = ap;
            const int count = static_cast<int>(game.action_labels[player].size());
            for (int alt = 0; alt < count; ++alt) {
                if (alt == ap[player]) continue;
                deviation[player] = alt;
                if (game.payoffs.at(deviation)[player] > here[player]) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) equilibria.insert(ap);
    }
    return equilibria;
}

std::map<TypeProfile, Rational> uniform_prior_for(const BayesianGame& game) {
    const auto tps = game.type_profiles();
    std::map<TypeProfile, Rational> prior;
    const Rational each(1, static_cast<long long>(tps.size()));
    for (const TypeProfile& tp : tps) prior[tp] = each;
    return prior;
}

namespace {

BayesianGame make_base(std::string name, std::vector<std::string> players,
                       std::vector<std::vector<std::string>> types,
                       std::vector<std::vector<std::string>> actions) {
    BayesianGame g;
    g.name = std::move(name);
    g.players = std::move(players);
    g.type_labels = std::move(types);
    g.action_labels = std::move(actions);
    return g;
}

void finish_uniform(BayesianGame& g) {
    g.uniform_prior = true;
    g.prior = uniform_prior_for(g);
    g.validate();
}

// Decodes two-digit pair codes: 11 -> (0, 0), 34 -> (2, 3).
std::set<ActionProfile> pairs(std::initializer_list<int> codes) {
    std::set<ActionProfile> out;
    for (int code : codes) out.insert({code / 10 - 1, code % 10 - 1});
    return out;
}

// Decodes three-digit triple codes over binary actions: 122 -> (0, 1, 1).
std::set<ActionProfile> triples(std::initializer_list<int> codes) {
    std::set<ActionProfile> out;
    for (int code : codes) {
        out.insert({code / 100 - 1, (code / 10) % 10 - 1, code % 10 - 1});
    }
    return out;
}

std::set<ActionProfile> all_triples() {
    return triples({111, 112, 121, 122, 211, 212, 221, 222});
}

// Single-type coordination game: exactly one rewarded profile (0, 0), yet
// the zero-payoff profile (1, 1) is also an equilibrium because deviations
// from it gain nothing.  The allowed set is the full equilibrium set.
BayesianGame make_g1() {
    BayesianGame g = make_base("G1", {"A", "B"}, {{"x1"}, {"y1"}},
                               {{"0", "1"}, {"0", "1"}});
    g.allowed[{0, 0}] = {{0, 0}, {1, 1}};
    finish_uniform(g);
    return g;
}

// Pure coordination: both matching profiles rewarded equally.
BayesianGame make_g2() {
    BayesianGame g = make_base("G2", {"A", "B"}, {{"x1"}, {"y1"}},
                               {{"0", "1"}, {"0", "1"}});
    g.allowed[{0, 0}] = {{0, 0}, {1, 1}};
    finish_uniform(g);
    return g;
}

// Type-revealing coordination: at types (x, y) the rewarded profile is
// (x, y) itself; the complementary profile is again a zero-payoff
// equilibrium, so each cell carries both.
BayesianGame make_g3() {
    BayesianGame g = make_base("G3", {"A", "B"}, {{"x1", "x2"}, {"y1", "y2"}},
                               {{"0", "1"}, {"0", "1"}});
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            g.allowed[{x, y}] = {{x, y}, {1 - x, 1 - y}};
        }
    }
    finish_uniform(g);
    return g;
}

// Parity coordination: actions must satisfy a xor b = x xor y.
BayesianGame make_g4() {
    BayesianGame g = make_base("G4", {"A", "B"}, {{"x1", "x2"}, {"y1", "y2"}},
                               {{"0", "1"}, {"0", "1"}});
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            std::set<ActionProfile> cell;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    if ((a ^ b) == (x ^ y)) cell.insert({a, b});
                }
            }
            g.allowed[{x, y}] = cell;
        }
    }
    finish_uniform(g);
    return g;
}

// Magic-square coordination game: 3 types and 4 actions per player; each
// cell's allowed set has 8 of the 16 joint actions.
BayesianGame make_g5() {
    BayesianGame g = make_base("G5", {"A", "B"},
                               {{"x1", "x2", "x3"}, {"y1", "y2", "y3"}},
                               {{"1", "2", "3", "4"}, {"1", "2", "3", "4"}});
    g.allowed[{0, 0}] = pairs({11, 12, 21, 22, 33, 34, 43, 44});
    g.allowed[{0, 1}] = pairs({11, 12, 23, 24, 31, 32, 43, 44});
    g.allowed[{0, 2}] = pairs({11, 12, 23, 24, 33, 34, 41, 42});
    g.allowed[{1, 0}] = pairs({11, 13, 21, 23, 32, 34, 42, 44});
    g.allowed[{1, 1}] = pairs({11, 13, 22, 24, 31, 33, 42, 44});
    g.allowed[{1, 2}] = pairs({11, 13, 22, 24, 32, 34, 41, 43});
    g.allowed[{2, 0}] = pairs({11, 14, 21, 24, 32, 33, 42, 43});
    g.allowed[{2, 1}] = pairs({11, 14, 22, 23, 31, 34, 42, 43});
    g.allowed[{2, 2}] = pairs({12, 13, 21, 24, 31, 34, 42, 43});
    finish_uniform(g);
    return g;
}

// Three-player parity game: four cells constrain the number of "2" actions
// to a fixed parity, the other four allow everything.
BayesianGame make_g6() {
    BayesianGame g = make_base("G6", {"A", "B", "C"},
                               {{"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"}},
                               {{"1", "2"}, {"1", "2"}, {"1", "2"}});
    const auto even = triples({111, 122, 212, 221});
    const auto odd = triples({112, 121, 211, 222});
    g.allowed[{0, 0, 0}] = even;
    g.allowed[{0, 1, 0}] = all_triples();
    g.allowed[{1, 0, 0}] = all_triples();
    g.allowed[{1, 1, 0}] = odd;
    g.allowed[{0, 0, 1}] = all_triples();
    g.allowed[{0, 1, 1}] = odd;
    g.allowed[{1, 0, 1}] = odd;
    g.allowed[{1, 1, 1}] = all_triples();
    finish_uniform(g);
    return g;
}

// Two-type binary game with one forbidden pair in three of the four cells.
BayesianGame make_g7() {
    BayesianGame g = make_base("G7", {"A", "B"}, {{"x1", "x2"}, {"y1", "y2"}},
                               {{"1", "2"}, {"1", "2"}});
    g.allowed[{0, 0}] = pairs({11, 12, 21, 22});
    g.allowed[{0, 1}] = pairs({11, 21, 22});
    g.allowed[{1, 0}] = pairs({11, 12, 22});
    g.allowed[{1, 1}] = pairs({12, 21, 22});
    finish_uniform(g);
    return g;
}

// Variant of G7 with a forbidden pair in every cell.
BayesianGame make_g7_appendix() {
    BayesianGame g = make_base("G7_appendix", {"A", "B"},
                               {{"x1", "x2"}, {"y1", "y2"}},
                               {{"1", "2"}, {"1", "2"}});
    g.allowed[{0, 0}] = pairs({11, 12, 22});
    g.allowed[{0, 1}] = pairs({11, 21, 22});
    g.allowed[{1, 0}] = pairs({11, 21, 22});
    g.allowed[{1, 1}] = pairs({12, 21, 22});
    finish_uniform(g);
    return g;
}

}  // namespace

std::vector<std::string> registry_names() {
    return {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G7_appendix"};
}

BayesianGame registry_get(const std::string& name) {
    if (name == "G1") return make_g1();
    if (name == "G2") return make_g2();
    if (name == "G3") return make_g3();
    if (name == "G4") return make_g4();
    if (name == "G5") return make_g5();
    if (name == "G6") return make_g6();
    if (name == "G7") return make_g7();
    if (name == "G7_appendix") return make_g7_appendix();
    std::string available;
    for (const std::string& n : registry_names()) {
        if (!available.empty()) available += ", ";
        available += n;
    }
    throw std::invalid_argument("unknown game \"" + name +
                                "\"; available: " + available);
}

}  // namespace zeronash
