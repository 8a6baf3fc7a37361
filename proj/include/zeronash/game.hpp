// Finite Bayesian coordination games.
//
// A game fixes, per player, an ordered list of type labels and action
// labels.  For every joint type profile it stores a rational prior
// probability and the set of joint actions that count as correct
// coordination (the pure Nash equilibria of that profile's stage game).
// Types and actions are handled internally as indices into the declared
// label lists; profile orderings are always lexicographic with respect to
// declaration order, first player most significant.

#pragma once

#include "zeronash/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zeronash {

using TypeProfile = std::vector<int>;    // per player, type index
using ActionProfile = std::vector<int>;  // per player, action index

struct BayesianGame {
    std::string name;
    std::vector<std::string> players;
    std::vector<std::vector<std::string>> type_labels;    // [player][type]
    std::vector<std::vector<std::string>> action_labels;  // [player][action]
    bool uniform_prior = true;
    std::map<TypeProfile, Rational> prior;
    std::map<TypeProfile, std::set<ActionProfile>> allowed;

    int player_count() const { return static_cast<int>(players.size()); }

    // All joint type profiles in lexicographic order.
    std::vector<TypeProfile> type_profiles() const;

    // All joint action profiles in lexicographic order.
    std::vector<ActionProfile> action_profiles() const;

    std::vector<std::string> type_profile_labels(const TypeProfile& tp) const;
    std::vector<std::string> action_profile_labels(const ActionProfile& ap) const;

    // Index of a label, or -1 when absent.
    int type_index(int player, const std::string& label) const;
    int action_index(int player, const std::string& label) const;

    // Checks structural consistency: nonempty label lists, a prior and an
    // allowed-set entry for every type profile, allowed actions in range,
    // prior nonnegative and summing exactly to 1.  Throws
    // std::invalid_argument on violation.
    void validate() const;

    bool operator==(const BayesianGame&) const = default;
};

// One-shot game in normal form with real payoffs per player.
struct StageGame {
    std::vector<std::vector<std::string>> action_labels;     // [player][action]
    std::map<ActionProfile, std::vector<double>> payoffs;    // per player

    int player_count() const { return static_cast<int>(action_labels.size()); }
    std::vector<ActionProfile> action_profiles() const;
};

// Stage game at one type profile whose payoff is 1 for every player on the
// allowed set and 0 elsewhere.
StageGame indicator_stage_game(const BayesianGame& game, const TypeProfile& tp);

// All pure Nash equilibria under weak inequalities: a profile is an
// equilibrium when no unilateral deviation strictly improves the deviating
// player's payoff.  In particular a constant-payoff game returns every
// profile.
std::set<ActionProfile> compute_pure_nash(const StageGame& game);

// Built-in game catalog, keyed by name.  registry_names() lists the keys in
// catalog order; registry_get throws std::invalid_argument listing the
// available names when the key is unknown.
std::vector<std::string> registry_names();
BayesianGame registry_get(const std::string& name);

// Uniform prior over the given game's type profiles.
std::map<TypeProfile, Rational> uniform_prior_for(const BayesianGame& game);

}  // namespace zeronash
