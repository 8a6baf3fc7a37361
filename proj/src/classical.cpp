#include "zeronash/classical.hpp"

#include <algorithm>
#include <limits>

namespace zeronash {

namespace {

long double profile_count_estimate(const BayesianGame& game) {
    long double estimate = 1.0L;
    for (int p = 0; p < game.player_count(); ++p) {
        for (size_t t = 0; t < game.type_labels[p].size(); ++t) {
            estimate *= static_cast<long double>(game.action_labels[p].size());
        }
    }
    return estimate;
}

// Gathers type profiles whose allowed set is empty; any such profile makes
// zero-error coordination impossible before any enumeration.
std::vector<TypeProfile> find_empty_allowed(const BayesianGame& game) {
    std::vector<TypeProfile> empty;
    for (const TypeProfile& tp : game.type_profiles()) {
        if (game.allowed.at(tp).empty()) empty.push_back(tp);
    }
    return empty;
}

void check_cap(const BayesianGame& game, std::uint64_t cap) {
    const long double estimate = profile_count_estimate(game);
    if (estimate > static_cast<long double>(cap)) {
        throw EnumerationCapError(estimate, cap);
    }
}

}  // namespace

ActionProfile DeterministicProfile::outcome(const TypeProfile& tp) const {
    ActionProfile ap(tp.size());
    for (size_t p = 0; p < tp.size(); ++p) ap[p] = response[p][tp[p]];
    return ap;
}

std::optional<TypeProfile> first_failure(const BayesianGame& game,
                                         const DeterministicProfile& profile) {
    for (const TypeProfile& tp : game.type_profiles()) {
        if (!game.allowed.at(tp).count(profile.outcome(tp))) return tp;
    }
    return std::nullopt;
}

std::uint64_t profile_count(const BayesianGame& game) {
    std::uint64_t count = 1;
    for (int p = 0; p < game.player_count(); ++p) {
        const std::uint64_t actions = game.action_labels[p].size();
        for (size_t t = 0; t < game.type_labels[p].size(); ++t) {
            if (count > std::numeric_limits<std::uint64_t>::max() / actions) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            count *= actions;
        }
    }
    return count;
}

DeterministicProfile first_profile(const BayesianGame& game) {
    DeterministicProfile profile;
    for (int p = 0; p < game.player_count(); ++p) {
        profile.response.emplace_back(game.type_labels[p].size(), 0);
    }
    return profile;
}

bool advance_profile(const BayesianGame& game, DeterministicProfile& profile) {
    for (int p = game.player_count() - 1; p >= 0; --p) {
        const int actions = static_cast<int>(game.action_labels[p].size());
        for (int t = static_cast<int>(profile.response[p].size()) - 1; t >= 0; --t) {
            if (++profile.response[p][t] < actions) return true;
            profile.response[p][t] = 0;
        }
    }
    return false;
}

FeasibilityReport solve_zero_error(const BayesianGame& game, std::uint64_t cap) {
    FeasibilityReport report;
    report.empty_allowed = find_empty_allowed(game);
    if (!report.empty_allowed.empty()) return report;
    check_cap(game, cap);

    const std::vector<TypeProfile> tps = game.type_profiles();
    DeterministicProfile profile = first_profile(game);
    do {
        ++report.profiles_enumerated;
        std::optional<TypeProfile> failure;
        for (const TypeProfile& tp : tps) {
            if (!game.allowed.at(tp).count(profile.outcome(tp))) {
                failure = tp;
                break;
            }
        }
        if (failure) {
            report.certificates.push_back({profile, *failure});
        } else {
            ++report.zero_error_count;
            if (!report.witness) report.witness = profile;
        }
    } while (advance_profile(game, profile));

    report.feasible = report.zero_error_count > 0;
    return report;
}

FeasibilityReport solve_strong_zero_error(const BayesianGame& game,
                                          std::uint64_t cap) {
    FeasibilityReport report = solve_zero_error(game, cap);
    if (!report.empty_allowed.empty()) return report;

    // Universe of coverage targets: every allowed outcome of every type
    // profile must be produced by some zero-error profile.
    std::vector<std::pair<TypeProfile, ActionProfile>> universe;
    for (const TypeProfile& tp : game.type_profiles()) {
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            universe.emplace_back(tp, ap);
        }
    }

    if (!report.feasible) {
        report.uncovered = universe;
        return report;
    }

    // A deterministic profile covers exactly one outcome per type profile,
    // so coverage is a map from universe index to the covering profiles.
    std::vector<DeterministicProfile> zero_error;
    {
        DeterministicProfile profile = first_profile(game);
        do {
            if (!first_failure(game, profile)) zero_error.push_back(profile);
        } while (advance_profile(game, profile));
    }

    auto covered_indices = [&](const DeterministicProfile& z) {
        std::vector<size_t> indices;
        for (size_t i = 0; i < universe.size(); ++i) {
            if (z.outcome(universe[i].first) == universe[i].second) {
                indices.push_back(i);
            }
        }
        return indices;
    };

    std::vector<bool> covered(universe.size(), false);
    for (const DeterministicProfile& z : zero_error) {
        for (size_t i : covered_indices(z)) covered[i] = true;
    }
    for (size_t i = 0; i < universe.size(); ++i) {
        if (!covered[i]) report.uncovered.push_back(universe[i]);
    }
    if (!report.uncovered.empty()) {
        report.feasible = false;
        return report;
    }

    // Greedy cover over the zero-error set: largest number of newly covered
    // outcomes first, ties resolved by lexicographic profile order (the
    // enumeration order of zero_error).
    std::vector<bool> chosen_mask(universe.size(), false);
    std::vector<DeterministicProfile> chosen;
    size_t remaining = universe.size();
    while (remaining > 0) {
        size_t best_gain = 0;
        const DeterministicProfile* best = nullptr;
        for (const DeterministicProfile& z : zero_error) {
            size_t gain = 0;
            for (size_t i : covered_indices(z)) {
                if (!chosen_mask[i]) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = &z;
            }
        }
        for (size_t i : covered_indices(*best)) {
            if (!chosen_mask[i]) {
                chosen_mask[i] = true;
                --remaining;
            }
        }
        chosen.push_back(*best);
    }

    LhvModel model;
    model.support = std::move(chosen);
    model.weights.assign(model.support.size(),
                         Rational(1, static_cast<long long>(model.support.size())));
    report.mixture_witness = std::move(model);
    report.feasible = true;
    return report;
}

MinErrorResult min_error(const BayesianGame& game, std::uint64_t cap) {
    return min_error(game, game.prior, cap);
}

MinErrorResult min_error(const BayesianGame& game,
                         const std::map<TypeProfile, Rational>& prior,
                         std::uint64_t cap) {
    check_cap(game, cap);
    MinErrorResult result;
    result.value = Rational(2);  // above any probability
    DeterministicProfile profile = first_profile(game);
    do {
        ++result.profiles_enumerated;
        const Rational err = profile_error(game, profile, prior);
        if (err < result.value) {
            result.value = err;
            result.witness = profile;
        }
    } while (advance_profile(game, profile));
    return result;
}

Rational profile_error(const BayesianGame& game, const DeterministicProfile& profile,
                       const std::map<TypeProfile, Rational>& prior) {
    Rational error(0);
    for (const TypeProfile& tp : game.type_profiles()) {
        if (!game.allowed.at(tp).count(profile.outcome(tp))) {
            error += prior.at(tp);
        }
    }
    return error;
}

Rational lhv_error(const BayesianGame& game, const LhvModel& model,
                   const std::map<TypeProfile, Rational>& prior) {
    if (model.support.size() != model.weights.size()) {
        throw std::invalid_argument("lhv_error: support/weight size mismatch");
    }
    Rational total_weight(0);
    for (const Rational& w : model.weights) {
        if (w < Rational(0)) throw std::invalid_argument("lhv_error: negative weight");
        total_weight += w;
    }
    if (total_weight != Rational(1)) {
        throw std::invalid_argument("lhv_error: weights sum to " +
                                    to_string(total_weight) + ", expected 1");
    }
    // Induced outcome distribution per type profile, then the mass that
    // falls outside the allowed set, weighted by the prior.
    Rational error(0);
    for (const TypeProfile& tp : game.type_profiles()) {
        std::map<ActionProfile, Rational> distribution;
        for (size_t i = 0; i < model.support.size(); ++i) {
            distribution[model.support[i].outcome(tp)] += model.weights[i];
        }
        Rational miss(0);
        for (const auto& [ap, weight] : distribution) {
            if (!game.allowed.at(tp).count(ap)) miss += weight;
        }
        error += prior.at(tp) * miss;
    }
    return error;
}

}  // namespace zeronash
