// Classical coordination analysis by exhaustive enumeration.
//
// A deterministic profile assigns one action per player per type.  Shared
// randomness adds nothing to zero-error feasibility: a mixture hits the
// allowed set with probability 1 exactly when every profile in its support
// does, so enumerating deterministic profiles decides feasibility for all
// local models.  The same convexity argument makes the minimum error over
// mixtures equal the minimum over deterministic profiles.
//
// Profiles are ordered lexicographically: player 0's response list is most
// significant, within a player the response to the first declared type, and
// actions compare by declared index.

#pragma once

#include "zeronash/game.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace zeronash {

// Default ceiling on the number of deterministic profiles to enumerate.
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Raised instead of starting an enumeration larger than the cap.
class EnumerationCapError : public std::runtime_error {
  public:
    EnumerationCapError(long double estimate, std::uint64_t cap)
        : std::runtime_error("profile space of about " + std::to_string(
                                 static_cast<double>(estimate)) +
                             " profiles exceeds the enumeration cap of " +
                             std::to_string(cap)),
          estimate_(estimate),
          cap_(cap) {}

    long double estimate() const { return estimate_; }
    std::uint64_t cap() const { return cap_; }

  private:
    long double estimate_;
    std::uint64_t cap_;
};

// Per player, per type index, the chosen action index.
struct DeterministicProfile {
    std::vector<std::vector<int>> response;

    ActionProfile outcome(const TypeProfile& tp) const;
    auto operator<=>(const DeterministicProfile&) const = default;
};

// Finite mixture of deterministic profiles.
// Invariant: weights are nonnegative rationals summing exactly to 1.
struct LhvModel {
    std::vector<DeterministicProfile> support;
    std::vector<Rational> weights;
};

// First type profile (lexicographic) where the profile leaves the allowed
// set, or nullopt for a zero-error profile.
std::optional<TypeProfile> first_failure(const BayesianGame& game,
                                         const DeterministicProfile& profile);

struct ProfileCertificate {
    DeterministicProfile profile;
    TypeProfile failing_type_profile;
};

struct FeasibilityReport {
    bool feasible = false;
    std::uint64_t profiles_enumerated = 0;
    std::uint64_t zero_error_count = 0;
    // Weak runs: lexicographically first zero-error profile when feasible.
    std::optional<DeterministicProfile> witness;
    // Strong runs: uniform mixture over a greedy cover of the zero-error set.
    std::optional<LhvModel> mixture_witness;
    // One entry per enumerated profile that fails some type profile.
    std::vector<ProfileCertificate> certificates;
    // Strong runs: allowed outcomes no zero-error profile produces.
    std::vector<std::pair<TypeProfile, ActionProfile>> uncovered;
    // Type profiles whose allowed set is empty (decides infeasibility
    // without enumeration).
    std::vector<TypeProfile> empty_allowed;
};

// Number of deterministic profiles for the game.
std::uint64_t profile_count(const BayesianGame& game);

// All-zero first profile in lexicographic order; advance steps to the next
// one, returning false after the last.
DeterministicProfile first_profile(const BayesianGame& game);
bool advance_profile(const BayesianGame& game, DeterministicProfile& profile);

// Zero-error feasibility: is there a local model that never leaves the
// allowed set?  Enumerates every deterministic profile (refusing with a
// size estimate beyond the cap), recording a first-failure certificate per
// failing profile.
FeasibilityReport solve_zero_error(const BayesianGame& game,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// Strengthened feasibility: additionally every allowed outcome of every
// type profile must be reachable with positive probability.  Feasible
// exactly when the zero-error profiles jointly cover all allowed outcomes;
// the witness mixes a greedy cover (largest new coverage first, ties by
// lexicographic profile order) with uniform weights.
FeasibilityReport solve_strong_zero_error(const BayesianGame& game,
                                          std::uint64_t cap = kDefaultEnumerationCap);

struct MinErrorResult {
    Rational value;
    DeterministicProfile witness;  // lexicographically first minimizer
    std::uint64_t profiles_enumerated = 0;
};

// Minimum miscoordination probability over deterministic profiles (and by
// convexity over all local models) under the game's prior, or an explicit
// override.
MinErrorResult min_error(const BayesianGame& game,
                         std::uint64_t cap = kDefaultEnumerationCap);
MinErrorResult min_error(const BayesianGame& game,
                         const std::map<TypeProfile, Rational>& prior,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Error probability of a profile or mixture under a prior, exactly.
Rational profile_error(const BayesianGame& game, const DeterministicProfile& profile,
                       const std::map<TypeProfile, Rational>& prior);
Rational lhv_error(const BayesianGame& game, const LhvModel& model,
                   const std::map<TypeProfile, Rational>& prior);

}  // namespace zeronash
