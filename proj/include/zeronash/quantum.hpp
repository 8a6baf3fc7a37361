// Entangled coordination strategies and their verification.
//
// A strategy fixes a shared state, one local measurement per player and
// type, and a map from measurement outcomes to action labels.  Verification
// simulates the Born rule directly: for every joint type profile it
// accumulates the joint outcome distribution into an action distribution
// and compares it against the game's allowed sets.

#pragma once

#include "zeronash/game.hpp"
#include "zeronash/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zeronash {

// Default leak tolerance for zero-error verification.
inline constexpr double kLeakTol = 1e-12;

// One player's behavior: measurements and outcome-to-action maps indexed by
// type, aligned with type_names.
struct PlayerStrategy {
    std::string player;
    std::vector<std::string> type_names;
    std::vector<Measurement> measurements;
    // [type][outcome] -> action label
    std::vector<std::vector<std::string>> outcome_actions;
};

struct QuantumStrategy {
    std::string name;
    std::vector<int> local_dims;                    // per player
    std::variant<StateVector, ComplexMatrix> state; // pure or density
    std::vector<PlayerStrategy> players;

    int player_count() const { return static_cast<int>(players.size()); }
    // Throws std::invalid_argument on internal inconsistency (dimension or
    // outcome-map mismatches).
    void validate() const;
};

// Outcome distribution over joint action labels at one type profile.
// Invariant: probabilities sum to 1 within kDistributionSumTol (checked at
// construction in born_action_distribution).
struct ActionDistribution {
    TypeProfile type_profile;
    std::map<std::vector<std::string>, double> probabilities;
};

// Simulates all joint outcomes at the given type profile (indices into each
// player's type list) and accumulates Born probabilities per action profile.
ActionDistribution born_action_distribution(const QuantumStrategy& strategy,
                                            const TypeProfile& tp);

struct TypeProfileLeak {
    TypeProfile type_profile;
    double leak = 0.0;  // probability mass outside the allowed set
};

struct VerificationReport {
    bool pass = false;
    double tolerance = kLeakTol;
    double max_leak = 0.0;
    TypeProfile max_leak_type_profile;
    std::vector<TypeProfileLeak> leaks;
    // Strong verification only: the smallest probability assigned to an
    // allowed outcome, its location, and the threshold it must reach.
    std::optional<double> min_allowed_probability;
    TypeProfile min_type_profile;
    ActionProfile min_action_profile;
    double positivity_threshold = 0.0;
};

// Checks the strategy's shape against the game (player count, type labels,
// local dimensions, outcome actions present in the game); throws
// std::invalid_argument on mismatch.
void check_strategy_shape(const QuantumStrategy& strategy, const BayesianGame& game);

// Zero-error check: at every type profile the probability mass outside the
// allowed set must stay within tol.
VerificationReport verify_zero_error(const QuantumStrategy& strategy,
                                     const BayesianGame& game,
                                     double tol = kLeakTol);

// Strengthened check: additionally every allowed outcome needs probability
// at least positivity_threshold; a negative threshold requests the default
// of 10 * tol.
VerificationReport verify_strong_zero_error(const QuantumStrategy& strategy,
                                            const BayesianGame& game,
                                            double tol = kLeakTol,
                                            double positivity_threshold = -1.0);

// Two maximally entangled qubit pairs with commuting-observable
// measurements; matches the shape of G5.
QuantumStrategy build_magic_square_strategy();

// Three-qubit GHZ state with X/Y basis measurements; matches G6.
QuantumStrategy build_ghz_strategy();

// Hardy-state strategy for G7.  The second type measures a fixed local
// basis; the first type either solves for the basis that exactly kills the
// forbidden pairs (Solved) or measures the X eigenbasis (LiteralX, which
// coincides with the solved basis only at gamma = delta = pi/4 with zero
// phases; see solve_hardy_type1_bases).
enum class HardyMode { Solved, LiteralX };

struct HardyParams {
    double gamma = 0.0;  // in (0, pi), state-shape angle for player A
    double delta = 0.0;  // in (0, pi), state-shape angle for player B
    double eta = 0.0;    // phase for player A's basis
    double kappa = 0.0;  // phase for player B's basis
    HardyMode mode = HardyMode::Solved;

    void validate() const;  // throws std::invalid_argument outside the domain
};

QuantumStrategy build_hardy_strategy(const HardyParams& params);

// The Hardy state for the given parameters (normalized exactly).
StateVector build_hardy_state(const HardyParams& params);

// Single-qubit orthonormal basis as two column vectors.
struct QubitBasis {
    ComplexVector first;   // outcome 0
    ComplexVector second;  // outcome 1
};

// Given a two-qubit state and each player's second-type basis {a0, a1} and
// {b0, b1}, returns first-type bases whose first vector is orthogonal to
// the partner-conditioned state: v0 perp (I (x) <b1|) psi for player A and
// u0 perp (<a1| (x) I) psi for player B.  This makes the outcome pairs
// (1, 2) at (x1, y2) and (2, 1) at (x2, y1) exactly impossible.  Global
// phases are fixed by making the first nonzero component real positive.
// Throws std::invalid_argument when a conditioned state has norm below
// 1e-9 (degenerate, e.g. a product state).
std::pair<QubitBasis, QubitBasis> solve_hardy_type1_bases(const StateVector& state,
                                                          const QubitBasis& a_basis,
                                                          const QubitBasis& b_basis);

// Schmidt coefficients (singular values of the amplitude matrix, descending)
// of a bipartite pure state.  Throws std::invalid_argument unless the state
// has exactly two parties.
std::vector<double> schmidt_coefficients(const StateVector& state);

// One evaluated point of a Hardy parameter scan.
struct HardyScanPoint {
    double gamma = 0.0;
    double delta = 0.0;
    double witness_probability = 0.0;  // P((1,1) | x1, y1)
    double schmidt_min = 0.0;          // smaller Schmidt coefficient
    double max_leak = 0.0;
    double min_allowed_probability = 0.0;
    bool pass = false;
};

struct HardyScanResult {
    std::vector<HardyScanPoint> points;  // row-major, gamma outer
    HardyScanPoint best_witness;         // largest witness probability
    HardyScanPoint most_entangled;       // schmidt_min closest to 1/sqrt(2)
};

// Scans solved-mode Hardy strategies on an interior grid
// gamma_i = i*pi/(N+1), delta_j = j*pi/(M+1) and verifies the strengthened
// condition on G7 at each point with the given thresholds.
HardyScanResult hardy_scan(int gamma_steps, int delta_steps,
                           double leak_tol = 1e-9,
                           double positivity_threshold = 1e-3);

// Refines the witness maximum around the best grid point with repeated
// local grids; returns the refined best point.
HardyScanPoint refine_hardy_max(const HardyScanPoint& start, int rounds,
                                double leak_tol = 1e-9,
                                double positivity_threshold = 1e-3);

}  // namespace zeronash
