// Depolarizing-noise robustness of entangled coordination strategies.
//
// State noise replaces the shared state rho by
// (1 - eps_s) rho + eps_s I / D; measurement noise replaces every effect E
// of a k-outcome measurement by (1 - eps_m) E + eps_m I / k, which keeps
// each measurement complete.  The miscoordination probability of the noisy
// strategy is compared against the classical floor (the exact minimum error
// over local models), and for the magic-square game against the closed form
//   error(eps_s, eps_m) = (eps_s (eps_m - 1)^2 - (eps_m - 2) eps_m) / 2.

#pragma once

#include "zeronash/classical.hpp"
#include "zeronash/quantum.hpp"

#include <iosfwd>
#include <optional>

namespace zeronash {

struct NoiseParams {
    double eps_state = 0.0;        // in [0, 1]
    double eps_measurement = 0.0;  // in [0, 1]

    void validate() const;  // throws std::invalid_argument outside [0, 1]
};

// Density matrix of a depolarized state.
ComplexMatrix depolarize_state(const StateVector& state, double eps);
ComplexMatrix depolarize_state(const ComplexMatrix& density, double eps);

// Depolarized copy of a measurement; the identity share is split evenly
// over the outcomes.
Measurement depolarize_measurements(const Measurement& m, double eps);

// Strategy with noise applied to the state and every measurement.
QuantumStrategy apply_noise(const QuantumStrategy& strategy, const NoiseParams& noise);

// Prior-weighted probability that the noisy strategy leaves the allowed
// set, by direct Born simulation.
double noisy_error_probability(const BayesianGame& game,
                               const QuantumStrategy& strategy,
                               const NoiseParams& noise);

// Closed-form error for the magic-square strategy on G5 under the uniform
// prior.
double closed_form_g5_error(const NoiseParams& noise);

struct SweepCell {
    double eps_s = 0.0;
    double eps_m = 0.0;
    double quantum_error = 0.0;
    bool advantage = false;  // quantum_error < classical floor, strictly
    std::optional<double> closed_form_delta;  // |numeric - closed form|, G5 only
};

struct SweepResult {
    int steps_s = 0;
    int steps_m = 0;
    Rational classical_floor;
    std::vector<SweepCell> cells;  // row-major, eps_s outer
};

// Inclusive grid over [0, 1]^2 with steps_s x steps_m points (each axis
// needs at least 2).  The classical floor is computed once from the game's
// prior.
SweepResult advantage_sweep(const BayesianGame& game, const QuantumStrategy& strategy,
                            int steps_s, int steps_m);

// CSV rendering: header eps_s,eps_m,quantum_error,classical_floor,advantage,
// closed_form_delta with 12 significant digits, LF line endings, and an
// empty last column when no closed form applies.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

// Fixed-format rendering of a double with 12 significant digits.
std::string format_double(double value);

}  // namespace zeronash
