// Dense complex linear algebra for finite-dimensional multipartite systems.
//
// Composite indices are big-endian in party order: for local dimensions
// (d_1, ..., d_n) the basis state (i_1, ..., i_n) sits at flat index
// i_1 * (d_2 * ... * d_n) + ... + i_n, so party 1 is the most significant
// digit.  kron() follows the same convention: kron(A, B) acts on the
// composite space with A on the most significant factor.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace zeronash {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Structural tolerance for hermiticity, positivity, completeness and the
// realness/range check on computed probabilities.
inline constexpr double kStructuralTol = 1e-10;

// Tolerance on the squared norm of a state vector.
inline constexpr double kNormTol = 1e-12;

// Tolerance on the total mass of a computed outcome distribution.
inline constexpr double kDistributionSumTol = 1e-9;

// Pure state of an n-party system with fixed local dimensions.
// Invariant: amplitudes.size() == product of local_dims, squared norm 1
// within kNormTol.  Both are checked by validate().
struct StateVector {
    std::vector<int> local_dims;
    ComplexVector amplitudes;

    int dimension() const;
    void validate() const;  // throws std::invalid_argument on violation
};

// One local measurement: a list of effect operators on a d-dimensional
// space.  Effects are indexed by outcome; soundness (hermiticity, positivity,
// completeness) is checked by validate_measurement, not by construction.
struct Measurement {
    int dim = 0;
    std::vector<ComplexMatrix> effects;
};

struct MeasurementValidation {
    double hermiticity_defect = 0.0;   // max entrywise |E - adjoint(E)|
    double negativity = 0.0;           // max over effects of max(0, -lambda_min)
    double completeness_defect = 0.0;  // max entrywise |sum E - I|
    bool pass = false;
};

// Kronecker product, left factor most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product of a party-ordered effect list.
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

// Born probability of one joint outcome: <psi| E_1 (x) ... (x) E_n |psi>.
// Effects are matched against the state's local dimensions; a mismatch
// throws std::invalid_argument naming the party index.  The result must be
// real and inside [0, 1] within kStructuralTol (violations throw), and is
// clamped to [0, 1] afterwards.
double joint_probability(const StateVector& state,
                         const std::vector<ComplexMatrix>& effects);

// Same for a mixed state: Tr[rho E_1 (x) ... (x) E_n], with explicit local
// dimensions for the shape check.
double joint_probability(const ComplexMatrix& density,
                         const std::vector<int>& local_dims,
                         const std::vector<ComplexMatrix>& effects);

// Checks hermiticity, positive semidefiniteness and completeness of a
// measurement, each within kStructuralTol.
MeasurementValidation validate_measurement(const Measurement& m);

// Outer product |v><v| as a rank-one effect.
ComplexMatrix projector(const ComplexVector& v);

}  // namespace zeronash
