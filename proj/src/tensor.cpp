#include "zeronash/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zeronash {

namespace {

long long product_of(const std::vector<int>& dims) {
    long long p = 1;
    for (int d : dims) p *= d;
    return p;
}

void check_effect_shapes(const std::vector<int>& local_dims,
                         const std::vector<ComplexMatrix>& effects) {
    if (effects.size() != local_dims.size()) {
        throw std::invalid_argument(
            "joint_probability: " + std::to_string(effects.size()) +
            " effects for " + std::to_string(local_dims.size()) + " parties");
    }
    for (size_t i = 0; i < effects.size(); ++i) {
        if (effects[i].rows() != effects[i].cols() ||
            effects[i].rows() != local_dims[i]) {
            throw std::invalid_argument(
                "joint_probability: effect for party " + std::to_string(i) +
                " is " + std::to_string(effects[i].rows()) + "x" +
                std::to_string(effects[i].cols()) + ", expected " +
                std::to_string(local_dims[i]) + "x" +
                std::to_string(local_dims[i]));
        }
    }
}

// Enforces realness and the [0, 1] range within kStructuralTol, then clamps.
double checked_probability(const Complex& p) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
        throw std::invalid_argument("joint_probability: non-finite result");
    }
    if (std::abs(p.imag()) > kStructuralTol) {
        throw std::invalid_argument(
            "joint_probability: imaginary part " + std::to_string(p.imag()) +
            " exceeds tolerance");
    }
    const double re = p.real();
    if (re < -kStructuralTol || re > 1.0 + kStructuralTol) {
        throw std::invalid_argument(
            "joint_probability: value " + std::to_string(re) +
            " outside [0, 1] beyond tolerance");
    }
    return std::min(1.0, std::max(0.0, re));
}

}  // namespace

int StateVector::dimension() const {
    return static_cast<int>(product_of(local_dims));
}

void StateVector::validate() const {
    if (local_dims.empty()) {
        throw std::invalid_argument("StateVector: no parties");
    }
    for (size_t i = 0; i < local_dims.size(); ++i) {
        if (local_dims[i] < 2) {
            throw std::invalid_argument("StateVector: party " +
                                        std::to_string(i) + " has dimension " +
                                        std::to_string(local_dims[i]));
        }
    }
    if (amplitudes.size() != dimension()) {
        throw std::invalid_argument(
            "StateVector: " + std::to_string(amplitudes.size()) +
            " amplitudes for dimension " + std::to_string(dimension()));
    }
    const double norm2 = amplitudes.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: squared norm " +
                                    std::to_string(norm2) + " is not 1");
    }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) {
        throw std::invalid_argument("kron_all: empty factor list");
    }
    ComplexMatrix out = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i]);
    }
    return out;
}

double joint_probability(const StateVector& state,
                         const std::vector<ComplexMatrix>& effects) {
    check_effect_shapes(state.local_dims, effects);
    const ComplexMatrix joint = kron_all(effects);
    const Complex p = state.amplitudes.dot(joint * state.amplitudes);
    return checked_probability(p);
}

double joint_probability(const ComplexMatrix& density,
                         const std::vector<int>& local_dims,
                         const std::vector<ComplexMatrix>& effects) {
    check_effect_shapes(local_dims, effects);
    const long long dim = product_of(local_dims);
    if (density.rows() != dim || density.cols() != dim) {
        throw std::invalid_argument(
            "joint_probability: density is " + std::to_string(density.rows()) +
            "x" + std::to_string(density.cols()) + ", expected " +
            std::to_string(dim) + "x" + std::to_string(dim));
    }
    const ComplexMatrix joint = kron_all(effects);
    const Complex p = (density * joint).trace();
    return checked_probability(p);
}

MeasurementValidation validate_measurement(const Measurement& m) {
    MeasurementValidation v;
    if (m.dim < 1 || m.effects.empty()) return v;
    for (const ComplexMatrix& e : m.effects) {
        if (e.rows() != m.dim || e.cols() != m.dim) return v;
    }
    ComplexMatrix sum = ComplexMatrix::Zero(m.dim, m.dim);
    for (const ComplexMatrix& e : m.effects) {
        v.hermiticity_defect = std::max(
            v.hermiticity_defect,
            (e - e.adjoint().eval()).cwiseAbs().maxCoeff());
        // Eigenvalues of the hermitian part; for a sound effect this is the
        // effect itself up to the defect measured above.
        const ComplexMatrix herm = 0.5 * (e + e.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
        const double min_eig = solver.eigenvalues().minCoeff();
        v.negativity = std::max(v.negativity, std::max(0.0, -min_eig));
        sum += e;
    }
    v.completeness_defect =
        (sum - ComplexMatrix::Identity(m.dim, m.dim)).cwiseAbs().maxCoeff();
    v.pass = v.hermiticity_defect <= kStructuralTol &&
             v.negativity <= kStructuralTol &&
             v.completeness_defect <= kStructuralTol;
    return v;
}

ComplexMatrix projector(const ComplexVector& v) {
    return v * v.adjoint();
}

}  // namespace zeronash
