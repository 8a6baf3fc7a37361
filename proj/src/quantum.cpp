#include "zeronash/quantum.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeronash {

namespace {

constexpr double kDegenerateNorm = 1e-9;

ComplexMatrix pauli_i() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// Joint eigenprojectors of two commuting +-1 observables, outcome order
// (+,+), (+,-), (-,+), (-,-).
Measurement joint_sign_measurement(const ComplexMatrix& m, const ComplexMatrix& mp) {
    const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    Measurement out;
    out.dim = static_cast<int>(m.rows());
    for (const double s : {1.0, -1.0}) {
        for (const double sp : {1.0, -1.0}) {
            out.effects.push_back(0.25 * (id + s * m + sp * mp + (s * sp) * (m * mp)));
        }
    }
    return out;
}

// Basis measurement from orthonormal vectors, outcome order as given.
Measurement basis_measurement(const std::vector<ComplexVector>& vectors) {
    Measurement out;
    out.dim = static_cast<int>(vectors.front().size());
    for (const ComplexVector& v : vectors) out.effects.push_back(projector(v));
    return out;
}

std::vector<std::string> numbered_actions(int count) {
    std::vector<std::string> labels;
    for (int i = 1; i <= count; ++i) labels.push_back(std::to_string(i));
    return labels;
}

// Normalizes and fixes the global phase so that the first component with
// magnitude above kDegenerateNorm is real positive.
ComplexVector canonical_unit(const ComplexVector& v) {
    const double norm = v.norm();
    if (norm < kDegenerateNorm) {
        throw std::invalid_argument("canonical_unit: vector norm " +
                                    std::to_string(norm) + " is degenerate");
    }
    ComplexVector unit = v / norm;
    for (Eigen::Index i = 0; i < unit.size(); ++i) {
        const double mag = std::abs(unit[i]);
        if (mag > kDegenerateNorm) {
            unit *= std::conj(unit[i]) / mag;
            break;
        }
    }
    return unit;
}

// Unit vector orthogonal to w in C^2 with canonical phase.
ComplexVector orthogonal_complement(const ComplexVector& w) {
    ComplexVector v(2);
    v << -std::conj(w[1]), std::conj(w[0]);
    return canonical_unit(v);
}

double state_probability(const QuantumStrategy& strategy,
                         const std::vector<ComplexMatrix>& effects) {
    if (std::holds_alternative<StateVector>(strategy.state)) {
        return joint_probability(std::get<StateVector>(strategy.state), effects);
    }
    return joint_probability(std::get<ComplexMatrix>(strategy.state),
                             strategy.local_dims, effects);
}

}  // namespace

void QuantumStrategy::validate() const {
    if (players.empty()) throw std::invalid_argument("strategy has no players");
    if (local_dims.size() != players.size()) {
        throw std::invalid_argument("strategy local_dims/player count mismatch");
    }
    long long dim = 1;
    for (int d : local_dims) dim *= d;
    if (std::holds_alternative<StateVector>(state)) {
        const StateVector& sv = std::get<StateVector>(state);
        sv.validate();
        if (sv.local_dims != local_dims) {
            throw std::invalid_argument("strategy state dimensions mismatch");
        }
    } else {
        const ComplexMatrix& rho = std::get<ComplexMatrix>(state);
        if (rho.rows() != dim || rho.cols() != dim) {
            throw std::invalid_argument("strategy density dimension mismatch");
        }
    }
    for (size_t p = 0; p < players.size(); ++p) {
        const PlayerStrategy& ps = players[p];
        if (ps.type_names.size() != ps.measurements.size() ||
            ps.type_names.size() != ps.outcome_actions.size()) {
            throw std::invalid_argument("strategy for player " + ps.player +
                                        " has inconsistent type lists");
        }
        for (size_t t = 0; t < ps.measurements.size(); ++t) {
            const Measurement& m = ps.measurements[t];
            if (m.dim != local_dims[p]) {
                throw std::invalid_argument(
                    "measurement dimension mismatch for player " + ps.player +
                    ", type " + ps.type_names[t]);
            }
            if (m.effects.size() != ps.outcome_actions[t].size()) {
                throw std::invalid_argument(
                    "outcome map size mismatch for player " + ps.player + ", type " +
                    ps.type_names[t]);
            }
        }
    }
}

ActionDistribution born_action_distribution(const QuantumStrategy& strategy,
                                            const TypeProfile& tp) {
    strategy.validate();
    const int n = strategy.player_count();
    if (static_cast<int>(tp.size()) != n) {
        throw std::invalid_argument("born_action_distribution: type profile arity " +
                                    std::to_string(tp.size()) + " for " +
                                    std::to_string(n) + " players");
    }
    std::vector<const Measurement*> measurements(n);
    std::vector<const std::vector<std::string>*> actions(n);
    for (int p = 0; p < n; ++p) {
        const PlayerStrategy& ps = strategy.players[p];
        if (tp[p] < 0 || tp[p] >= static_cast<int>(ps.type_names.size())) {
            throw std::invalid_argument("born_action_distribution: type index " +
                                        std::to_string(tp[p]) +
                                        " out of range for player " + ps.player);
        }
        measurements[p] = &ps.measurements[tp[p]];
        actions[p] = &ps.outcome_actions[tp[p]];
    }

    ActionDistribution dist;
    dist.type_profile = tp;
    std::vector<int> outcome(n, 0);
    double total = 0.0;
    while (true) {
        std::vector<ComplexMatrix> effects;
        std::vector<std::string> labels;
        for (int p = 0; p < n; ++p) {
            effects.push_back(measurements[p]->effects[outcome[p]]);
            labels.push_back((*actions[p])[outcome[p]]);
        }
        const double p = state_probability(strategy, effects);
        dist.probabilities[labels] += p;
        total += p;

        int pos = n - 1;
        while (pos >= 0) {
            if (++outcome[pos] < static_cast<int>(measurements[pos]->effects.size())) {
                break;
            }
            outcome[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (std::abs(total - 1.0) > kDistributionSumTol) {
        throw std::invalid_argument(
            "born_action_distribution: outcome probabilities sum to " +
            std::to_string(total));
    }
    return dist;
}

void check_strategy_shape(const QuantumStrategy& strategy, const BayesianGame& game) {
    strategy.validate();
    if (strategy.player_count() != game.player_count()) {
        throw std::invalid_argument("strategy has " +
                                    std::to_string(strategy.player_count()) +
                                    " players, game " + game.name + " has " +
                                    std::to_string(game.player_count()));
    }
    for (int p = 0; p < game.player_count(); ++p) {
        const PlayerStrategy& ps = strategy.players[p];
        if (ps.type_names != game.type_labels[p]) {
            throw std::invalid_argument("strategy type labels for player " +
                                        game.players[p] + " do not match game " +
                                        game.name);
        }
        for (const auto& per_type : ps.outcome_actions) {
            for (const std::string& action : per_type) {
                if (game.action_index(p, action) < 0) {
                    throw std::invalid_argument("strategy outcome action \"" + action +
                                                "\" is not an action of player " +
                                                game.players[p] + " in game " +
                                                game.name);
                }
            }
        }
    }
}

namespace {

// Shared leak computation; fills everything except the positivity fields.
VerificationReport leak_report(const QuantumStrategy& strategy,
                               const BayesianGame& game, double tol) {
    check_strategy_shape(strategy, game);
    VerificationReport report;
    report.tolerance = tol;
    for (const TypeProfile& tp : game.type_profiles()) {
        std::set<std::vector<std::string>> allowed_labels;
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            allowed_labels.insert(game.action_profile_labels(ap));
        }
        const ActionDistribution dist = born_action_distribution(strategy, tp);
        double leak = 0.0;
        for (const auto& [labels, p] : dist.probabilities) {
            if (!allowed_labels.count(labels)) leak += p;
        }
        report.leaks.push_back({tp, leak});
        if (report.max_leak_type_profile.empty() || leak > report.max_leak) {
            report.max_leak = leak;
            report.max_leak_type_profile = tp;
        }
    }
    report.pass = report.max_leak <= tol;
    return report;
}

}  // namespace

VerificationReport verify_zero_error(const QuantumStrategy& strategy,
                                     const BayesianGame& game, double tol) {
    return leak_report(strategy, game, tol);
}

VerificationReport verify_strong_zero_error(const QuantumStrategy& strategy,
                                            const BayesianGame& game, double tol,
                                            double positivity_threshold) {
    VerificationReport report = leak_report(strategy, game, tol);
    report.positivity_threshold =
        positivity_threshold < 0.0 ? 10.0 * tol : positivity_threshold;
    double min_prob = 2.0;
    for (const TypeProfile& tp : game.type_profiles()) {
        const ActionDistribution dist = born_action_distribution(strategy, tp);
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            const auto labels = game.action_profile_labels(ap);
            const auto it = dist.probabilities.find(labels);
            const double p = it == dist.probabilities.end() ? 0.0 : it->second;
            if (p < min_prob) {
                min_prob = p;
                report.min_type_profile = tp;
                report.min_action_profile = ap;
            }
        }
    }
    report.min_allowed_probability = min_prob;
    report.pass = report.pass && min_prob >= report.positivity_threshold;
    return report;
}

QuantumStrategy build_magic_square_strategy() {
    const ComplexMatrix i2 = pauli_i();
    const ComplexMatrix x = pauli_x();
    const ComplexMatrix z = pauli_z();

    QuantumStrategy s;
    s.name = "magic-square";
    s.local_dims = {4, 4};

    // Two maximally entangled qubit pairs, one qubit of each pair per
    // player: amplitude 1/2 on the four aligned basis states.
    StateVector state;
    state.local_dims = {4, 4};
    state.amplitudes = ComplexVector::Zero(16);
    for (int i = 0; i < 4; ++i) state.amplitudes[4 * i + i] = 0.5;
    state.validate();
    s.state = state;

    PlayerStrategy alice;
    alice.player = "A";
    alice.type_names = {"x1", "x2", "x3"};
    alice.measurements = {
        joint_sign_measurement(kron(z, i2), kron(i2, z)),
        joint_sign_measurement(kron(i2, x), kron(x, i2)),
        joint_sign_measurement(kron(z, x), kron(x, z)),
    };
    alice.outcome_actions.assign(3, numbered_actions(4));

    PlayerStrategy bob;
    bob.player = "B";
    bob.type_names = {"y1", "y2", "y3"};
    bob.measurements = {
        joint_sign_measurement(kron(z, i2), kron(i2, x)),
        joint_sign_measurement(kron(i2, z), kron(x, i2)),
        joint_sign_measurement(kron(z, z), kron(x, x)),
    };
    bob.outcome_actions.assign(3, numbered_actions(4));

    s.players = {alice, bob};
    s.validate();
    return s;
}

QuantumStrategy build_ghz_strategy() {
    QuantumStrategy s;
    s.name = "ghz";
    s.local_dims = {2, 2, 2};

    StateVector state;
    state.local_dims = {2, 2, 2};
    state.amplitudes = ComplexVector::Zero(8);
    state.amplitudes[0] = 1.0 / std::numbers::sqrt2;
    state.amplitudes[7] = 1.0 / std::numbers::sqrt2;
    state.validate();
    s.state = state;

    const ComplexMatrix id = pauli_i();
    const Measurement x_basis{2, {0.5 * (id + pauli_x()), 0.5 * (id - pauli_x())}};
    const Measurement y_basis{2, {0.5 * (id + pauli_y()), 0.5 * (id - pauli_y())}};

    const std::vector<std::string> players = {"A", "B", "C"};
    const std::vector<std::vector<std::string>> types = {
        {"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"}};
    for (int p = 0; p < 3; ++p) {
        PlayerStrategy ps;
        ps.player = players[p];
        ps.type_names = types[p];
        ps.measurements = {x_basis, y_basis};  // first type X, second type Y
        ps.outcome_actions.assign(2, numbered_actions(2));
        s.players.push_back(ps);
    }
    s.validate();
    return s;
}

void HardyParams::validate() const {
    if (!std::isfinite(gamma) || gamma <= 0.0 || gamma >= std::numbers::pi) {
        throw std::invalid_argument(
            "hardy: gamma must lie strictly inside (0, pi); the boundary gives "
            "a product state");
    }
    if (!std::isfinite(delta) || delta <= 0.0 || delta >= std::numbers::pi) {
        throw std::invalid_argument(
            "hardy: delta must lie strictly inside (0, pi); the boundary gives "
            "a product state");
    }
    if (!std::isfinite(eta) || !std::isfinite(kappa)) {
        throw std::invalid_argument("hardy: phases must be finite");
    }
}

namespace {

// Local basis pair {c0, c1} for angle theta and phase phi:
//   c0 = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   c1 = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>
QubitBasis tilted_basis(double theta, double phi) {
    const Complex phase = std::polar(1.0, phi);
    QubitBasis basis;
    basis.first = ComplexVector(2);
    basis.first << std::cos(theta / 2), phase * std::sin(theta / 2);
    basis.second = ComplexVector(2);
    basis.second << std::sin(theta / 2), -phase * std::cos(theta / 2);
    return basis;
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

StateVector build_hardy_state(const HardyParams& params) {
    params.validate();
    const QubitBasis a = tilted_basis(params.gamma, params.eta);
    const QubitBasis b = tilted_basis(params.delta, params.kappa);
    const double tg = std::tan(params.gamma / 2);
    const double td = std::tan(params.delta / 2);

    // No |a0 b0> component: that joint outcome is exactly impossible for
    // the second-type measurements.
    ComplexVector amps = tg * kron_vec(a.first, b.second) +
                         td * kron_vec(a.second, b.first) +
                         kron_vec(a.second, b.second);
    amps /= amps.norm();

    StateVector state;
    state.local_dims = {2, 2};
    state.amplitudes = amps;
    state.validate();
    return state;
}

std::pair<QubitBasis, QubitBasis> solve_hardy_type1_bases(const StateVector& state,
                                                          const QubitBasis& a_basis,
                                                          const QubitBasis& b_basis) {
    state.validate();
    if (state.local_dims != std::vector<int>{2, 2}) {
        throw std::invalid_argument(
            "solve_hardy_type1_bases: state must be two qubits");
    }
    // Partner-conditioned states: w_a = (I (x) <b1|) psi, w_b = (<a1| (x) I) psi.
    ComplexVector w_a(2), w_b(2);
    for (int i = 0; i < 2; ++i) {
        w_a[i] = std::conj(b_basis.second[0]) * state.amplitudes[2 * i] +
                 std::conj(b_basis.second[1]) * state.amplitudes[2 * i + 1];
        w_b[i] = std::conj(a_basis.second[0]) * state.amplitudes[i] +
                 std::conj(a_basis.second[1]) * state.amplitudes[2 + i];
    }
    if (w_a.norm() < kDegenerateNorm || w_b.norm() < kDegenerateNorm) {
        throw std::invalid_argument(
            "solve_hardy_type1_bases: conditioned state is degenerate "
            "(product state or orthogonal basis choice)");
    }
    QubitBasis a_solved, b_solved;
    a_solved.first = orthogonal_complement(w_a);
    a_solved.second = orthogonal_complement(a_solved.first);
    b_solved.first = orthogonal_complement(w_b);
    b_solved.second = orthogonal_complement(b_solved.first);
    return {a_solved, b_solved};
}

QuantumStrategy build_hardy_strategy(const HardyParams& params) {
    params.validate();
    const QubitBasis a = tilted_basis(params.gamma, params.eta);
    const QubitBasis b = tilted_basis(params.delta, params.kappa);
    const StateVector state = build_hardy_state(params);

    QubitBasis a_first, b_first;
    if (params.mode == HardyMode::Solved) {
        std::tie(a_first, b_first) = solve_hardy_type1_bases(state, a, b);
    } else {
        // X eigenbasis, |+> mapped to action 1.
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        a_first.first = ComplexVector(2);
        a_first.first << inv_sqrt2, inv_sqrt2;
        a_first.second = ComplexVector(2);
        a_first.second << inv_sqrt2, -inv_sqrt2;
        b_first = a_first;
    }

    QuantumStrategy s;
    s.name = params.mode == HardyMode::Solved ? "hardy" : "hardy-literal-x";
    s.local_dims = {2, 2};
    s.state = state;

    PlayerStrategy alice;
    alice.player = "A";
    alice.type_names = {"x1", "x2"};
    alice.measurements = {basis_measurement({a_first.first, a_first.second}),
                          basis_measurement({a.first, a.second})};
    alice.outcome_actions.assign(2, numbered_actions(2));

    PlayerStrategy bob;
    bob.player = "B";
    bob.type_names = {"y1", "y2"};
    bob.measurements = {basis_measurement({b_first.first, b_first.second}),
                        basis_measurement({b.first, b.second})};
    bob.outcome_actions.assign(2, numbered_actions(2));

    s.players = {alice, bob};
    s.validate();
    return s;
}

std::vector<double> schmidt_coefficients(const StateVector& state) {
    state.validate();
    if (state.local_dims.size() != 2) {
        throw std::invalid_argument("schmidt_coefficients: state has " +
                                    std::to_string(state.local_dims.size()) +
                                    " parties, need exactly 2");
    }
    const int d1 = state.local_dims[0];
    const int d2 = state.local_dims[1];
    ComplexMatrix m(d1, d2);
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d2; ++j) {
            m(i, j) = state.amplitudes[i * d2 + j];
        }
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    std::vector<double> coefficients;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        coefficients.push_back(svd.singularValues()[i]);
    }
    return coefficients;
}

namespace {

HardyScanPoint evaluate_hardy_point(const BayesianGame& g7, double gamma, double delta,
                                    double leak_tol, double positivity_threshold) {
    HardyParams params;
    params.gamma = gamma;
    params.delta = delta;
    const QuantumStrategy strategy = build_hardy_strategy(params);
    const VerificationReport report =
        verify_strong_zero_error(strategy, g7, leak_tol, positivity_threshold);

    HardyScanPoint point;
    point.gamma = gamma;
    point.delta = delta;
    const ActionDistribution first = born_action_distribution(strategy, {0, 0});
    const auto it = first.probabilities.find({"1", "1"});
    point.witness_probability = it == first.probabilities.end() ? 0.0 : it->second;
    const std::vector<double> schmidt =
        schmidt_coefficients(std::get<StateVector>(strategy.state));
    point.schmidt_min = schmidt.back();
    point.max_leak = report.max_leak;
    point.min_allowed_probability = *report.min_allowed_probability;
    point.pass = report.pass;
    return point;
}

}  // namespace

HardyScanResult hardy_scan(int gamma_steps, int delta_steps, double leak_tol,
                           double positivity_threshold) {
    if (gamma_steps < 1 || delta_steps < 1) {
        throw std::invalid_argument("hardy_scan: step counts must be positive");
    }
    const BayesianGame g7 = registry_get("G7");
    HardyScanResult result;
    const double target = 1.0 / std::numbers::sqrt2;
    for (int i = 1; i <= gamma_steps; ++i) {
        const double gamma = i * std::numbers::pi / (gamma_steps + 1);
        for (int j = 1; j <= delta_steps; ++j) {
            const double delta = j * std::numbers::pi / (delta_steps + 1);
            const HardyScanPoint point =
                evaluate_hardy_point(g7, gamma, delta, leak_tol, positivity_threshold);
            if (result.points.empty() ||
                point.witness_probability > result.best_witness.witness_probability) {
                result.best_witness = point;
            }
            if (result.points.empty() ||
                std::abs(point.schmidt_min - target) <
                    std::abs(result.most_entangled.schmidt_min - target)) {
                result.most_entangled = point;
            }
            result.points.push_back(point);
        }
    }
    return result;
}

HardyScanPoint refine_hardy_max(const HardyScanPoint& start, int rounds,
                                double leak_tol, double positivity_threshold) {
    const BayesianGame g7 = registry_get("G7");
    HardyScanPoint best = start;
    double half_width = 0.5;
    constexpr int kLocalSteps = 10;  // 21 points per axis and round
    const double margin = 1e-6;
    for (int round = 0; round < rounds; ++round) {
        HardyScanPoint round_best = best;
        for (int i = -kLocalSteps; i <= kLocalSteps; ++i) {
            const double gamma =
                std::clamp(best.gamma + i * half_width / kLocalSteps, margin,
                           std::numbers::pi - margin);
            for (int j = -kLocalSteps; j <= kLocalSteps; ++j) {
                const double delta =
                    std::clamp(best.delta + j * half_width / kLocalSteps, margin,
                               std::numbers::pi - margin);
                const HardyScanPoint point = evaluate_hardy_point(
                    g7, gamma, delta, leak_tol, positivity_threshold);
                if (point.witness_probability > round_best.witness_probability) {
                    round_best = point;
                }
            }
        }
        best = round_best;
        half_width /= kLocalSteps;
    }
    return best;
}

}  // namespace zeronash
