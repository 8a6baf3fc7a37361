#include "zeronash/noise.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace zeronash {

void NoiseParams::validate() const {
    if (!std::isfinite(eps_state) || eps_state < 0.0 || eps_state > 1.0) {
        throw std::invalid_argument("noise: eps_state must lie in [0, 1]");
    }
    if (!std::isfinite(eps_measurement) || eps_measurement < 0.0 ||
        eps_measurement > 1.0) {
        throw std::invalid_argument("noise: eps_measurement must lie in [0, 1]");
    }
}

ComplexMatrix depolarize_state(const StateVector& state, double eps) {
    state.validate();
    return depolarize_state(projector(state.amplitudes), eps);
}

ComplexMatrix depolarize_state(const ComplexMatrix& density, double eps) {
    if (density.rows() != density.cols()) {
        throw std::invalid_argument("depolarize_state: density is not square");
    }
    const double dim = static_cast<double>(density.rows());
    return (1.0 - eps) * density +
           (eps / dim) * ComplexMatrix::Identity(density.rows(), density.cols());
}

Measurement depolarize_measurements(const Measurement& m, double eps) {
    Measurement out;
    out.dim = m.dim;
    const double share = eps / static_cast<double>(m.effects.size());
    for (const ComplexMatrix& e : m.effects) {
        out.effects.push_back((1.0 - eps) * e +
                              share * ComplexMatrix::Identity(m.dim, m.dim));
    }
    return out;
}

QuantumStrategy apply_noise(const QuantumStrategy& strategy, const NoiseParams& noise) {
    noise.validate();
    strategy.validate();
    QuantumStrategy noisy = strategy;
    if (std::holds_alternative<StateVector>(strategy.state)) {
        noisy.state =
            depolarize_state(std::get<StateVector>(strategy.state), noise.eps_state);
    } else {
        noisy.state =
            depolarize_state(std::get<ComplexMatrix>(strategy.state), noise.eps_state);
    }
    for (PlayerStrategy& player : noisy.players) {
        for (Measurement& m : player.measurements) {
            m = depolarize_measurements(m, noise.eps_measurement);
        }
    }
    return noisy;
}

double noisy_error_probability(const BayesianGame& game,
                               const QuantumStrategy& strategy,
                               const NoiseParams& noise) {
    const QuantumStrategy noisy = apply_noise(strategy, noise);
    check_strategy_shape(noisy, game);
    double error = 0.0;
    for (const TypeProfile& tp : game.type_profiles()) {
        std::set<std::vector<std::string>> allowed_labels;
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            allowed_labels.insert(game.action_profile_labels(ap));
        }
        const ActionDistribution dist = born_action_distribution(noisy, tp);
        double leak = 0.0;
        for (const auto& [labels, p] : dist.probabilities) {
            if (!allowed_labels.count(labels)) leak += p;
        }
        error += to_double(game.prior.at(tp)) * leak;
    }
    return error;
}

double closed_form_g5_error(const NoiseParams& noise) {
    noise.validate();
    const double es = noise.eps_state;
    const double em = noise.eps_measurement;
    return 0.5 * (es * (em - 1.0) * (em - 1.0) - (em - 2.0) * em);
}

SweepResult advantage_sweep(const BayesianGame& game, const QuantumStrategy& strategy,
                            int steps_s, int steps_m) {
    if (steps_s < 2 || steps_m < 2) {
        throw std::invalid_argument("advantage_sweep: each axis needs at least 2 steps");
    }
    SweepResult result;
    result.steps_s = steps_s;
    result.steps_m = steps_m;
    result.classical_floor = min_error(game).value;
    const double floor = to_double(result.classical_floor);
    const bool has_closed_form = game.name == "G5";
    for (int i = 0; i < steps_s; ++i) {
        const double eps_s = static_cast<double>(i) / (steps_s - 1);
        for (int j = 0; j < steps_m; ++j) {
            const double eps_m = static_cast<double>(j) / (steps_m - 1);
            SweepCell cell;
            cell.eps_s = eps_s;
            cell.eps_m = eps_m;
            NoiseParams noise;
            noise.eps_state = eps_s;
            noise.eps_measurement = eps_m;
            cell.quantum_error = noisy_error_probability(game, strategy, noise);
            cell.advantage = cell.quantum_error < floor;
            if (has_closed_form) {
                cell.closed_form_delta =
                    std::abs(cell.quantum_error - closed_form_g5_error(noise));
            }
            result.cells.push_back(cell);
        }
    }
    return result;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    out << "eps_s,eps_m,quantum_error,classical_floor,advantage,closed_form_delta\n";
    const double floor = to_double(result.classical_floor);
    for (const SweepCell& cell : result.cells) {
        out << format_double(cell.eps_s) << "," << format_double(cell.eps_m) << ","
            << format_double(cell.quantum_error) << "," << format_double(floor) << ","
            << (cell.advantage ? "true" : "false") << ",";
        if (cell.closed_form_delta) out << format_double(*cell.closed_form_delta);
        out << "\n";
    }
}

}  // namespace zeronash
