#include "zeronash/cli.hpp"

#include "zeronash/classical.hpp"
#include "zeronash/format.hpp"
#include "zeronash/game.hpp"
#include "zeronash/noise.hpp"
#include "zeronash/quantum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace zeronash::cli {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string tp_text(const BayesianGame& game, const TypeProfile& tp) {
    return "(" + join(game.type_profile_labels(tp), ", ") + ")";
}

std::string ap_text(const BayesianGame& game, const ActionProfile& ap) {
    return join(game.action_profile_labels(ap), ",");
}

// "A: x1->1 x2->2 | B: y1->1 y2->1"
std::string profile_text(const BayesianGame& game, const DeterministicProfile& profile) {
    std::string out;
    for (int p = 0; p < game.player_count(); ++p) {
        if (p > 0) out += " | ";
        out += game.players[p] + ":";
        for (size_t t = 0; t < profile.response[p].size(); ++t) {
            out += " " + game.type_labels[p][t] + "->" +
                   game.action_labels[p][profile.response[p][t]];
        }
    }
    return out;
}

json tp_json(const BayesianGame& game, const TypeProfile& tp) {
    return json(game.type_profile_labels(tp));
}

json ap_json(const BayesianGame& game, const ActionProfile& ap) {
    return json(game.action_profile_labels(ap));
}

json profile_json(const BayesianGame& game, const DeterministicProfile& profile) {
    json out = json::object();
    for (int p = 0; p < game.player_count(); ++p) {
        json responses = json::object();
        for (size_t t = 0; t < profile.response[p].size(); ++t) {
            responses[game.type_labels[p][t]] =
                game.action_labels[p][profile.response[p][t]];
        }
        out[game.players[p]] = responses;
    }
    return out;
}

json model_json(const BayesianGame& game, const LhvModel& model) {
    json support = json::array();
    for (const DeterministicProfile& p : model.support) {
        support.push_back(profile_json(game, p));
    }
    json weights = json::array();
    for (const Rational& w : model.weights) weights.push_back(to_string(w));
    return json{{"support", support}, {"weights", weights}};
}

json game_json(const BayesianGame& game) {
    json players = json::array();
    for (int p = 0; p < game.player_count(); ++p) {
        players.push_back(json{{"name", game.players[p]},
                               {"types", game.type_labels[p]},
                               {"actions", game.action_labels[p]}});
    }
    json prior = json::array();
    for (const TypeProfile& tp : game.type_profiles()) {
        prior.push_back(json{{"type_profile", tp_json(game, tp)},
                             {"value", to_string(game.prior.at(tp))}});
    }
    json allowed = json::array();
    for (const TypeProfile& tp : game.type_profiles()) {
        json cell = json::array();
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            cell.push_back(ap_json(game, ap));
        }
        allowed.push_back(
            json{{"type_profile", tp_json(game, tp)}, {"actions", cell}});
    }
    return json{{"name", game.name},
                {"players", players},
                {"uniform_prior", game.uniform_prior},
                {"prior", prior},
                {"allowed", allowed}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// Options gathered from the command line.
struct Invocation {
    bool as_json = false;

    std::string game_name;
    std::string game_file;

    bool strong = false;
    std::string prior_override;

    std::string type_profile;

    std::string strategy;
    double gamma = std::numbers::pi / 3;
    double delta = std::numbers::pi / 3;
    double eta = 0.0;
    double kappa = 0.0;
    std::string hardy_mode = "solved";
    double tol = kLeakTol;

    int gamma_steps = 0;
    int delta_steps = 0;
    std::string out_path;

    std::string grid;
};

BayesianGame resolve_game(const Invocation& inv, bool allow_file) {
    if (!inv.game_file.empty()) {
        if (!allow_file) {
            throw std::invalid_argument("this subcommand accepts only built-in game names");
        }
        if (!inv.game_name.empty()) {
            throw std::invalid_argument("give either a game name or --game-file, not both");
        }
        return load_game_file(inv.game_file);
    }
    if (inv.game_name.empty()) {
        throw std::invalid_argument("missing game name" +
                                    std::string(allow_file ? " (or --game-file)" : ""));
    }
    return registry_get(inv.game_name);
}

// Built-in strategy lookup; an empty request falls back to the game's
// natural strategy.
QuantumStrategy resolve_strategy(const Invocation& inv, const BayesianGame& game) {
    std::string name = inv.strategy;
    if (name.empty()) {
        if (game.name == "G5") name = "magic-square";
        else if (game.name == "G6") name = "ghz";
        else if (game.name == "G7" || game.name == "G7_appendix") name = "hardy";
        else {
            throw std::invalid_argument("no default strategy for game " + game.name +
                                        "; pass --strategy");
        }
    }
    if (name == "magic-square") return build_magic_square_strategy();
    if (name == "ghz") return build_ghz_strategy();
    if (name == "hardy") {
        HardyParams params;
        params.gamma = inv.gamma;
        params.delta = inv.delta;
        params.eta = inv.eta;
        params.kappa = inv.kappa;
        if (inv.hardy_mode == "solved") {
            params.mode = HardyMode::Solved;
        } else if (inv.hardy_mode == "literal-x") {
            params.mode = HardyMode::LiteralX;
        } else {
            throw std::invalid_argument("unknown hardy mode \"" + inv.hardy_mode +
                                        "\"; use solved or literal-x");
        }
        return build_hardy_strategy(params);
    }
    throw std::invalid_argument("unknown strategy \"" + name +
                                "\"; available: magic-square, ghz, hardy");
}

int cmd_games_list(const Invocation& inv, std::ostream& out) {
    if (inv.as_json) {
        json games = json::array();
        for (const std::string& name : registry_names()) {
            const BayesianGame g = registry_get(name);
            json types = json::array();
            json actions = json::array();
            for (int p = 0; p < g.player_count(); ++p) {
                types.push_back(g.type_labels[p].size());
                actions.push_back(g.action_labels[p].size());
            }
            games.push_back(json{{"name", g.name},
                                 {"players", g.player_count()},
                                 {"types_per_player", types},
                                 {"actions_per_player", actions}});
        }
        emit(out, json{{"command", "games list"}, {"games", games}});
        return kExitPass;
    }
    for (const std::string& name : registry_names()) {
        const BayesianGame g = registry_get(name);
        std::string types, actions;
        for (int p = 0; p < g.player_count(); ++p) {
            if (p > 0) {
                types += "x";
                actions += "x";
            }
            types += std::to_string(g.type_labels[p].size());
            actions += std::to_string(g.action_labels[p].size());
        }
        out << g.name << ": " << g.player_count() << " players, " << types
            << " types, " << actions << " actions\n";
    }
    return kExitPass;
}

int cmd_games_show(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, true);
    if (inv.as_json) {
        emit(out, json{{"command", "games show"}, {"game", game_json(game)}});
    } else {
        out << serialize_game(game);
    }
    return kExitPass;
}

int cmd_games_check(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, true);
    if (!inv.prior_override.empty() && inv.prior_override != "uniform") {
        throw std::invalid_argument("--prior supports only \"uniform\"");
    }
    const char* note =
        "the verdict is prior-independent: zero-error means staying inside the "
        "allowed set at every type profile";
    const std::string mode = inv.strong ? "strong-zero-error" : "zero-error";
    const FeasibilityReport report = inv.strong ? solve_strong_zero_error(game)
                                                : solve_zero_error(game);
    if (inv.as_json) {
        json doc{{"command", "games check"},
                 {"game", game.name},
                 {"mode", mode},
                 {"feasible", report.feasible},
                 {"profiles_enumerated", report.profiles_enumerated},
                 {"zero_error_profiles", report.zero_error_count},
                 {"note", note}};
        doc["witness"] =
            report.witness ? profile_json(game, *report.witness) : json(nullptr);
        doc["mixture_witness"] = report.mixture_witness
                                     ? model_json(game, *report.mixture_witness)
                                     : json(nullptr);
        json certificates = json::array();
        for (const ProfileCertificate& c : report.certificates) {
            certificates.push_back(
                json{{"profile", profile_json(game, c.profile)},
                     {"failing_type_profile", tp_json(game, c.failing_type_profile)}});
        }
        doc["certificates"] = certificates;
        json uncovered = json::array();
        for (const auto& [tp, ap] : report.uncovered) {
            uncovered.push_back(json{{"type_profile", tp_json(game, tp)},
                                     {"action_profile", ap_json(game, ap)}});
        }
        doc["uncovered"] = uncovered;
        json empty = json::array();
        for (const TypeProfile& tp : report.empty_allowed) {
            empty.push_back(tp_json(game, tp));
        }
        doc["empty_allowed"] = empty;
        emit(out, doc);
        return report.feasible ? kExitPass : kExitFail;
    }

    out << "game " << game.name << ": " << mode << " coordination is "
        << (report.feasible ? "feasible" : "infeasible") << "\n";
    if (!report.empty_allowed.empty()) {
        out << "empty allowed set at " << tp_text(game, report.empty_allowed.front())
            << "; no strategy of any kind can coordinate there\n";
        return kExitFail;
    }
    out << "profiles enumerated: " << report.profiles_enumerated << "\n";
    out << "zero-error profiles: " << report.zero_error_count << "\n";
    if (report.witness) {
        out << "witness: " << profile_text(game, *report.witness) << "\n";
    }
    if (inv.strong) {
        if (report.mixture_witness) {
            const LhvModel& model = *report.mixture_witness;
            out << "mixture witness over " << model.support.size()
                << " profiles:\n";
            for (size_t i = 0; i < model.support.size(); ++i) {
                out << "  weight " << to_string(model.weights[i]) << ": "
                    << profile_text(game, model.support[i]) << "\n";
            }
        }
        for (const auto& [tp, ap] : report.uncovered) {
            out << "uncovered: allowed outcome " << ap_text(game, ap) << " at "
                << tp_text(game, tp) << " is reachable by no zero-error profile\n";
        }
    }
    if (!report.feasible && !report.certificates.empty()) {
        const ProfileCertificate& first = report.certificates.front();
        out << "first counterexample: " << profile_text(game, first.profile)
            << " fails at " << tp_text(game, first.failing_type_profile) << "\n";
    }
    out << "note: " << note << "\n";
    return report.feasible ? kExitPass : kExitFail;
}

int cmd_nash(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, true);
    std::vector<std::string> labels;
    {
        std::string current;
        for (char c : inv.type_profile) {
            if (c == ',') {
                labels.push_back(current);
                current.clear();
            } else {
                current += c;
            }
        }
        labels.push_back(current);
    }
    if (static_cast<int>(labels.size()) != game.player_count()) {
        throw std::invalid_argument("--type-profile needs " +
                                    std::to_string(game.player_count()) +
                                    " comma-separated labels for game " + game.name);
    }
    TypeProfile tp;
    for (int p = 0; p < game.player_count(); ++p) {
        const int idx = game.type_index(p, labels[p]);
        if (idx < 0) {
            throw std::invalid_argument("unknown type \"" + labels[p] +
                                        "\" for player " + game.players[p]);
        }
        tp.push_back(idx);
    }
    const std::set<ActionProfile> equilibria =
        compute_pure_nash(indicator_stage_game(game, tp));
    if (inv.as_json) {
        json list = json::array();
        for (const ActionProfile& ap : equilibria) list.push_back(ap_json(game, ap));
        emit(out, json{{"command", "nash"},
                       {"game", game.name},
                       {"type_profile", tp_json(game, tp)},
                       {"equilibria", list}});
        return kExitPass;
    }
    out << "game " << game.name << ", type profile " << tp_text(game, tp) << ": "
        << equilibria.size() << " pure equilibria\n";
    for (const ActionProfile& ap : equilibria) {
        out << "  " << ap_text(game, ap) << "\n";
    }
    return kExitPass;
}

int cmd_quantum_verify(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, false);
    const QuantumStrategy strategy = resolve_strategy(inv, game);
    const VerificationReport report =
        inv.strong ? verify_strong_zero_error(strategy, game, inv.tol)
                   : verify_zero_error(strategy, game, inv.tol);
    if (inv.as_json) {
        json doc{{"command", "quantum verify"},
                 {"game", game.name},
                 {"strategy", strategy.name},
                 {"strong", inv.strong},
                 {"tolerance", report.tolerance},
                 {"pass", report.pass},
                 {"max_leak", report.max_leak},
                 {"max_leak_type_profile", tp_json(game, report.max_leak_type_profile)}};
        json leaks = json::array();
        for (const TypeProfileLeak& leak : report.leaks) {
            leaks.push_back(json{{"type_profile", tp_json(game, leak.type_profile)},
                                 {"leak", leak.leak}});
        }
        doc["leaks"] = leaks;
        if (report.min_allowed_probability) {
            doc["min_allowed_probability"] = *report.min_allowed_probability;
            doc["min_type_profile"] = tp_json(game, report.min_type_profile);
            doc["min_action_profile"] = ap_json(game, report.min_action_profile);
            doc["positivity_threshold"] = report.positivity_threshold;
        }
        emit(out, doc);
        return report.pass ? kExitPass : kExitFail;
    }
    out << "game " << game.name << ", strategy " << strategy.name << ": "
        << (inv.strong ? "strong zero-error" : "zero-error") << " verification "
        << (report.pass ? "PASS" : "FAIL") << "\n";
    out << "max leak: " << format_double(report.max_leak) << " at "
        << tp_text(game, report.max_leak_type_profile) << " (tolerance "
        << format_double(report.tolerance) << ")\n";
    if (report.min_allowed_probability) {
        out << "min allowed probability: "
            << format_double(*report.min_allowed_probability) << " for "
            << ap_text(game, report.min_action_profile) << " at "
            << tp_text(game, report.min_type_profile) << " (threshold "
            << format_double(report.positivity_threshold) << ")\n";
    }
    return report.pass ? kExitPass : kExitFail;
}

json scan_point_json(const HardyScanPoint& p) {
    return json{{"gamma", p.gamma},
                {"delta", p.delta},
                {"witness_probability", p.witness_probability},
                {"schmidt_min", p.schmidt_min},
                {"max_leak", p.max_leak},
                {"min_allowed_probability", p.min_allowed_probability},
                {"pass", p.pass}};
}

void write_scan_csv(const HardyScanResult& result, std::ostream& out) {
    out << "gamma,delta,witness_probability,schmidt_min,max_leak,"
           "min_allowed_probability,pass\n";
    for (const HardyScanPoint& p : result.points) {
        out << format_double(p.gamma) << "," << format_double(p.delta) << ","
            << format_double(p.witness_probability) << ","
            << format_double(p.schmidt_min) << "," << format_double(p.max_leak) << ","
            << format_double(p.min_allowed_probability) << ","
            << (p.pass ? "true" : "false") << "\n";
    }
}

int cmd_hardy_scan(const Invocation& inv, std::ostream& out) {
    const HardyScanResult result = hardy_scan(inv.gamma_steps, inv.delta_steps);
    if (!inv.out_path.empty()) {
        std::ofstream file(inv.out_path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write CSV to " + inv.out_path);
        }
        write_scan_csv(result, file);
    }
    size_t passing = 0;
    for (const HardyScanPoint& p : result.points) {
        if (p.pass) ++passing;
    }
    if (inv.as_json) {
        json doc{{"command", "hardy scan"},
                 {"gamma_steps", inv.gamma_steps},
                 {"delta_steps", inv.delta_steps},
                 {"points_passing", passing},
                 {"best_witness", scan_point_json(result.best_witness)},
                 {"most_entangled", scan_point_json(result.most_entangled)}};
        json points = json::array();
        for (const HardyScanPoint& p : result.points) {
            points.push_back(scan_point_json(p));
        }
        doc["points"] = points;
        if (!inv.out_path.empty()) doc["csv_path"] = inv.out_path;
        emit(out, doc);
        return kExitPass;
    }
    out << "hardy scan: " << inv.gamma_steps << "x" << inv.delta_steps
        << " interior grid\n";
    const HardyScanPoint& bw = result.best_witness;
    out << "best witness: P(1,1 | x1,y1) = " << format_double(bw.witness_probability)
        << " at gamma=" << format_double(bw.gamma)
        << ", delta=" << format_double(bw.delta) << " ("
        << (bw.pass ? "pass" : "FAIL") << ")\n";
    const HardyScanPoint& me = result.most_entangled;
    out << "closest to maximal entanglement: schmidt_min = "
        << format_double(me.schmidt_min) << " at gamma=" << format_double(me.gamma)
        << ", delta=" << format_double(me.delta) << " ("
        << (me.pass ? "pass" : "FAIL") << ", min allowed probability "
        << format_double(me.min_allowed_probability) << ")\n";
    out << "points passing the strengthened check: " << passing << "/"
        << result.points.size() << "\n";
    if (!inv.out_path.empty()) {
        out << "wrote CSV to " << inv.out_path << "\n";
    }
    return kExitPass;
}

int cmd_noise_sweep(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, false);
    const QuantumStrategy strategy = resolve_strategy(inv, game);
    int steps_s = 0, steps_m = 0;
    {
        const auto x = inv.grid.find('x');
        bool ok = x != std::string::npos;
        if (ok) {
            try {
                steps_s = std::stoi(inv.grid.substr(0, x));
                steps_m = std::stoi(inv.grid.substr(x + 1));
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || steps_s < 2 || steps_m < 2) {
            throw std::invalid_argument("--grid expects NxM with N, M >= 2");
        }
    }
    const SweepResult result = advantage_sweep(game, strategy, steps_s, steps_m);
    if (!inv.out_path.empty()) {
        std::ofstream file(inv.out_path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write CSV to " + inv.out_path);
        }
        write_sweep_csv(result, file);
    }
    size_t advantage_count = 0;
    double max_delta = 0.0;
    bool any_delta = false;
    for (const SweepCell& cell : result.cells) {
        if (cell.advantage) ++advantage_count;
        if (cell.closed_form_delta) {
            any_delta = true;
            max_delta = std::max(max_delta, *cell.closed_form_delta);
        }
    }
    if (inv.as_json) {
        json doc{{"command", "noise sweep"},
                 {"game", game.name},
                 {"strategy", strategy.name},
                 {"grid", json::array({steps_s, steps_m})},
                 {"classical_floor", to_string(result.classical_floor)},
                 {"advantage_cells", advantage_count}};
        json cells = json::array();
        for (const SweepCell& cell : result.cells) {
            json c{{"eps_s", cell.eps_s},
                   {"eps_m", cell.eps_m},
                   {"quantum_error", cell.quantum_error},
                   {"advantage", cell.advantage}};
            if (cell.closed_form_delta) c["closed_form_delta"] = *cell.closed_form_delta;
            cells.push_back(c);
        }
        doc["cells"] = cells;
        if (any_delta) doc["max_closed_form_delta"] = max_delta;
        if (!inv.out_path.empty()) doc["csv_path"] = inv.out_path;
        emit(out, doc);
        return kExitPass;
    }
    out << "noise sweep on " << game.name << " with strategy " << strategy.name
        << ": " << steps_s << "x" << steps_m << " grid\n";
    out << "classical floor: " << to_string(result.classical_floor) << " (~"
        << format_double(to_double(result.classical_floor)) << ")\n";
    out << "cells with quantum advantage: " << advantage_count << "/"
        << result.cells.size() << "\n";
    if (any_delta) {
        out << "max |numeric - closed form|: " << format_double(max_delta) << "\n";
    }
    if (!inv.out_path.empty()) {
        out << "wrote CSV to " << inv.out_path << "\n";
    }
    return kExitPass;
}

int cmd_noise_floor(const Invocation& inv, std::ostream& out) {
    const BayesianGame game = resolve_game(inv, false);
    const MinErrorResult result = min_error(game);
    if (inv.as_json) {
        emit(out, json{{"command", "noise floor"},
                       {"game", game.name},
                       {"min_error", to_string(result.value)},
                       {"min_error_decimal", to_double(result.value)},
                       {"profiles_enumerated", result.profiles_enumerated},
                       {"witness", profile_json(game, result.witness)}});
        return kExitPass;
    }
    out << "game " << game.name << ": classical floor " << to_string(result.value)
        << " (~" << format_double(to_double(result.value)) << ")\n";
    out << "achieved by: " << profile_text(game, result.witness) << "\n";
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"zero-error coordination analyzer for finite Bayesian games"};
    app.set_help_all_flag("--help-all", "print help for all subcommands");
    Invocation inv;
    app.add_flag("--json", inv.as_json, "emit a machine-readable JSON report");

    CLI::App* games = app.add_subcommand("games", "inspect and check games");
    games->require_subcommand(1);
    CLI::App* games_list = games->add_subcommand("list", "list built-in games");
    CLI::App* games_show =
        games->add_subcommand("show", "print a game definition");
    games_show->add_option("name", inv.game_name, "built-in game name");
    games_show->add_option("--game-file", inv.game_file, "game definition file");
    CLI::App* games_check =
        games->add_subcommand("check", "decide classical coordination feasibility");
    games_check->add_option("name", inv.game_name, "built-in game name");
    games_check->add_option("--game-file", inv.game_file, "game definition file");
    bool classical = false;
    games_check->add_flag("--classical", classical,
                          "exhaustive search over deterministic profiles");
    games_check->add_flag("--strong", inv.strong,
                          "also require every allowed outcome to be reachable");
    games_check->add_option("--prior", inv.prior_override,
                            "prior selector (only \"uniform\" is supported)");

    CLI::App* nash =
        app.add_subcommand("nash", "pure Nash equilibria of one stage game");
    nash->add_option("name", inv.game_name, "built-in game name");
    nash->add_option("--game-file", inv.game_file, "game definition file");
    nash->add_option("--type-profile", inv.type_profile,
                     "comma-separated type labels, one per player")
        ->required();

    CLI::App* quantum = app.add_subcommand("quantum", "entangled strategies");
    quantum->require_subcommand(1);
    CLI::App* quantum_verify =
        quantum->add_subcommand("verify", "verify a strategy against a game");
    quantum_verify->add_option("name", inv.game_name, "built-in game name")
        ->required();
    quantum_verify->add_option("--strategy", inv.strategy,
                               "magic-square, ghz or hardy (default: by game)");
    quantum_verify->add_option("--gamma", inv.gamma, "hardy state angle for A");
    quantum_verify->add_option("--delta", inv.delta, "hardy state angle for B");
    quantum_verify->add_option("--eta", inv.eta, "hardy basis phase for A");
    quantum_verify->add_option("--kappa", inv.kappa, "hardy basis phase for B");
    quantum_verify->add_option("--mode", inv.hardy_mode,
                               "hardy first-type basis: solved or literal-x");
    quantum_verify->add_flag("--strong", inv.strong,
                             "require positive probability on allowed outcomes");
    quantum_verify->add_option("--tol", inv.tol, "leak tolerance");

    CLI::App* hardy = app.add_subcommand("hardy", "hardy-state parameter scans");
    hardy->require_subcommand(1);
    CLI::App* hardy_scan_cmd =
        hardy->add_subcommand("scan", "scan the interior gamma/delta grid");
    hardy_scan_cmd->add_option("--gamma-steps", inv.gamma_steps, "grid points for gamma")
        ->required();
    hardy_scan_cmd->add_option("--delta-steps", inv.delta_steps, "grid points for delta")
        ->required();
    hardy_scan_cmd->add_option("--out", inv.out_path, "write per-point CSV here");

    CLI::App* noise = app.add_subcommand("noise", "depolarizing-noise analysis");
    noise->require_subcommand(1);
    CLI::App* noise_sweep =
        noise->add_subcommand("sweep", "map the quantum-advantage region");
    noise_sweep->add_option("name", inv.game_name, "built-in game name")->required();
    noise_sweep->add_option("--grid", inv.grid, "NxM grid over [0,1]^2")->required();
    noise_sweep->add_option("--strategy", inv.strategy,
                            "magic-square, ghz or hardy (default: by game)");
    noise_sweep->add_option("--out", inv.out_path, "write per-cell CSV here");
    CLI::App* noise_floor =
        noise->add_subcommand("floor", "exact classical error floor");
    noise_floor->add_option("name", inv.game_name, "built-in game name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (games_list->parsed()) return cmd_games_list(inv, out);
        if (games_show->parsed()) return cmd_games_show(inv, out);
        if (games_check->parsed()) {
            if (!classical) {
                err << "error: games check requires --classical\n";
                return kExitUsage;
            }
            return cmd_games_check(inv, out);
        }
        if (nash->parsed()) return cmd_nash(inv, out);
        if (quantum_verify->parsed()) return cmd_quantum_verify(inv, out);
        if (hardy_scan_cmd->parsed()) return cmd_hardy_scan(inv, out);
        if (noise_sweep->parsed()) return cmd_noise_sweep(inv, out);
        if (noise_floor->parsed()) return cmd_noise_floor(inv, out);
        err << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace zeronash::cli
