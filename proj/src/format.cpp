#include "zeronash/format.hpp"

#include <fstream>
#include <sstream>

namespace zeronash {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based start column
};

// Splits one line into whitespace-separated tokens, dropping "#" comments.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == ',' ||
            c == '#' || c == '=') {
            return false;
        }
    }
    return true;
}

// Splits "a,b,c" on commas, keeping empty parts so arity errors surface.
std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    BayesianGame run() {
        std::istringstream stream(text_);
        std::string line;
        int line_no = 0;
        while (std::getline(stream, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const std::vector<Token> tokens = tokenize(line);
            if (tokens.empty()) continue;
            directive(tokens, line_no);
        }
        finish();
        return game_;
    }

  private:
    [[noreturn]] void fail(int line, int column, const std::string& message) const {
        throw ParseError(line, column, message);
    }

    void directive(const std::vector<Token>& tokens, int line_no) {
        const Token& head = tokens.front();
        if (head.text == "game") {
            parse_game_line(tokens, line_no);
        } else if (head.text == "players") {
            parse_players(tokens, line_no);
        } else if (head.text == "types") {
            parse_label_list(tokens, line_no, game_.type_labels, types_seen_, "types");
        } else if (head.text == "actions") {
            parse_label_list(tokens, line_no, game_.action_labels, actions_seen_,
                             "actions");
        } else if (head.text == "prior") {
            parse_prior(tokens, line_no);
        } else if (head.text == "allow") {
            parse_allow(tokens, line_no);
        } else {
            fail(line_no, head.column, "unknown directive \"" + head.text + "\"");
        }
    }

    void parse_game_line(const std::vector<Token>& tokens, int line_no) {
        if (!game_.name.empty()) fail(line_no, tokens[0].column, "duplicate game directive");
        if (tokens.size() != 2) fail(line_no, tokens[0].column, "expected: game <name>");
        if (!valid_label(tokens[1].text)) {
            fail(line_no, tokens[1].column, "invalid game name");
        }
        game_.name = tokens[1].text;
        have_name_ = true;
    }

    void parse_players(const std::vector<Token>& tokens, int line_no) {
        require_header(line_no, tokens[0].column);
        if (player_count_ != 0) fail(line_no, tokens[0].column, "duplicate players directive");
        if (tokens.size() != 2) fail(line_no, tokens[0].column, "expected: players <n>");
        int n = 0;
        try {
            n = std::stoi(tokens[1].text);
        } catch (const std::exception&) {
            fail(line_no, tokens[1].column, "player count is not a number");
        }
        if (n < 2 || n > 3) {
            fail(line_no, tokens[1].column, "player count must be 2 or 3");
        }
        player_count_ = n;
        game_.players.clear();
        game_.type_labels.clear();
        game_.action_labels.clear();
    }

    // Shared shape of "types P: a b c" and "actions P: a b c".  Player lines
    // must appear in order; the first types line fixes the player order.
    void parse_label_list(const std::vector<Token>& tokens, int line_no,
                          std::vector<std::vector<std::string>>& target,
                          int& seen, const std::string& what) {
        require_header(line_no, tokens[0].column);
        if (player_count_ == 0) {
            fail(line_no, tokens[0].column, what + " before players directive");
        }
        if (seen >= player_count_) {
            fail(line_no, tokens[0].column, "too many " + what + " lines");
        }
        if (tokens.size() < 2 || tokens[1].text.back() != ':') {
            fail(line_no, tokens[0].column,
                 "expected: " + what + " <player>: <label> ...");
        }
        const std::string player = tokens[1].text.substr(0, tokens[1].text.size() - 1);
        if (!valid_label(player)) fail(line_no, tokens[1].column, "invalid player label");
        if (what == "types") {
            game_.players.push_back(player);
        } else {
            if (seen >= static_cast<int>(game_.players.size()) ||
                game_.players[seen] != player) {
                fail(line_no, tokens[1].column,
                     "actions lines must repeat the player order of the types lines");
            }
        }
        std::vector<std::string> labels;
        for (size_t i = 2; i < tokens.size(); ++i) {
            if (!valid_label(tokens[i].text)) {
                fail(line_no, tokens[i].column, "invalid label \"" + tokens[i].text + "\"");
            }
            for (const std::string& prev : labels) {
                if (prev == tokens[i].text) {
                    fail(line_no, tokens[i].column,
                         "duplicate label \"" + tokens[i].text + "\"");
                }
            }
            labels.push_back(tokens[i].text);
        }
        if (labels.empty()) fail(line_no, tokens[0].column, what + " list is empty");
        target.push_back(std::move(labels));
        ++seen;
    }

    // Resolves leading type labels tokens[from .. from+n) to a type profile.
    TypeProfile resolve_type_profile(const std::vector<Token>& tokens, size_t from,
                                     int line_no) {
        TypeProfile tp;
        for (int p = 0; p < player_count_; ++p) {
            const Token& tok = tokens[from + p];
            const int idx = game_.type_index(p, tok.text);
            if (idx < 0) {
                fail(line_no, tok.column,
                     "unknown type \"" + tok.text + "\" for player " + game_.players[p]);
            }
            tp.push_back(idx);
        }
        return tp;
    }

    void parse_prior(const std::vector<Token>& tokens, int line_no) {
        require_structure(line_no, tokens[0].column);
        if (tokens.size() == 2 && tokens[1].text == "uniform") {
            if (prior_mode_ != PriorMode::Unset) {
                fail(line_no, tokens[0].column, "duplicate prior directive");
            }
            prior_mode_ = PriorMode::Uniform;
            return;
        }
        if (prior_mode_ == PriorMode::Uniform) {
            fail(line_no, tokens[0].column,
                 "explicit prior after \"prior uniform\"");
        }
        prior_mode_ = PriorMode::Explicit;
        last_prior_line_ = line_no;
        // prior <t1> ... <tn> = <p/q>
        if (static_cast<int>(tokens.size()) != player_count_ + 3 ||
            tokens[player_count_ + 1].text != "=") {
            fail(line_no, tokens[0].column,
                 "expected: prior <types> = <p/q> or prior uniform");
        }
        const TypeProfile tp = resolve_type_profile(tokens, 1, line_no);
        if (game_.prior.count(tp)) {
            fail(line_no, tokens[1].column, "duplicate prior for type profile " +
                                                join(game_.type_profile_labels(tp), " "));
        }
        const Token& value = tokens[player_count_ + 2];
        Rational r;
        try {
            r = parse_rational(value.text);
        } catch (const std::exception&) {
            fail(line_no, value.column, "invalid rational \"" + value.text + "\"");
        }
        if (r < Rational(0)) fail(line_no, value.column, "negative prior");
        game_.prior[tp] = r;
    }

    void parse_allow(const std::vector<Token>& tokens, int line_no) {
        require_structure(line_no, tokens[0].column);
        // allow <t1> ... <tn> : <a,b> ...
        if (static_cast<int>(tokens.size()) < player_count_ + 2 ||
            tokens[player_count_ + 1].text != ":") {
            fail(line_no, tokens[0].column, "expected: allow <types> : <joint actions>");
        }
        const TypeProfile tp = resolve_type_profile(tokens, 1, line_no);
        if (game_.allowed.count(tp)) {
            fail(line_no, tokens[1].column, "duplicate allow for type profile " +
                                                join(game_.type_profile_labels(tp), " "));
        }
        std::set<ActionProfile> cell;
        for (size_t i = player_count_ + 2; i < tokens.size(); ++i) {
            const std::vector<std::string> parts = split_commas(tokens[i].text);
            if (static_cast<int>(parts.size()) != player_count_) {
                fail(line_no, tokens[i].column,
                     "joint action \"" + tokens[i].text + "\" has " +
                         std::to_string(parts.size()) + " actions, expected " +
                         std::to_string(player_count_));
            }
            ActionProfile ap;
            for (int p = 0; p < player_count_; ++p) {
                const int idx = game_.action_index(p, parts[p]);
                if (idx < 0) {
                    fail(line_no, tokens[i].column,
                         "unknown action \"" + parts[p] + "\" for player " +
                             game_.players[p]);
                }
                ap.push_back(idx);
            }
            if (cell.count(ap)) {
                fail(line_no, tokens[i].column,
                     "duplicate joint action \"" + tokens[i].text + "\"");
            }
            cell.insert(ap);
        }
        game_.allowed[tp] = std::move(cell);
    }

    void require_header(int line, int column) const {
        if (!have_name_) fail(line, column, "first directive must be: game <name>");
    }

    // Structure lines (prior/allow) need the full header parsed first.
    void require_structure(int line, int column) const {
        require_header(line, column);
        if (player_count_ == 0) fail(line, column, "missing players directive");
        if (types_seen_ < player_count_) {
            fail(line, column, "missing types lines (one per player)");
        }
        if (actions_seen_ < player_count_) {
            fail(line, column, "missing actions lines (one per player)");
        }
    }

    void finish() {
        if (!have_name_) fail(0, 0, "empty document, expected: game <name>");
        if (player_count_ == 0) fail(0, 0, "missing players directive");
        if (types_seen_ < player_count_ || actions_seen_ < player_count_) {
            fail(0, 0, "missing types or actions lines");
        }
        if (prior_mode_ == PriorMode::Unset) fail(0, 0, "missing prior directive");
        if (prior_mode_ == PriorMode::Uniform) {
            game_.uniform_prior = true;
            game_.prior = uniform_prior_for(game_);
        } else {
            game_.uniform_prior = false;
            Rational total(0);
            for (const TypeProfile& tp : game_.type_profiles()) {
                const auto it = game_.prior.find(tp);
                if (it == game_.prior.end()) {
                    fail(0, 0, "missing prior for type profile " +
                                   join(game_.type_profile_labels(tp), " "));
                }
                total += it->second;
            }
            if (total != Rational(1)) {
                fail(last_prior_line_, 1,
                     "prior sums to " + to_string(total) + ", expected 1");
            }
        }
        for (const TypeProfile& tp : game_.type_profiles()) {
            if (!game_.allowed.count(tp)) {
                fail(0, 0, "missing type profile " +
                               join(game_.type_profile_labels(tp), " "));
            }
        }
        game_.validate();
    }

    enum class PriorMode { Unset, Uniform, Explicit };

    const std::string& text_;
    BayesianGame game_;
    bool have_name_ = false;
    int player_count_ = 0;
    int types_seen_ = 0;
    int actions_seen_ = 0;
    int last_prior_line_ = 0;
    PriorMode prior_mode_ = PriorMode::Unset;
};

}  // namespace

BayesianGame parse_game(const std::string& text) {
    return Parser(text).run();
}

BayesianGame load_game_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read game file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_game(buffer.str());
}

std::string serialize_game(const BayesianGame& game) {
    std::ostringstream out;
    out << "game " << game.name << "\n";
    out << "players " << game.player_count() << "\n";
    for (int p = 0; p < game.player_count(); ++p) {
        out << "types " << game.players[p] << ":";
        for (const std::string& t : game.type_labels[p]) out << " " << t;
        out << "\n";
    }
    for (int p = 0; p < game.player_count(); ++p) {
        out << "actions " << game.players[p] << ":";
        for (const std::string& a : game.action_labels[p]) out << " " << a;
        out << "\n";
    }
    if (game.uniform_prior) {
        out << "prior uniform\n";
    } else {
        for (const TypeProfile& tp : game.type_profiles()) {
            out << "prior " << join(game.type_profile_labels(tp), " ") << " = "
                << to_string(game.prior.at(tp)) << "\n";
        }
    }
    for (const TypeProfile& tp : game.type_profiles()) {
        out << "allow " << join(game.type_profile_labels(tp), " ") << " :";
        for (const ActionProfile& ap : game.allowed.at(tp)) {
            out << " " << join(game.action_profile_labels(ap), ",");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace zeronash
