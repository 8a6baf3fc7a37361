// Text format for game definitions.
//
//   game <name>
//   players <n>
//   types <player>: <label> ...      one line per player, in player order
//   actions <player>: <label> ...
//   prior uniform                    or one line per type profile:
//   prior <t1> <t2> [<t3>] = <p/q>
//   allow <t1> <t2> [<t3>] : <a,b[,c]> ...
//
// "#" starts a comment; blank lines are ignored.  Serialization emits the
// directives in the order above with type profiles in lexicographic order,
// and is byte-stable: parse(serialize(g)) == g and serializing twice gives
// identical bytes.

#pragma once

#include "zeronash/game.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zeronash {

// Parse failure with 1-based location.  line == 0 marks a document-level
// defect (such as a missing type profile) that no single line causes.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(format(line, column, message)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    static std::string format(int line, int column, const std::string& message) {
        if (line == 0) return "parse error: " + message;
        return "parse error at line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + message;
    }

    int line_;
    int column_;
};

// Parses a full game document.  Throws ParseError on syntax or semantic
// defects; the returned game always satisfies BayesianGame::validate().
BayesianGame parse_game(const std::string& text);

// Reads and parses a game file.  Throws std::runtime_error when the file
// cannot be read, ParseError on bad content.
BayesianGame load_game_file(const std::string& path);

// Canonical serialization of a game.
std::string serialize_game(const BayesianGame& game);

}  // namespace zeronash
