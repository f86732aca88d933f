#ifndef OCFL_FORMATS_HPP
#define OCFL_FORMATS_HPP

// Line-oriented text formats for automata, pushdown automata, grammars and omega-Kleene
// closures, plus Graphviz output.  Tokens are separated by whitespace; `#` starts a comment.
// docs/formats.md describes each format; data/ holds one example of each.

#include <string>
#include <string_view>
#include <variant>

#include "ocfl/omega_regular.hpp"
#include "ocfl/pushdown.hpp"

namespace ocfl {

/// Malformed text.  what() reads "<file>:<line>: at '<token>': <message>".
class ParseError : public Error {
  public:
    ParseError(std::string file, std::size_t line, std::string token, const std::string& message);
    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }
    const std::string& token() const { return token_; }

  private:
    std::string file_;
    std::size_t line_;
    std::string token_;
};

using FiniteAutomaton = std::variant<BuchiFA, MullerFA>;

/// Header `buchi` or `muller`, then `states`, `alphabet`, `initial`, `final` (Buchi) or one
/// `accept` line per table set (Muller), and `trans FROM LETTER TO` lines.
FiniteAutomaton parse_automaton(std::string_view text, const std::string& file = "<input>");
std::string format_automaton(const BuchiFA& a);
std::string format_automaton(const MullerFA& a);

/// Header `pda buchi` or `pda muller`, then `states`, `alphabet`, `stack`, `initial`, `bottom`,
/// `final` or `accept REQUIRED... [; OPTIONAL...]`, and `rule FROM IN POP -> TO PUSH...` with
/// `eps` for no input or an empty push.  The pushed word is written top first.
PushdownAutomaton parse_pda(std::string_view text, const std::string& file = "<input>");
std::string format_pda(const PushdownAutomaton& p);

/// `<A> -> sym ... | ...` lines, `eps` for the empty right-hand side, optional `%start <A>` and
/// `%terminals ...`.  Without %start the first left-hand side is the start symbol.
Grammar parse_grammar(std::string_view text, const std::string& file = "<input>");
std::string format_grammar(const Grammar& g);

/// Header `okc`, then for each component a `prefix` line and a `period` line, each followed by
/// a grammar.
OmegaKC parse_okc(std::string_view text, const std::string& file = "<input>");
std::string format_okc(const OmegaKC& okc);

/// One lasso word `PREFIX | PERIOD`; errors name `source`, `line` and the offending token.
LassoWord parse_lasso_line(std::string_view text, const std::string& source = "<word>", std::size_t line = 1);
/// One lasso word per non-comment line.
std::vector<LassoWord> parse_word_list(std::string_view text, const std::string& file = "<input>");

std::string to_dot(const BuchiFA& a);
std::string to_dot(const MullerFA& a);
std::string to_dot(const PushdownAutomaton& p);
/// Nonterminal dependency graph.
std::string to_dot(const Grammar& g);

}  // namespace ocfl

#endif  // OCFL_FORMATS_HPP
