#ifndef OCFL_GRAMMAR_HPP
#define OCFL_GRAMMAR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ocfl/omega_regular.hpp"
#include "ocfl/word.hpp"

namespace ocfl {

struct Nonterminal {
    std::string name;
    auto operator<=>(const Nonterminal&) const = default;
    bool operator==(const Nonterminal&) const = default;
};

using GrammarSymbol = std::variant<Symbol, Nonterminal>;

struct Production {
    std::string lhs;
    std::vector<GrammarSymbol> rhs;
    bool operator==(const Production&) const = default;
};

/// Binary normal form used for tabular parsing.  Nonterminal 0..count-1, the empty word
/// is tracked by `start_nullable` alone.
struct NormalForm {
    int nonterminal_count = 0;
    int start = 0;
    bool start_nullable = false;
    std::map<Symbol, int> terminal_index;
    /// terminal_rules[t] lists A with A -> t.
    std::vector<std::vector<int>> terminal_rules;
    /// by_left[B] lists (C, A) with A -> B C.
    std::vector<std::vector<std::pair<int, int>>> by_left;
};

/// Context-free grammar over an explicit terminal alphabet.  Nonterminals are the left-hand
/// sides plus every nonterminal named on a right-hand side.  The normal form is built at
/// construction; copies share it.
class Grammar {
  public:
    Grammar(std::string start, std::vector<Production> productions, Alphabet terminals = {});

    const std::string& start() const { return start_; }
    const std::vector<Production>& productions() const { return productions_; }
    const Alphabet& terminals() const { return terminals_; }
    /// In order of first appearance, start first.
    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    const NormalForm& normal_form() const { return *normal_form_; }
    std::shared_ptr<const NormalForm> shared_normal_form() const { return normal_form_; }

  private:
    std::string start_;
    std::vector<Production> productions_;
    Alphabet terminals_;
    std::vector<std::string> nonterminals_;
    std::shared_ptr<const NormalForm> normal_form_;
};

/// Cocke-Younger-Kasami table grown one letter at a time; push/pop reuse the columns of the
/// shared prefix, which makes exhaustive sweeps in lexicographic order cheap.
class CykParser {
  public:
    explicit CykParser(const Grammar& g);

    void push(const Symbol& s);
    void pop();
    std::size_t size() const { return columns_.size(); }
    bool accepts() const;

  private:
    using Bits = std::vector<std::uint64_t>;
    std::shared_ptr<const NormalForm> nf_;
    std::size_t words_;
    // columns_[j][i] = nonterminals deriving letters i..j (inclusive).
    std::vector<std::vector<Bits>> columns_;
};

bool cfg_member(const Grammar& g, std::span<const Symbol> x);

/// L = {a S e S, eps}: the finite words over X_A + {e} that erase to the empty word.
Grammar build_L3(const Alphabet& base, const Symbol& eraser);

/// L = L^B + L^C + L^D + L^E + L^(B,C) + L^(C,D) + L^(D,E) over X_A plus the coding letters.
Grammar build_L_guards(const Alphabet& base, const Symbol& a, const Symbol& b);
/// Direct scanner for the same language.
bool in_L_direct(std::span<const Symbol> x, const Symbol& a = Symbol::base("a"),
                 const Symbol& b = Symbol::base("b"));

/// {w}.
Grammar singleton_grammar(std::span<const Symbol> w, Alphabet terminals = {});
/// Single letters of `letters`.
Grammar letters_grammar(const Alphabet& letters);
/// letters^*.
Grammar star_grammar(const Alphabet& letters);

/// Replaces each terminal by the language of its grammar.  Throws when a terminal used by
/// `g` has no entry.
Grammar substitute(const Grammar& g, const std::map<Symbol, Grammar>& sub);
Grammar concat(const Grammar& g1, const Grammar& g2);
Grammar union_of(const Grammar& g1, const Grammar& g2);
/// Triple construction over the normal form; the DFA must cover the grammar's terminals.
Grammar intersect_dfa(const Grammar& g, const Dfa& d);

/// Drops unproductive and unreachable nonterminals.
Grammar trim(const Grammar& g);
/// Prefixes every nonterminal name.
Grammar rename(const Grammar& g, const std::string& prefix);
/// Does L(g) hold a nonempty word.
bool has_nonempty_word(const Grammar& g);

/// Token of a grammar symbol.
std::string to_string(const GrammarSymbol& s);

}  // namespace ocfl

#endif  // OCFL_GRAMMAR_HPP
