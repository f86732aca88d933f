#ifndef OCFL_OMEGA_REGULAR_HPP
#define OCFL_OMEGA_REGULAR_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ocfl/word.hpp"

namespace ocfl {

struct FaTransition {
    int from;
    Symbol symbol;
    int to;
};

/// Nondeterministic Buchi automaton.  Missing transitions kill the run.
class BuchiFA {
  public:
    BuchiFA(std::vector<std::string> states, Alphabet alphabet, int initial, std::vector<int> finals,
            std::vector<FaTransition> transitions);

    int state_count() const { return static_cast<int>(states_.size()); }
    const std::string& state_name(int q) const { return states_.at(q); }
    const std::vector<std::string>& state_names() const { return states_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int initial() const { return initial_; }
    bool is_final(int q) const { return final_.at(q); }
    const std::vector<FaTransition>& transitions() const { return transitions_; }

    /// Index of `s` in the alphabet, or -1.
    int symbol_index(const Symbol& s) const;
    const std::vector<int>& successors(int q, int symbol_index) const {
        return delta_[q][symbol_index];
    }
    bool is_deterministic() const;

  private:
    std::vector<std::string> states_;
    Alphabet alphabet_;
    std::map<Symbol, int> symbol_index_;
    int initial_;
    std::vector<bool> final_;
    std::vector<FaTransition> transitions_;
    std::vector<std::vector<std::vector<int>>> delta_;
};

/// Deterministic, total Muller automaton with an explicit table of state sets.
class MullerFA {
  public:
    MullerFA(std::vector<std::string> states, Alphabet alphabet, int initial,
             std::vector<FaTransition> transitions, std::vector<std::vector<int>> table);

    int state_count() const { return static_cast<int>(states_.size()); }
    const std::string& state_name(int q) const { return states_.at(q); }
    const std::vector<std::string>& state_names() const { return states_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int initial() const { return initial_; }
    /// Sorted, duplicate-free members.
    const std::vector<std::vector<int>>& table() const { return table_; }
    int symbol_index(const Symbol& s) const;
    int successor(int q, int symbol_index) const { return delta_[q][symbol_index]; }
    int successor(int q, const Symbol& s) const;
    std::vector<FaTransition> transitions() const;
    bool table_contains(std::vector<int> set) const;

  private:
    std::vector<std::string> states_;
    Alphabet alphabet_;
    std::map<Symbol, int> symbol_index_;
    int initial_;
    std::vector<std::vector<int>> delta_;
    std::vector<std::vector<int>> table_;
};

/// Deterministic total finite automaton on finite words.
class Dfa {
  public:
    Dfa(int states, Alphabet alphabet, int initial, std::vector<int> accepting,
        std::vector<FaTransition> transitions);

    int state_count() const { return static_cast<int>(delta_.size()); }
    const Alphabet& alphabet() const { return alphabet_; }
    int initial() const { return initial_; }
    bool is_accepting(int q) const { return accepting_.at(q); }
    int successor(int q, const Symbol& s) const;
    bool accepts(std::span<const Symbol> w) const;

  private:
    Alphabet alphabet_;
    std::map<Symbol, int> symbol_index_;
    int initial_;
    std::vector<bool> accepting_;
    std::vector<std::vector<int>> delta_;
};

/// Some run visits a final state infinitely often.  Throws on letters outside the alphabet.
bool buchi_member(const BuchiFA& aut, const LassoWord& w);
/// The states repeated by the unique run form a table member.
bool muller_member(const MullerFA& aut, const LassoWord& w);

/// Words over {0,1} (embedded in `alphabet`) with infinitely many 1s.  States q0, q1
/// (final, reached on 1).  Other letters of `alphabet` have no transitions.
BuchiFA build_B2(const Alphabet& alphabet = parse_alphabet("0 1"));
/// Deterministic Muller form of B2: q0 (last letter 0), q1 (last letter 1), and a sink for
/// letters outside {0,1}; table {{q1}, {q0,q1}}.
MullerFA build_B2_muller(const Alphabet& alphabet = parse_alphabet("0 1"));

/// R = a^+ b (X_A + alpha B^+ C^+ D^+ E^+ beta)^omega as a deterministic Buchi automaton.
/// The final state is the "between items" state, so acceptance is R'^delta with
/// R' = a^+ b (X_A + alpha B^+ C^+ D^+ E^+ beta)^+.
BuchiFA build_R(const Alphabet& base, const Symbol& a, const Symbol& b);

/// The same language with a Muller table: every state set holding a final state.
MullerFA buchi_to_muller(const BuchiFA& deterministic_aut);

}  // namespace ocfl

#endif  // OCFL_OMEGA_REGULAR_HPP
