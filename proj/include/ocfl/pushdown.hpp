#ifndef OCFL_PUSHDOWN_HPP
#define OCFL_PUSHDOWN_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ocfl/grammar.hpp"
#include "ocfl/omega_regular.hpp"
#include "ocfl/word.hpp"

namespace ocfl {

/// One Muller table entry in interval form: the state set T is accepted iff
/// required <= T <= required + optional.  An explicit set S is {S, {}}.
struct MullerEntry {
    std::vector<int> required;
    std::vector<int> optional;
    bool operator==(const MullerEntry&) const = default;
};

/// (from, input or lambda, popped symbol) -> (to, pushed word).  The pushed word is written
/// top first.
struct PdaRule {
    int from;
    std::optional<Symbol> input;
    int pop;
    int to;
    std::vector<int> push;
    bool operator==(const PdaRule&) const = default;
};

enum class Acceptance { Buchi, Muller };

/// Pushdown automaton on omega-words with Buchi or Muller acceptance.  Runs must be complete:
/// reading lambda forever from some point on is not a run on the word.
class PushdownAutomaton {
  public:
    static PushdownAutomaton buchi(std::vector<std::string> states, Alphabet inputs,
                                   std::vector<std::string> stack, int initial, int bottom,
                                   std::vector<PdaRule> rules, std::vector<int> finals);
    static PushdownAutomaton muller(std::vector<std::string> states, Alphabet inputs,
                                    std::vector<std::string> stack, int initial, int bottom,
                                    std::vector<PdaRule> rules, std::vector<MullerEntry> table);

    Acceptance acceptance() const { return acceptance_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    int stack_count() const { return static_cast<int>(stack_.size()); }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& stack_symbols() const { return stack_; }
    const Alphabet& inputs() const { return inputs_; }
    int initial() const { return initial_; }
    int bottom() const { return bottom_; }
    const std::vector<PdaRule>& rules() const { return rules_; }
    /// Buchi only.
    bool is_final(int q) const { return finals_.at(q); }
    std::vector<int> finals() const;
    /// Muller only.
    const std::vector<MullerEntry>& table() const { return table_; }

    /// Rule indices leaving q.
    const std::vector<int>& rules_from(int q) const { return by_state_[q]; }

  private:
    PushdownAutomaton() = default;
    void validate();

    Acceptance acceptance_ = Acceptance::Buchi;
    std::vector<std::string> states_;
    Alphabet inputs_;
    std::vector<std::string> stack_;
    int initial_ = 0;
    int bottom_ = 0;
    std::vector<PdaRule> rules_;
    std::vector<bool> finals_;
    std::vector<MullerEntry> table_;
    std::vector<std::vector<int>> by_state_;
};

/// Incremental construction by name.  Names are interned on first use.
class PdaBuilder {
  public:
    int state(const std::string& name);
    int stack(const std::string& name);
    void input(const Symbol& s) { inputs_.insert(s); }
    void rule(int from, std::optional<Symbol> in, int pop, int to, std::vector<int> push);
    void final_state(int q) { finals_.push_back(q); }
    void muller_entry(MullerEntry e) { table_.push_back(std::move(e)); }
    void initial(int q) { initial_ = q; }
    void bottom(int z) { bottom_ = z; }
    bool has_state(const std::string& name) const { return state_ids_.contains(name); }

    PushdownAutomaton build_buchi() const;
    PushdownAutomaton build_muller() const;

  private:
    std::vector<std::string> states_, stack_;
    std::unordered_map<std::string, int> state_ids_, stack_ids_;
    Alphabet inputs_;
    std::vector<PdaRule> rules_;
    std::vector<int> finals_;
    std::vector<MullerEntry> table_;
    int initial_ = 0, bottom_ = 0;
};

/// Finite union of U_i . V_i^omega.
struct OmegaKC {
    std::vector<std::pair<Grammar, Grammar>> pairs;
    Alphabet alphabet() const;
};

/// Input-free pushdown system with Buchi control states.
struct BuchiPds {
    struct Rule {
        int from;
        int pop;
        int to;
        std::vector<int> push;
    };
    int state_count = 0;
    int stack_count = 0;
    int initial = 0;
    int bottom = 0;
    std::vector<bool> finals;
    std::vector<Rule> rules;
};

/// U_i . V_i^omega: top-down parser for U_i, then forever top-down parsers for V_i words,
/// passing a final boundary state between them.  Components whose V_i has no nonempty word
/// are dropped and reported through `warnings`.
PushdownAutomaton okc_to_bpda(const OmegaKC& okc, std::vector<std::string>* warnings = nullptr);

/// Guesses a table entry, then tracks which required states were seen since the last reset.
PushdownAutomaton muller_to_buchi_pda(const PushdownAutomaton& m);

/// Control = automaton state x lasso position x progress flag (0 waiting for a final state,
/// 1 waiting for an input letter, 2 both seen).  Final = flag 2, so accepting runs read the
/// whole word.
BuchiPds product_with_lasso(const PushdownAutomaton& buchi, const LassoWord& w);

/// Repeated reachability: summaries of what each reachable head can pop, then a head graph
/// whose cycles through a final edge are exactly the accepting runs.
bool buchi_pds_nonempty(const BuchiPds& s);

bool bpda_member(const PushdownAutomaton& p, const LassoWord& w);

PushdownAutomaton bpda_union(const PushdownAutomaton& p1, const PushdownAutomaton& p2);
PushdownAutomaton bpda_intersect_buchi(const PushdownAutomaton& p, const BuchiFA& r);

/// Finite automata viewed as pushdown automata that never touch the stack.
PushdownAutomaton pda_from_buchi(const BuchiFA& a);
PushdownAutomaton pda_from_muller(const MullerFA& a);

}  // namespace ocfl

#endif  // OCFL_PUSHDOWN_HPP
