#ifndef OCFL_ERASURE_HPP
#define OCFL_ERASURE_HPP

#include <variant>

#include "ocfl/omega_regular.hpp"
#include "ocfl/word.hpp"

namespace ocfl {

/// Result of evaluating erasers as back-spaces.
class EraseOutcome {
  public:
    struct Undefined {
        bool operator==(const Undefined&) const = default;
    };

    static EraseOutcome undefined() { return EraseOutcome(Undefined{}); }
    static EraseOutcome finite(Word w) { return EraseOutcome(std::move(w)); }
    /// The payload is normalized.
    static EraseOutcome infinite(const LassoWord& w) { return EraseOutcome(normalize(w)); }

    bool is_undefined() const { return std::holds_alternative<Undefined>(value_); }
    bool is_finite() const { return std::holds_alternative<Word>(value_); }
    bool is_infinite() const { return std::holds_alternative<LassoWord>(value_); }
    const Word& finite_word() const { return std::get<Word>(value_); }
    const LassoWord& infinite_word() const { return std::get<LassoWord>(value_); }

    bool operator==(const EraseOutcome&) const = default;

  private:
    explicit EraseOutcome(std::variant<Undefined, Word, LassoWord> v) : value_(std::move(v)) {}
    std::variant<Undefined, Word, LassoWord> value_;
};

/// `undefined`, `finite: <word>` or `infinite: <lasso>`.
std::string to_string(const EraseOutcome& r);

/// Left-to-right back-space evaluation.  Every symbol other than `eraser` is an ordinary
/// letter, including erasers of other ranks.
EraseOutcome erase_finite(std::span<const Symbol> x, const Symbol& eraser);

/// Limit of erase_finite over the prefixes of x.  Undefined if any prefix is.
///
/// One period acting on a stack of height >= d is "pop d, push s" where d is the period's
/// own deficit and s its own survivors.  With h0 the height after the prefix:
///   h0 < d, or |s| < d            -> some stage pops an empty stack
///   |s| > d                       -> base . (s[0..|s|-d])^omega
///   |s| = d                       -> longest common prefix of the stacks met in one period
EraseOutcome erase_lasso(const LassoWord& x, const Symbol& eraser);

/// Applies erase_lasso with ~n, then ~(n-1), ..., ~1, stopping at the first non-infinite
/// outcome.  Throws if x holds an eraser of rank > n.
EraseOutcome erase_nested(const LassoWord& x, int n);

/// x in A^{~.n}: erase_nested(x, n) is an omega-word accepted by A.
bool member_A_approx_n(const LassoWord& x, const BuchiFA& a, int n);
bool member_A_approx_n(const LassoWord& x, const MullerFA& a, int n);

}  // namespace ocfl

#endif  // OCFL_ERASURE_HPP
