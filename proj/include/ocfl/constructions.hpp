#ifndef OCFL_CONSTRUCTIONS_HPP
#define OCFL_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <variant>

#include "ocfl/erasure.hpp"
#include "ocfl/grammar.hpp"
#include "ocfl/omega_regular.hpp"
#include "ocfl/pushdown.hpp"
#include "ocfl/word.hpp"

namespace ocfl {

/// Why a word over X^box is not a coded word.  `position` is 1-based in the decoded input.
struct DecodeFailure {
    std::size_t position;
    std::string reason;
};

/// ~j <-> alpha B^j C^j D^j E^j beta for 1 <= j <= n.  Base letters code themselves.
class EraserCodec {
  public:
    EraserCodec(int n, Alphabet base);

    int rank() const { return n_; }
    const Alphabet& base() const { return base_; }

    Word encode(std::span<const Symbol> x) const;
    LassoWord encode_lasso(const LassoWord& x) const;

    /// Parses items from the start of the omega-word until an item boundary recurs at the same
    /// period phase; the items between the two visits form the decoded period.
    std::variant<LassoWord, DecodeFailure> decode_lasso(const LassoWord& w) const;

  private:
    int n_;
    Alphabet base_;
};

/// A (deterministic, over X_A) and the markers a, b.
class AbulletSpec {
  public:
    /// A deterministic Buchi automaton is turned into its Muller form; partial ones get a sink.
    AbulletSpec(const BuchiFA& a, Symbol a_marker, Symbol b_marker);
    AbulletSpec(MullerFA a, Symbol a_marker, Symbol b_marker);

    /// X_A = {0,1,a,b}, A = B2 (no word of A uses a or b).
    static AbulletSpec b2();

    const MullerFA& automaton() const { return a_; }
    const Alphabet& base() const { return a_.alphabet(); }
    Alphabet boxed() const { return boxed_alphabet(base()); }
    const Symbol& a() const { return a_marker_; }
    const Symbol& b() const { return b_marker_; }
    bool in_A(const LassoWord& y) const { return muller_member(a_, y); }

  private:
    void validate() const;
    MullerFA a_;
    Symbol a_marker_;
    Symbol b_marker_;
};

/// Replaces every letter c by L3.c, with L3 over the OKC's alphabet and eraser e.
OmegaKC exponentiate_okc(const OmegaKC& a, const Symbol& e);
/// Applies exponentiate_okc with ~1, ..., ~n in that order.
OmegaKC iterate_exponentiation(const OmegaKC& a, int n);
/// {eps} . (0* 1)^omega, grammars over `base`.
OmegaKC b2_okc(const Alphabet& base = parse_alphabet("0 1"));

/// Simulates p on the surviving letters; between them, blocks of L3 are read with a marker and
/// one stack letter per pending letter above p's stack.  Always Buchi: the result accepts only
/// if p keeps reading real letters after visiting final states.
PushdownAutomaton exponentiate_mpda(const PushdownAutomaton& p, const Symbol& e);

/// a^n b w' with w' scanned over the window u.v^K, K = |u| + 2|v| + n + 2.
bool prefix_in_L(const LassoWord& w, const Symbol& a, const Symbol& b);

/// Which parts of A^bullet a word belongs to.
struct AbulletVerdict {
    bool in_R = false;
    bool guard = false;
    bool sup = false;
    /// a^n b prefix length n, 0 if there is none.
    int n = 0;
    std::optional<DecodeFailure> decode_failure;
    std::optional<EraseOutcome> erased;
    bool member() const { return guard || sup; }
};

AbulletVerdict abullet_classify(const AbulletSpec& spec, const LassoWord& w);
bool abullet_member_oracle(const AbulletSpec& spec, const LassoWord& w);

/// Muller machine for the coded iterated exponentiations: sup <= L(B) <= A^bullet.
PushdownAutomaton build_abullet_mpda(const AbulletSpec& spec);
/// L(B) + [L.(X^box)^omega & R].
PushdownAutomaton build_abullet_automaton(const AbulletSpec& spec);

}  // namespace ocfl

#endif  // OCFL_CONSTRUCTIONS_HPP
