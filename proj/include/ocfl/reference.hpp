#ifndef OCFL_REFERENCE_HPP
#define OCFL_REFERENCE_HPP

// Independent reference procedures for cross-checking.  None of them call
// the library routines they are compared against.

#include <functional>
#include <optional>
#include <random>

#include "ocfl/erasure.hpp"
#include "ocfl/grammar.hpp"
#include "ocfl/pushdown.hpp"
#include "ocfl/word.hpp"

namespace ocfl::reference {

/// Deletes the leftmost adjacent (letter, eraser) pair until none is left.
/// nullopt = some eraser survived.
std::optional<Word> naive_erase(Word x, const Symbol& eraser);

/// Explores every configuration reachable from (initial, bottom) with stack height <= bound and
/// looks for a reachable cycle through a final control state.  Throws if a configuration above
/// the bound is reachable.
bool exhaustive_pds_nonempty(const BuchiPds& s, std::size_t bound);

/// Random input-free system whose stack symbols are layered so that the height never exceeds
/// `levels`: symbol z has level z / per_level and only level k+1 symbols can go above level k.
BuchiPds random_layered_pds(std::mt19937_64& rng, int states, int levels, int per_level);

/// u . V^omega test by search over cut positions in u.v^K: segments must lie in the
/// unfolded window, cut positions are folded by period phase.
bool okc_member_by_cuts(const OmegaKC& okc, const LassoWord& w, int unroll);

/// Calls f on every word over `letters` of length <= max_len, in length-lexicographic order.
void for_each_word(const std::vector<Symbol>& letters, std::size_t max_len,
                   const std::function<void(const Word&)>& f);

Word random_word(std::mt19937_64& rng, const std::vector<Symbol>& letters, std::size_t min_len,
                 std::size_t max_len);
LassoWord random_lasso(std::mt19937_64& rng, const std::vector<Symbol>& letters,
                       std::size_t max_prefix, std::size_t max_period);

}  // namespace ocfl::reference

#endif
