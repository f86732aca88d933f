#ifndef OCFL_WORD_HPP
#define OCFL_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ocfl {

/// Raised for malformed input (tokens, files, alphabet discipline).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SymbolKind : std::uint8_t { Base, Eraser, Coding };

/// The six letters of the eraser coding alphabet, in the order they occur in a group.
enum class Coding : std::uint8_t { Alpha, B, C, D, E, Beta };

/// A letter of some alphabet.  Base letters carry a name; erasers carry a rank >= 1;
/// coding letters are one of six fixed letters.  Ordering is (kind, value, name).
///
/// Text tokens: erasers are `~1`, `~2`, ...; coding letters are `[` (alpha), `B`, `C`,
/// `D`, `E`, `]` (beta).  Any other token except `|` and `eps` is a base letter.
class Symbol {
  public:
    static Symbol base(std::string name);
    static Symbol eraser(int rank);
    static Symbol coding(Coding c);
    static Symbol parse(std::string_view token);

    SymbolKind kind() const { return kind_; }
    bool is_base() const { return kind_ == SymbolKind::Base; }
    bool is_eraser() const { return kind_ == SymbolKind::Eraser; }
    bool is_coding() const { return kind_ == SymbolKind::Coding; }
    int rank() const;
    Coding coding_letter() const;
    const std::string& name() const { return name_; }

    std::string str() const;

    auto operator<=>(const Symbol&) const = default;
    bool operator==(const Symbol&) const = default;

  private:
    Symbol(SymbolKind k, int v, std::string n) : kind_(k), value_(v), name_(std::move(n)) {}
    SymbolKind kind_;
    int value_;
    std::string name_;
};

using Word = std::vector<Symbol>;
using Alphabet = std::set<Symbol>;

Word parse_word(std::string_view text);
std::string to_string(std::span<const Symbol> w);
Alphabet parse_alphabet(std::string_view text);

/// The six coding letters alpha, B, C, D, E, beta.
Alphabet coding_alphabet();
/// X_A together with the coding letters.
Alphabet boxed_alphabet(const Alphabet& base);

/// Ultimately periodic omega-word prefix . period^omega.
class LassoWord {
  public:
    LassoWord(Word prefix, Word period);

    const Word& prefix() const { return prefix_; }
    const Word& period() const { return period_; }

    /// Structural equality of the stored components; use lasso_equal for word equality.
    bool operator==(const LassoWord&) const = default;
    auto operator<=>(const LassoWord&) const = default;

  private:
    Word prefix_;
    Word period_;
};

LassoWord parse_lasso(std::string_view text);
std::string to_string(const LassoWord& w);

/// Shortest prefix, primitive period.
LassoWord normalize(const LassoWord& w);
bool lasso_equal(const LassoWord& w1, const LassoWord& w2);
/// 1-based letter access.
const Symbol& index(const LassoWord& w, std::size_t i);
LassoWord prepend(std::span<const Symbol> u, const LassoWord& w);
/// First n letters of the omega-word.
Word unfold(const LassoWord& w, std::size_t n);

/// Every letter in prefix and period.
Alphabet letters(const LassoWord& w);

}  // namespace ocfl

template <>
struct std::hash<ocfl::Symbol> {
    std::size_t operator()(const ocfl::Symbol& s) const noexcept;
};

#endif  // OCFL_WORD_HPP
