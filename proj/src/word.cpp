#include "ocfl/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ocfl {

namespace {

constexpr std::string_view kCodingTokens[] = {"[", "B", "C", "D", "E", "]"};

bool is_reserved(std::string_view t) {
    if (t.empty() || t == "|" || t == "eps" || t.front() == '~')
        return true;
    return std::find(std::begin(kCodingTokens), std::end(kCodingTokens), t) !=
           std::end(kCodingTokens);
}

std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Symbol Symbol::base(std::string name) {
    if (is_reserved(name))
        throw Error("reserved token cannot name a base letter: '" + name + "'");
    return Symbol(SymbolKind::Base, 0, std::move(name));
}

Symbol Symbol::eraser(int rank) {
    if (rank < 1)
        throw Error("eraser rank must be >= 1, got " + std::to_string(rank));
    return Symbol(SymbolKind::Eraser, rank, {});
}

Symbol Symbol::coding(Coding c) {
    return Symbol(SymbolKind::Coding, static_cast<int>(c), {});
}

Symbol Symbol::parse(std::string_view token) {
    if (token.empty())
        throw Error("empty token");
    if (token.front() == '~') {
        int rank = 0;
        auto [p, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), rank);
        if (ec != std::errc() || p != token.data() + token.size() || rank < 1)
            throw Error("bad eraser token '" + std::string(token) + "'");
        return eraser(rank);
    }
    for (std::size_t k = 0; k < std::size(kCodingTokens); ++k)
        if (token == kCodingTokens[k])
            return coding(static_cast<Coding>(k));
    return base(std::string(token));
}

int Symbol::rank() const {
    if (kind_ != SymbolKind::Eraser)
        throw Error("rank() on a non-eraser symbol " + str());
    return value_;
}

Coding Symbol::coding_letter() const {
    if (kind_ != SymbolKind::Coding)
        throw Error("coding_letter() on a non-coding symbol " + str());
    return static_cast<Coding>(value_);
}

std::string Symbol::str() const {
    switch (kind_) {
    case SymbolKind::Base:
        return name_;
    case SymbolKind::Eraser:
        return "~" + std::to_string(value_);
    case SymbolKind::Coding:
        return std::string(kCodingTokens[value_]);
    }
    return {};
}

Word parse_word(std::string_view text) {
    Word w;
    for (auto t : tokens(text)) {
        if (t == "eps")
            continue;
        if (t == "|")
            throw Error("unexpected '|' in a finite word");
        w.push_back(Symbol::parse(t));
    }
    return w;
}

std::string to_string(std::span<const Symbol> w) {
    if (w.empty())
        return "eps";
    std::string out;
    for (const auto& s : w) {
        if (!out.empty())
            out += ' ';
        out += s.str();
    }
    return out;
}

Alphabet parse_alphabet(std::string_view text) {
    auto w = parse_word(text);
    return Alphabet(w.begin(), w.end());
}

Alphabet coding_alphabet() {
    Alphabet a;
    for (int k = 0; k < 6; ++k)
        a.insert(Symbol::coding(static_cast<Coding>(k)));
    return a;
}

Alphabet boxed_alphabet(const Alphabet& base) {
    Alphabet a = base;
    a.merge(coding_alphabet());
    return a;
}

LassoWord::LassoWord(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty())
        throw Error("lasso word needs a nonempty period");
}

LassoWord parse_lasso(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw Error("lasso word needs 'PREFIX | PERIOD', got '" + std::string(text) + "'");
    if (text.find('|', bar + 1) != std::string_view::npos)
        throw Error("lasso word has more than one '|'");
    return LassoWord(parse_word(text.substr(0, bar)), parse_word(text.substr(bar + 1)));
}

std::string to_string(const LassoWord& w) {
    std::string u = w.prefix().empty() ? std::string() : to_string(w.prefix()) + " ";
    return u + "| " + to_string(w.period());
}

LassoWord normalize(const LassoWord& w) {
    Word v = w.period();
    const std::size_t n = v.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = v[i] == v[i - p];
        if (periodic) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(p), v.end());
            break;
        }
    }
    Word u = w.prefix();
    while (!u.empty() && u.back() == v.back()) {
        u.pop_back();
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    return LassoWord(std::move(u), std::move(v));
}

bool lasso_equal(const LassoWord& w1, const LassoWord& w2) {
    return normalize(w1) == normalize(w2);
}

const Symbol& index(const LassoWord& w, std::size_t i) {
    if (i == 0)
        throw Error("lasso index is 1-based");
    const auto& u = w.prefix();
    const auto& v = w.period();
    if (i <= u.size())
        return u[i - 1];
    return v[(i - u.size() - 1) % v.size()];
}

LassoWord prepend(std::span<const Symbol> u, const LassoWord& w) {
    Word p(u.begin(), u.end());
    p.insert(p.end(), w.prefix().begin(), w.prefix().end());
    return normalize(LassoWord(std::move(p), w.period()));
}

Word unfold(const LassoWord& w, std::size_t n) {
    Word out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(index(w, i));
    return out;
}

Alphabet letters(const LassoWord& w) {
    Alphabet a(w.prefix().begin(), w.prefix().end());
    a.insert(w.period().begin(), w.period().end());
    return a;
}

}  // namespace ocfl

std::size_t std::hash<ocfl::Symbol>::operator()(const ocfl::Symbol& s) const noexcept {
    std::size_t h = std::hash<std::string>{}(s.name());
    h ^= static_cast<std::size_t>(s.kind()) * 0x9e3779b97f4a7c15ULL;
    if (!s.is_base())
        h ^= std::hash<std::string>{}(s.str()) << 1;
    return h;
}
