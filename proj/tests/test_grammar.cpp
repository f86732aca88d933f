#include <gtest/gtest.h>

#include <random>

#include "ocfl/erasure.hpp"
#include "ocfl/grammar.hpp"
#include "ocfl/reference.hpp"

using namespace ocfl;

namespace {

const Symbol e1 = Symbol::eraser(1);
const Alphabet kX = parse_alphabet("x");
const Alphabet kXA = parse_alphabet("0 1 a b");
const Symbol kA = Symbol::base("a");
const Symbol kB = Symbol::base("b");

bool member(const Grammar& g, const char* w) { return cfg_member(g, parse_word(w)); }

Production P(std::string lhs, std::vector<GrammarSymbol> rhs) { return {std::move(lhs), std::move(rhs)}; }
GrammarSymbol N(const char* n) { return Nonterminal{n}; }
GrammarSymbol T(const char* t) { return Symbol::parse(t); }

// Length-bounded language of g over `letters`.
std::set<Word> language(const Grammar& g, const std::vector<Symbol>& letters, std::size_t n) {
    std::set<Word> out;
    ocfl::reference::for_each_word(letters, n, [&](const Word& w) {
        if (cfg_member(g, w)) out.insert(w);
    });
    return out;
}

Grammar random_grammar(std::mt19937_64& rng, const Alphabet& sigma) {
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    const char* names[] = {"S", "A", "B", "C"};
    std::uniform_int_distribution<int> nt(0, 3), len(0, 3), coin(0, 2);
    std::vector<Production> ps;
    const int count = std::uniform_int_distribution<int>(3, 8)(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<GrammarSymbol> rhs;
        const int k = len(rng);
        for (int j = 0; j < k; ++j) {
            if (coin(rng) == 0)
                rhs.push_back(Nonterminal{names[nt(rng)]});
            else
                rhs.push_back(letters[rng() % letters.size()]);
        }
        ps.push_back({i == 0 ? "S" : names[nt(rng)], std::move(rhs)});
    }
    return Grammar("S", std::move(ps), sigma);
}

}  // namespace

TEST(Cfg, L3Examples) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    EXPECT_TRUE(member(l3, ""));
    EXPECT_TRUE(member(l3, "a ~1"));
    EXPECT_FALSE(member(l3, "a"));
    EXPECT_TRUE(member(l3, "a ~1 a ~1"));
    EXPECT_FALSE(member(l3, "~1 a"));
    EXPECT_TRUE(member(l3, "a a ~1 ~1"));
    EXPECT_THROW(build_L3(parse_alphabet("a"), Symbol::base("a")), Error);
}

TEST(Cfg, L3LengthTwoIsExactlyOneWord) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    const auto lang = language(l3, {Symbol::base("a"), e1}, 2);
    EXPECT_EQ(lang, (std::set<Word>{Word{}, parse_word("a ~1")}));
}

TEST(Cfg, CykParserPushPop) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    CykParser p(l3);
    EXPECT_TRUE(p.accepts());
    p.push(Symbol::base("a"));
    EXPECT_FALSE(p.accepts());
    p.push(e1);
    EXPECT_TRUE(p.accepts());
    p.pop();
    p.push(Symbol::base("a"));
    EXPECT_FALSE(p.accepts());
    EXPECT_EQ(p.size(), 2u);
}

TEST(Cfg, TerminalOutsideGrammarIsRejected) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    EXPECT_THROW(member(l3, "b ~1"), Error);
}

TEST(Cfg, Substitute) {
    const Grammar g = singleton_grammar(parse_word("a b"));
    const Alphabet ab = parse_alphabet("a b");
    std::map<Symbol, Grammar> sub{{kA, singleton_grammar(Word{}, ab)},
                                  {kB, singleton_grammar(parse_word("b"), ab)}};
    const Grammar h = substitute(g, sub);
    const auto lang = language(h, {kA, kB}, 4);
    EXPECT_EQ(lang, std::set<Word>{parse_word("b")});
    EXPECT_THROW(substitute(g, {{kA, singleton_grammar(Word{})}}), Error);
}

TEST(Cfg, IdentitySubstitutionKeepsLanguage) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    std::map<Symbol, Grammar> id;
    for (const auto& t : l3.terminals()) id.emplace(t, singleton_grammar(Word{t}));
    const std::vector<Symbol> letters = {Symbol::base("a"), e1};
    EXPECT_EQ(language(substitute(l3, id), letters, 6), language(l3, letters, 6));
}

TEST(Cfg, SubstitutingL3aRespectsErasure) {
    // {w} with each letter c replaced by L3.c: every member erases to w.
    const Alphabet base = parse_alphabet("x y");
    const Grammar l3 = build_L3(base, e1);
    const Word w = parse_word("x y");
    std::map<Symbol, Grammar> sub;
    for (const auto& c : base) sub.emplace(c, concat(l3, singleton_grammar(Word{c})));
    const Grammar h = substitute(singleton_grammar(w, base), sub);
    const std::vector<Symbol> letters = {Symbol::base("x"), Symbol::base("y"), e1};
    int members = 0;
    ocfl::reference::for_each_word(letters, 8, [&](const Word& x) {
        if (!cfg_member(h, x)) return;
        ++members;
        ASSERT_EQ(erase_finite(x, e1), EraseOutcome::finite(w)) << to_string(x);
    });
    EXPECT_GT(members, 10);
}

TEST(Cfg, SubstituteSkeletonOverC) {
    // L3 over {c} with c -> L3.a: words erasing to a^k then erased again by ~2.
    const Symbol c = Symbol::base("c");
    const Symbol e2 = Symbol::eraser(2);
    const Grammar skeleton = build_L3(Alphabet{c}, e2);
    const Grammar l3a = concat(build_L3(parse_alphabet("a"), e1), singleton_grammar(parse_word("a")));
    std::map<Symbol, Grammar> sub{{c, l3a}, {e2, singleton_grammar(Word{e2})}};
    const Grammar h = substitute(skeleton, sub);
    const std::vector<Symbol> letters = {Symbol::base("a"), e1, e2};
    ocfl::reference::for_each_word(letters, 6, [&](const Word& x) {
        // x in h iff erasing ~1 yields a word over {a, ~2} that ~2 erases to nothing and every
        // ~1 block sits inside some a-item.
        bool expected = false;
        // Split x into items: each item is (L3 over a,~1) a, or ~2.
        std::function<bool(std::size_t, int)> parse = [&](std::size_t i, int depth) -> bool {
            if (i == x.size()) return depth == 0;
            if (x[i] == e2) return depth > 0 && parse(i + 1, depth - 1);
            for (std::size_t j = i; j < x.size(); ++j) {
                if (x[j] != Symbol::base("a")) continue;
                Word seg(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(j));
                bool ok = true;
                for (const auto& s : seg) ok = ok && s != e2;
                if (ok && erase_finite(seg, e1) == EraseOutcome::finite({}) && parse(j + 1, depth + 1))
                    return true;
            }
            return false;
        };
        expected = parse(0, 0);
        ASSERT_EQ(cfg_member(h, x), expected) << to_string(x);
    });
}

TEST(Cfg, ConcatAndUnion) {
    const Grammar a = singleton_grammar(parse_word("a"));
    const Grammar b = singleton_grammar(parse_word("b"));
    const std::vector<Symbol> letters = {kA, kB};
    EXPECT_EQ(language(concat(a, b), letters, 3), std::set<Word>{parse_word("a b")});
    EXPECT_EQ(language(union_of(a, b), letters, 3),
              (std::set<Word>{parse_word("a"), parse_word("b")}));
    const Grammar l3a = concat(build_L3(parse_alphabet("a"), e1), a);
    EXPECT_TRUE(member(l3a, "a ~1 a"));
    EXPECT_FALSE(member(l3a, "a ~1"));
}

TEST(Cfg, IntersectDfa) {
    const Grammar l3 = build_L3(parse_alphabet("a"), e1);
    const Alphabet sigma{Symbol::base("a"), e1};
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    // Even length.
    Dfa even(2, sigma, 0, {0},
             {{0, Symbol::base("a"), 1}, {1, Symbol::base("a"), 0}, {0, e1, 1}, {1, e1, 0}});
    EXPECT_EQ(language(intersect_dfa(l3, even), letters, 8), language(l3, letters, 8));
    // Starts with ~1.
    Dfa starts(3, sigma, 0, {1},
               {{0, e1, 1}, {0, Symbol::base("a"), 2}, {1, e1, 1}, {1, Symbol::base("a"), 1},
                {2, e1, 2}, {2, Symbol::base("a"), 2}});
    EXPECT_TRUE(language(intersect_dfa(l3, starts), letters, 8).empty());
    // {a,b}* and {a}*.
    const Alphabet ab = parse_alphabet("a b");
    Dfa only_a(2, ab, 0, {0}, {{0, kA, 0}, {0, kB, 1}, {1, kA, 1}, {1, kB, 1}});
    const auto got = language(intersect_dfa(star_grammar(ab), only_a), {kA, kB}, 5);
    std::set<Word> want;
    for (std::size_t n = 0; n <= 5; ++n) want.insert(Word(n, kA));
    EXPECT_EQ(got, want);
}

TEST(Cfg, GuardExamples) {
    const Grammar l = build_L_guards(kXA, kA, kB);
    for (const char* w : {"a b B B", "0 [ B C C D E ]", "a b 1 C C", "[ B C D D E ]",
                          "[ B C D E E ]", "a b [ B B C C D D E ]"}) {
        EXPECT_TRUE(member(l, w)) << w;
        EXPECT_TRUE(in_L_direct(parse_word(w))) << w;
    }
    for (const char* w : {"a a b B", "", "a b [ B C D E ]", "a b B", "b B B", "[ B C D E ] 0"}) {
        EXPECT_FALSE(member(l, w)) << w;
        EXPECT_FALSE(in_L_direct(parse_word(w))) << w;
    }
}

TEST(CfgProperties, L3IsErasureToEmpty) {
    const Grammar l3 = build_L3(kX, e1);
    CykParser p(l3);
    // Incremental parse in a DFS over the word tree.
    const std::vector<Symbol> letters = {Symbol::base("x"), e1};
    Word w;
    std::function<void()> rec = [&]() {
        ASSERT_EQ(p.accepts(), erase_finite(w, e1) == EraseOutcome::finite({})) << to_string(w);
        if (w.size() == 12) return;
        for (const auto& s : letters) {
            w.push_back(s);
            p.push(s);
            rec();
            p.pop();
            w.pop_back();
        }
    };
    rec();
}

TEST(CfgProperties, GuardScannerMatchesGrammarOnShortWords) {
    const Grammar l = build_L_guards(parse_alphabet("a b"), kA, kB);
    const Alphabet box = boxed_alphabet(parse_alphabet("a b"));
    const std::vector<Symbol> letters(box.begin(), box.end());
    ocfl::reference::for_each_word(letters, 6, [&](const Word& w) {
        ASSERT_EQ(cfg_member(l, w), in_L_direct(w)) << to_string(w);
    });
}

TEST(CfgProperties, BarHillelConsistency) {
    std::mt19937_64 rng(23);
    const Alphabet sigma = parse_alphabet("x y");
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    for (int i = 0; i < 60; ++i) {
        const Grammar g = random_grammar(rng, sigma);
        const int n = 3;
        std::vector<FaTransition> t;
        std::vector<int> acc;
        for (int q = 0; q < n; ++q) {
            if (rng() % 2) acc.push_back(q);
            for (const auto& s : letters) t.push_back({q, s, static_cast<int>(rng() % n)});
        }
        const Dfa d(n, sigma, 0, acc, t);
        const Grammar h = intersect_dfa(g, d);
        ocfl::reference::for_each_word(letters, 8, [&](const Word& w) {
            ASSERT_EQ(cfg_member(h, w), cfg_member(g, w) && d.accepts(w)) << to_string(w);
        });
    }
}

TEST(CfgProperties, TrimKeepsLanguage) {
    std::mt19937_64 rng(29);
    const Alphabet sigma = parse_alphabet("x y");
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    for (int i = 0; i < 60; ++i) {
        const Grammar g = random_grammar(rng, sigma);
        EXPECT_EQ(language(trim(g), letters, 6), language(g, letters, 6));
        if (!has_nonempty_word(g)) EXPECT_LE(language(g, letters, 6).size(), 1u);
    }
}
