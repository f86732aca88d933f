#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ocfl/word.hpp"
#include "ocfl/reference.hpp"

using namespace ocfl;

namespace {

LassoWord L(const char* text) { return parse_lasso(text); }

}  // namespace

TEST(Symbol, KindsAndTokens) {
    EXPECT_TRUE(Symbol::parse("0").is_base());
    EXPECT_EQ(Symbol::parse("~3").rank(), 3);
    EXPECT_EQ(Symbol::parse("[").coding_letter(), Coding::Alpha);
    EXPECT_EQ(Symbol::parse("]").coding_letter(), Coding::Beta);
    EXPECT_EQ(Symbol::parse("D").coding_letter(), Coding::D);
    EXPECT_EQ(Symbol::eraser(2).str(), "~2");
    EXPECT_THROW(Symbol::parse("~0"), Error);
    EXPECT_THROW(Symbol::parse("~x"), Error);
    EXPECT_THROW(Symbol::base("B"), Error);
    EXPECT_THROW(Symbol::base("eps"), Error);
    EXPECT_NE(Symbol::base("b"), Symbol::parse("B"));
}

TEST(Word, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_word("a ~1  b")), "a ~1 b");
    EXPECT_TRUE(parse_word("eps").empty());
    EXPECT_TRUE(parse_word("").empty());
    EXPECT_EQ(to_string(Word{}), "eps");
    EXPECT_EQ(to_string(L("a b | c")), "a b | c");
    EXPECT_EQ(to_string(L("| 0 1")), "| 0 1");
    EXPECT_THROW(parse_lasso("a b"), Error);
    EXPECT_THROW(parse_lasso("a |"), Error);
    EXPECT_THROW(parse_lasso("a | b | c"), Error);
}

TEST(Lasso, NormalizeExamples) {
    EXPECT_EQ(normalize(L("| a b a b")), L("| a b"));
    EXPECT_EQ(normalize(L("a | a a")), L("| a"));
    EXPECT_EQ(normalize(L("| a")), L("| a"));
    EXPECT_EQ(normalize(L("x a b | a b")), L("x | a b"));
    EXPECT_EQ(normalize(L("b a | b a")), L("| b a"));
}

TEST(Lasso, EqualExamples) {
    EXPECT_TRUE(lasso_equal(L("| a b"), L("a b | a b")));
    EXPECT_FALSE(lasso_equal(L("| a b"), L("| b a")));
    EXPECT_TRUE(lasso_equal(L("a | b a"), L("a b | a b")));
    // a(ba)^w unfolds to ababab..., ab(ab)^w too.
    EXPECT_EQ(unfold(L("a | b a"), 10), unfold(L("a b | a b"), 10));
}

TEST(Lasso, IndexExamples) {
    EXPECT_EQ(index(L("| 0 1"), 1), Symbol::base("0"));
    EXPECT_EQ(index(L("| 0 1"), 4), Symbol::base("1"));
    EXPECT_EQ(index(L("b | a"), 7), Symbol::base("a"));
    EXPECT_EQ(index(L("b | a"), 1), Symbol::base("b"));
}

TEST(Lasso, PrependExamples) {
    EXPECT_EQ(prepend(Word{}, L("| 0 1")), L("| 0 1"));
    EXPECT_EQ(prepend(parse_word("a"), L("| a")), L("| a"));
    EXPECT_EQ(prepend(parse_word("a b"), L("| b a")), L("a b | b a"));
    EXPECT_EQ(prepend(parse_word("b"), L("| a b")), L("| b a"));
}

class LassoProperties : public ::testing::Test {
  protected:
    std::mt19937_64 rng{20240611};
    std::vector<Symbol> letters = {Symbol::base("a"), Symbol::base("b")};
};

TEST_F(LassoProperties, NormalizeIsIdempotentAndPreservesWord) {
    for (int i = 0; i < 500; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 6, 6);
        auto n = normalize(w);
        EXPECT_EQ(normalize(n), n);
        EXPECT_EQ(unfold(w, 40), unfold(n, 40));
        EXPECT_LE(n.prefix().size(), w.prefix().size());
    }
}

TEST_F(LassoProperties, EqualityMatchesPointwiseComparison) {
    for (int i = 0; i < 2000; ++i) {
        auto w1 = ocfl::reference::random_lasso(rng, letters, 3, 3);
        auto w2 = ocfl::reference::random_lasso(rng, letters, 3, 3);
        const auto bound = w1.prefix().size() + w2.prefix().size() +
                           2 * std::lcm(w1.period().size(), w2.period().size());
        bool same = true;
        for (std::size_t k = 1; k <= bound; ++k) same = same && index(w1, k) == index(w2, k);
        EXPECT_EQ(lasso_equal(w1, w2), same) << to_string(w1) << " vs " << to_string(w2);
    }
}

TEST_F(LassoProperties, PrependComposes) {
    for (int i = 0; i < 500; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 4, 4);
        auto u1 = ocfl::reference::random_word(rng, letters, 0, 4);
        auto u2 = ocfl::reference::random_word(rng, letters, 0, 4);
        Word u12 = u1;
        u12.insert(u12.end(), u2.begin(), u2.end());
        EXPECT_EQ(prepend(u1, prepend(u2, w)), prepend(u12, w));
    }
}
