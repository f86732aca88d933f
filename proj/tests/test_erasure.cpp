#include <gtest/gtest.h>

#include <random>

#include "ocfl/erasure.hpp"
#include "ocfl/reference.hpp"

using namespace ocfl;

namespace {

const Symbol e1 = Symbol::eraser(1);

EraseOutcome lasso(const char* text) { return erase_lasso(parse_lasso(text), e1); }
EraseOutcome finite(const char* text) { return erase_finite(parse_word(text), e1); }

}  // namespace

TEST(EraseFinite, Examples) {
    EXPECT_EQ(finite("a ~1 a ~1 a ~1"), EraseOutcome::finite({}));
    EXPECT_EQ(finite(""), EraseOutcome::finite({}));
    EXPECT_TRUE(finite("~1").is_undefined());
    EXPECT_EQ(finite("a b ~1"), EraseOutcome::finite(parse_word("a")));
    // Other ranks are ordinary letters.
    EXPECT_EQ(finite("~2 ~1"), EraseOutcome::finite({}));
    EXPECT_EQ(to_string(finite("a b ~1")), "finite: a");
    EXPECT_EQ(to_string(finite("~1 a")), "undefined");
}

TEST(EraseLasso, Examples) {
    EXPECT_EQ(lasso("| a ~1"), EraseOutcome::finite({}));
    EXPECT_TRUE(lasso("| a ~1 ~1").is_undefined());
    EXPECT_EQ(lasso("| a b ~1"), EraseOutcome::infinite(parse_lasso("| a")));
    EXPECT_EQ(lasso("b b | ~1 a"), EraseOutcome::finite(parse_word("b")));
    EXPECT_TRUE(lasso("~1 | a ~1").is_undefined());
    EXPECT_TRUE(lasso("a ~1 ~1 | a").is_undefined());
    EXPECT_EQ(to_string(lasso("| a b ~1")), "infinite: | a");
}

TEST(EraseLasso, MoreShapes) {
    // Deficit period draining a tall prefix: stages eventually pop an empty stack.
    EXPECT_TRUE(lasso("a a a a | ~1").is_undefined());
    // Net-zero period with growth inside.
    EXPECT_EQ(lasso("x | a b ~1 ~1"), EraseOutcome::finite(parse_word("x")));
    EXPECT_EQ(lasso("x y | ~1 a"), EraseOutcome::finite(parse_word("x")));
    EXPECT_EQ(lasso("| 0 1 ~1 1"), EraseOutcome::infinite(parse_lasso("| 0 1")));
    EXPECT_EQ(lasso("x ~1 | 0"), EraseOutcome::infinite(parse_lasso("| 0")));
    EXPECT_EQ(lasso("| 0"), EraseOutcome::infinite(parse_lasso("| 0")));
}

TEST(EraseNested, Examples) {
    EXPECT_EQ(erase_nested(parse_lasso("| 0 1 ~2 1"), 2),
              EraseOutcome::infinite(parse_lasso("| 0 1")));
    EXPECT_EQ(erase_nested(parse_lasso("| 0"), 1), EraseOutcome::infinite(parse_lasso("| 0")));
    EXPECT_TRUE(erase_nested(parse_lasso("~1 | 0"), 2).is_undefined());
    EXPECT_THROW(erase_nested(parse_lasso("| 0 ~3"), 2), Error);
    // ~2 erases the ~1, then ~1 has nothing left to do.
    EXPECT_EQ(erase_nested(parse_lasso("| 1 ~1 ~2"), 2), EraseOutcome::infinite(parse_lasso("| 1")));
    // ~2 removes the 1, leaving ~1 alone in every period.
    EXPECT_TRUE(erase_nested(parse_lasso("| 1 ~2 ~1"), 2).is_undefined());
    EXPECT_EQ(erase_nested(parse_lasso("| 0 ~1 ~2 1"), 2),
              EraseOutcome::infinite(parse_lasso("| 0 1")));
}

TEST(MemberApprox, Examples) {
    const BuchiFA b2 = build_B2();
    EXPECT_TRUE(member_A_approx_n(parse_lasso("| 0 1"), b2, 0));
    EXPECT_TRUE(member_A_approx_n(parse_lasso("| 0 1 ~2 1"), b2, 2));
    EXPECT_FALSE(member_A_approx_n(parse_lasso("| 1 ~1"), b2, 1));
    EXPECT_FALSE(member_A_approx_n(parse_lasso("| 0"), b2, 0));
    const MullerFA m2 = build_B2_muller();
    EXPECT_TRUE(member_A_approx_n(parse_lasso("| 0 1 ~2 1"), m2, 2));
    EXPECT_FALSE(member_A_approx_n(parse_lasso("| 1 ~1"), m2, 1));
}

TEST(EraseProperties, FiniteMatchesPairDeletion) {
    const std::vector<Symbol> letters = {Symbol::base("x"), Symbol::base("y"), e1};
    ocfl::reference::for_each_word(letters, 9, [&](const Word& w) {
        const auto got = erase_finite(w, e1);
        const auto want = ocfl::reference::naive_erase(w, e1);
        if (want)
            ASSERT_EQ(got, EraseOutcome::finite(*want)) << to_string(w);
        else
            ASSERT_TRUE(got.is_undefined()) << to_string(w);
    });
}

TEST(EraseProperties, ShiftingPeriodsIntoPrefixChangesNothing) {
    std::mt19937_64 rng(7);
    const std::vector<Symbol> letters = {Symbol::base("x"), Symbol::base("y"), e1, e1};
    for (int i = 0; i < 2000; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        const auto base = erase_lasso(w, e1);
        Word u = w.prefix();
        for (int k = 1; k <= 3; ++k) {
            u.insert(u.end(), w.period().begin(), w.period().end());
            ASSERT_EQ(erase_lasso(LassoWord(u, w.period()), e1), base) << to_string(w);
        }
    }
}

TEST(EraseProperties, StagesStabilizeOnTheLimit) {
    std::mt19937_64 rng(11);
    const std::vector<Symbol> letters = {Symbol::base("x"), Symbol::base("y"), e1};
    int infinite = 0;
    for (int i = 0; i < 2000; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        const auto r = erase_lasso(w, e1);
        const std::size_t horizon = w.prefix().size() + 60 * w.period().size();
        // Every stage defined iff not undefined (checked on a long horizon).
        bool any_undefined = false;
        for (std::size_t n = 0; n <= horizon && !any_undefined; ++n)
            any_undefined = erase_finite(unfold(w, n), e1).is_undefined();
        ASSERT_EQ(any_undefined, r.is_undefined()) << to_string(w);
        if (!r.is_infinite()) continue;
        ++infinite;
        // y[m] is a prefix of every late stage.
        const Word ym = unfold(r.infinite_word(), 6);
        for (std::size_t n = horizon - 3 * w.period().size(); n <= horizon; ++n) {
            const auto st = erase_finite(unfold(w, n), e1);
            ASSERT_TRUE(st.is_finite());
            const Word& s = st.finite_word();
            ASSERT_GE(s.size(), ym.size()) << to_string(w);
            ASSERT_TRUE(std::equal(ym.begin(), ym.end(), s.begin())) << to_string(w);
        }
    }
    EXPECT_GT(infinite, 100);
}

TEST(EraseProperties, FiniteLimitIsTheStablePrefix) {
    std::mt19937_64 rng(13);
    const std::vector<Symbol> letters = {Symbol::base("x"), Symbol::base("y"), e1};
    for (int i = 0; i < 3000; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        const auto r = erase_lasso(w, e1);
        if (!r.is_finite()) continue;
        // The limit is the longest common prefix of the stages from some point on.
        const std::size_t from = w.prefix().size() + 20 * w.period().size();
        std::optional<Word> common;
        for (std::size_t n = from; n <= from + 3 * w.period().size(); ++n) {
            const Word s = erase_finite(unfold(w, n), e1).finite_word();
            if (!common) {
                common = s;
                continue;
            }
            std::size_t k = 0;
            while (k < common->size() && k < s.size() && (*common)[k] == s[k]) ++k;
            common->erase(common->begin() + static_cast<std::ptrdiff_t>(k), common->end());
        }
        ASSERT_EQ(*common, r.finite_word()) << to_string(w);
    }
}

TEST(EraseProperties, ZeroStagesIsDirectMembership) {
    std::mt19937_64 rng(17);
    const std::vector<Symbol> letters = {Symbol::base("0"), Symbol::base("1")};
    const BuchiFA b2 = build_B2();
    for (int i = 0; i < 300; ++i) {
        auto w = ocfl::reference::random_lasso(rng, letters, 6, 6);
        EXPECT_EQ(member_A_approx_n(w, b2, 0), buchi_member(b2, w));
    }
}
