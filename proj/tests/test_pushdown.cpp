#include <gtest/gtest.h>

#include <random>

#include "ocfl/pushdown.hpp"
#include "ocfl/reference.hpp"

using namespace ocfl;

namespace {

LassoWord L(const char* text) { return parse_lasso(text); }
GrammarSymbol N(const char* n) { return Nonterminal{n}; }

const Symbol k0 = Symbol::base("0");
const Symbol k1 = Symbol::base("1");

Grammar eps_grammar(const Alphabet& t) { return singleton_grammar(Word{}, t); }

// 0*1
Grammar zeros_one() {
    return Grammar("S", {{"S", {k0, N("S")}}, {"S", {k1}}}, parse_alphabet("0 1"));
}

OmegaKC b2_okc() { return OmegaKC{{{eps_grammar(parse_alphabet("0 1")), zeros_one()}}}; }

// Single state, self-loops on `letters`, Buchi final.
PushdownAutomaton loop_acceptor(const Alphabet& sigma, const Alphabet& loops) {
    std::vector<PdaRule> rules;
    for (const auto& s : loops) rules.push_back({0, s, 0, 0, {0}});
    return PushdownAutomaton::buchi({"q"}, sigma, {"Z0"}, 0, 0, rules, {0});
}

// Buchi finals F seen as the Muller table {T : T meets F}.
PushdownAutomaton as_muller(const PushdownAutomaton& p) {
    std::vector<MullerEntry> table;
    std::vector<int> all(p.state_count());
    std::iota(all.begin(), all.end(), 0);
    for (int f : p.finals()) table.push_back({{f}, all});
    return PushdownAutomaton::muller(p.states(), p.inputs(), p.stack_symbols(), p.initial(),
                                     p.bottom(), p.rules(), table);
}

Grammar random_right_linear(std::mt19937_64& rng, const Alphabet& sigma) {
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    const char* names[] = {"S", "A", "B"};
    std::vector<Production> ps;
    const int count = std::uniform_int_distribution<int>(2, 6)(rng);
    for (int i = 0; i < count; ++i) {
        const std::string lhs = i == 0 ? "S" : names[rng() % 3];
        const int shape = static_cast<int>(rng() % 6);
        const Symbol t = letters[rng() % letters.size()];
        if (shape == 0)
            ps.push_back({lhs, {}});
        else if (shape == 1)
            ps.push_back({lhs, {t}});
        else
            ps.push_back({lhs, {t, Nonterminal{names[rng() % 3]}}});
    }
    return Grammar("S", std::move(ps), sigma);
}

}  // namespace

TEST(Okc, EveryLetterPeriodAcceptsEverything) {
    const Alphabet sigma = parse_alphabet("0 1");
    const auto p = okc_to_bpda(OmegaKC{{{eps_grammar(sigma), letters_grammar(sigma)}}});
    for (const char* w : {"| 0", "| 1", "0 1 1 | 0 1", "1 | 1 0 0"}) EXPECT_TRUE(bpda_member(p, L(w))) << w;
}

TEST(Okc, B2FormMatchesBuchiB2) {
    const auto p = okc_to_bpda(b2_okc());
    const BuchiFA b2 = build_B2();
    EXPECT_FALSE(bpda_member(p, L("| 0")));
    EXPECT_TRUE(bpda_member(p, L("| 0 1")));
    const std::vector<Symbol> letters = {k0, k1};
    std::vector<Word> words;
    ocfl::reference::for_each_word(letters, 4, [&](const Word& w) { words.push_back(w); });
    for (const auto& u : words)
        for (const auto& v : words) {
            if (v.empty()) continue;
            const LassoWord w(u, v);
            ASSERT_EQ(bpda_member(p, w), buchi_member(b2, w)) << to_string(w);
        }
}

TEST(Okc, SingleWordComponents) {
    const Alphabet sigma = parse_alphabet("a b");
    const auto p = okc_to_bpda(OmegaKC{{{singleton_grammar(parse_word("a"), sigma),
                                         singleton_grammar(parse_word("b"), sigma)}}});
    EXPECT_TRUE(bpda_member(p, L("a | b")));
    EXPECT_TRUE(bpda_member(p, L("a b | b")));
    EXPECT_FALSE(bpda_member(p, L("| b")));
    EXPECT_FALSE(bpda_member(p, L("a a | b")));
    EXPECT_FALSE(bpda_member(p, L("| a b")));
    EXPECT_FALSE(bpda_member(p, L("a | b a")));
}

TEST(Okc, EmptyPeriodComponentIsDroppedWithWarning) {
    const Alphabet sigma = parse_alphabet("a b");
    std::vector<std::string> warnings;
    const auto p = okc_to_bpda(OmegaKC{{{eps_grammar(sigma), eps_grammar(sigma)},
                                        {eps_grammar(sigma), letters_grammar(sigma)}}},
                               &warnings);
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("component 1"), std::string::npos);
    EXPECT_TRUE(bpda_member(p, L("| a")));
}

TEST(MullerToBuchi, Examples) {
    const Alphabet sigma = parse_alphabet("x y");
    const Symbol x = Symbol::base("x");
    const auto empty = PushdownAutomaton::muller({"q0"}, sigma, {"Z0"}, 0, 0, {{0, x, 0, 0, {0}}}, {});
    const auto converted = muller_to_buchi_pda(empty);
    EXPECT_EQ(converted.acceptance(), Acceptance::Buchi);
    EXPECT_FALSE(bpda_member(converted, L("| x")));
    const auto xs = PushdownAutomaton::muller({"q0"}, sigma, {"Z0"}, 0, 0, {{0, x, 0, 0, {0}}}, {{{0}, {}}});
    EXPECT_TRUE(bpda_member(xs, L("| x")));
    EXPECT_FALSE(bpda_member(xs, L("| x y")));
}

TEST(MullerToBuchi, ExactSetsMatter) {
    // Last letter tracker on {x, y}; table {{qx}} means eventually only x.
    const Alphabet sigma = parse_alphabet("x y");
    const Symbol x = Symbol::base("x"), y = Symbol::base("y");
    std::vector<PdaRule> rules;
    for (int q = 0; q < 2; ++q) {
        rules.push_back({q, x, 0, 0, {0}});
        rules.push_back({q, y, 0, 1, {0}});
    }
    const auto m = PushdownAutomaton::muller({"qx", "qy"}, sigma, {"Z0"}, 0, 0, rules, {{{0}, {}}});
    EXPECT_TRUE(bpda_member(m, L("y y | x")));
    EXPECT_FALSE(bpda_member(m, L("| x y")));
    EXPECT_FALSE(bpda_member(m, L("| y")));
    const auto both = PushdownAutomaton::muller({"qx", "qy"}, sigma, {"Z0"}, 0, 0, rules, {{{0}, {1}}});
    EXPECT_TRUE(bpda_member(both, L("| x y")));
    EXPECT_TRUE(bpda_member(both, L("| x")));
    EXPECT_FALSE(bpda_member(both, L("| y")));
}

TEST(MullerToBuchi, PreservesVerdictsOfOkcOutput) {
    const auto p = okc_to_bpda(b2_okc());
    const auto m = as_muller(p);
    std::mt19937_64 rng(31);
    const std::vector<Symbol> letters = {k0, k1};
    for (int i = 0; i < 40; ++i) {
        const auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        ASSERT_EQ(bpda_member(p, w), bpda_member(m, w)) << to_string(w);
    }
}

TEST(Product, Examples) {
    const auto zeros = loop_acceptor(parse_alphabet("0 1"), parse_alphabet("0"));
    EXPECT_TRUE(buchi_pds_nonempty(product_with_lasso(zeros, L("| 0"))));
    EXPECT_FALSE(buchi_pds_nonempty(product_with_lasso(zeros, L("| 1"))));
    const auto b2 = okc_to_bpda(b2_okc());
    EXPECT_TRUE(buchi_pds_nonempty(product_with_lasso(b2, L("| 0 1"))));
}

TEST(Product, StalledRunsDoNotCount) {
    // Final state with a lambda self-loop: reading only a prefix must not be accepted.
    const Alphabet sigma = parse_alphabet("a b");
    std::vector<PdaRule> rules = {{0, Symbol::base("a"), 0, 1, {0}}, {1, std::nullopt, 0, 1, {0}}};
    const auto p = PushdownAutomaton::buchi({"p", "f"}, sigma, {"Z0"}, 0, 0, rules, {1});
    EXPECT_FALSE(bpda_member(p, L("a | b")));
    // Lambda-pumping the stack forever is not a complete run either.
    std::vector<PdaRule> grow = {{0, Symbol::base("a"), 0, 1, {0}}, {1, std::nullopt, 0, 1, {0, 0}}};
    const auto g = PushdownAutomaton::buchi({"p", "f"}, sigma, {"Z0"}, 0, 0, grow, {1});
    EXPECT_FALSE(bpda_member(g, L("a | a")));
}

TEST(Product, RejectsForeignLetters) {
    const auto p = okc_to_bpda(b2_okc());
    EXPECT_THROW(bpda_member(p, L("| 2")), Error);
}

TEST(Emptiness, Examples) {
    BuchiPds none;
    none.state_count = 1;
    none.stack_count = 1;
    none.finals = {true};
    EXPECT_FALSE(buchi_pds_nonempty(none));
    BuchiPds loop = none;
    loop.rules.push_back({0, 0, 0, {0}});
    EXPECT_TRUE(buchi_pds_nonempty(loop));
    // Pushing forever through a final state.
    BuchiPds grow = none;
    grow.rules.push_back({0, 0, 0, {0, 0}});
    EXPECT_TRUE(buchi_pds_nonempty(grow));
    // Final state only visited a bounded number of times: push once, then pop to death.
    BuchiPds dies;
    dies.state_count = 2;
    dies.stack_count = 2;
    dies.finals = {true, false};
    dies.rules = {{0, 0, 1, {1, 0}}, {1, 1, 1, {}}};
    EXPECT_FALSE(buchi_pds_nonempty(dies));
}

TEST(Emptiness, LongPushesAreSplit) {
    // q0 pushes three symbols, then a final loop needs to pop two of them.
    BuchiPds s;
    s.state_count = 3;
    s.stack_count = 3;
    s.finals = {false, false, true};
    s.rules = {{0, 0, 1, {1, 2, 0}}, {1, 1, 1, {}}, {1, 2, 2, {2}}, {2, 2, 2, {2}}};
    EXPECT_TRUE(buchi_pds_nonempty(s));
    EXPECT_TRUE(ocfl::reference::exhaustive_pds_nonempty(s, 6));
}

TEST(Emptiness, AgreesWithExhaustiveSearchOnLayeredSystems) {
    std::mt19937_64 rng(37);
    int positive = 0;
    for (int i = 0; i < 400; ++i) {
        const int states = 1 + static_cast<int>(rng() % 4);
        const auto s = ocfl::reference::random_layered_pds(rng, states, 6, 1 + i % 2);
        const bool want = ocfl::reference::exhaustive_pds_nonempty(s, 6);
        positive += want;
        ASSERT_EQ(buchi_pds_nonempty(s), want) << "system " << i;
    }
    EXPECT_GT(positive, 40);
    EXPECT_LT(positive, 360);
}

TEST(Union, AcceptsBoth) {
    const Alphabet sigma = parse_alphabet("a b");
    const auto as = loop_acceptor(sigma, parse_alphabet("a"));
    const auto bs = loop_acceptor(sigma, parse_alphabet("b"));
    const auto u = bpda_union(as, bs);
    EXPECT_TRUE(bpda_member(u, L("| a")));
    EXPECT_TRUE(bpda_member(u, L("| b")));
    EXPECT_FALSE(bpda_member(u, L("| a b")));
    EXPECT_FALSE(bpda_member(u, L("a | b")));
}

TEST(Intersect, WithB2) {
    const Alphabet sigma = parse_alphabet("0 1");
    const auto all = loop_acceptor(sigma, sigma);
    const auto p = bpda_intersect_buchi(all, build_B2());
    std::mt19937_64 rng(41);
    const std::vector<Symbol> letters = {k0, k1};
    for (int i = 0; i < 40; ++i) {
        const auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        ASSERT_EQ(bpda_member(p, w), buchi_member(build_B2(), w)) << to_string(w);
    }
    // Words with finitely many 0s, intersected with B2, on 0^omega.
    BuchiFA finitely_many_zeros({"s", "t"}, sigma, 0, {1},
                                {{0, k0, 0}, {0, k1, 0}, {0, k1, 1}, {1, k1, 1}});
    const auto q = bpda_intersect_buchi(okc_to_bpda(b2_okc()), finitely_many_zeros);
    EXPECT_FALSE(bpda_member(q, L("| 0")));
    EXPECT_TRUE(bpda_member(q, L("0 0 | 1")));
    EXPECT_FALSE(bpda_member(q, L("| 0 1")));
}

TEST(Intersect, NeedsBothFinalsInfinitelyOften) {
    // p: final after each a; r: final after each b.  (a b)^w accepted, a^w and b^w are not.
    const Alphabet sigma = parse_alphabet("a b");
    const Symbol a = Symbol::base("a"), b = Symbol::base("b");
    std::vector<PdaRule> rules;
    for (int q = 0; q < 2; ++q) {
        rules.push_back({q, a, 0, 1, {0}});
        rules.push_back({q, b, 0, 0, {0}});
    }
    const auto p = PushdownAutomaton::buchi({"n", "f"}, sigma, {"Z0"}, 0, 0, rules, {1});
    BuchiFA r({"n", "f"}, sigma, 0, {1}, {{0, a, 0}, {0, b, 1}, {1, a, 0}, {1, b, 1}});
    const auto i = bpda_intersect_buchi(p, r);
    EXPECT_TRUE(bpda_member(i, L("| a b")));
    EXPECT_FALSE(bpda_member(i, L("| a")));
    EXPECT_FALSE(bpda_member(i, L("| b")));
    EXPECT_TRUE(bpda_member(i, L("b | a a b")));
}

TEST(PushdownProperties, OkcRoundTripAgreesWithCutSearch) {
    std::mt19937_64 rng(43);
    const Alphabet sigma = parse_alphabet("x y");
    const std::vector<Symbol> letters(sigma.begin(), sigma.end());
    int accepted = 0, total = 0;
    for (int i = 0; i < 60; ++i) {
        OmegaKC okc;
        const int parts = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < parts; ++k)
            okc.pairs.push_back({random_right_linear(rng, sigma), random_right_linear(rng, sigma)});
        const auto p = okc_to_bpda(okc);
        for (int k = 0; k < 15; ++k) {
            const auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
            const bool want = ocfl::reference::okc_member_by_cuts(okc, w, 6);
            accepted += want;
            ++total;
            ASSERT_EQ(bpda_member(p, w), want) << "okc " << i << " word " << to_string(w);
        }
    }
    EXPECT_GT(accepted, total / 20);
}

TEST(PushdownProperties, PeriodDoublingKeepsVerdict) {
    std::mt19937_64 rng(47);
    const auto p = okc_to_bpda(b2_okc());
    const std::vector<Symbol> letters = {k0, k1};
    for (int i = 0; i < 60; ++i) {
        const auto w = ocfl::reference::random_lasso(rng, letters, 5, 5);
        Word vv = w.period();
        vv.insert(vv.end(), w.period().begin(), w.period().end());
        ASSERT_EQ(bpda_member(p, w), bpda_member(p, LassoWord(w.prefix(), vv))) << to_string(w);
    }
}

TEST(PushdownAutomaton, ValidatesReferences) {
    const Alphabet sigma = parse_alphabet("a");
    EXPECT_THROW(PushdownAutomaton::buchi({"q"}, sigma, {"Z0"}, 0, 0, {{0, std::nullopt, 1, 0, {}}}, {}),
                 Error);
    EXPECT_THROW(PushdownAutomaton::buchi({"q"}, sigma, {"Z0"}, 0, 0, {{0, Symbol::base("b"), 0, 0, {}}}, {}),
                 Error);
    EXPECT_THROW(PushdownAutomaton::buchi({"q"}, sigma, {"Z0"}, 1, 0, {}, {}), Error);
    EXPECT_THROW(PushdownAutomaton::muller({"q"}, sigma, {"Z0"}, 0, 0, {}, {{{}, {0}}}), Error);
}
