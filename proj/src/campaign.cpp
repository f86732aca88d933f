#include "ocfl/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "ocfl/reference.hpp"

namespace ocfl::campaign {

namespace {

std::vector<Symbol> syms(const char* text) {
    const Word w = parse_word(text);
    return {w.begin(), w.end()};
}

const Symbol kA = Symbol::base("a");
const Symbol kB = Symbol::base("b");

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& one_of(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[pick(rng, 0, v.size() - 1)];
}

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool fits(const LassoWord& w, std::size_t max_u, std::size_t max_v) {
    return w.prefix().size() <= max_u && w.period().size() <= max_v;
}

// Random element of L3 over `letters` with eraser e.
Word random_l3(std::mt19937_64& rng, const std::vector<Symbol>& letters, const Symbol& e, int depth) {
    if (depth == 0 || chance(rng, 0.45)) return {};
    Word w{one_of(rng, letters)};
    w = cat(w, random_l3(rng, letters, e, depth - 1));
    w.push_back(e);
    return cat(w, random_l3(rng, letters, e, depth - 1));
}

// Inserts L3 blocks before letters of x (and possibly at its end).
Word insert_blocks(std::mt19937_64& rng, const Word& x, const std::vector<Symbol>& letters,
                   const Symbol& e, int depth, double p) {
    Word out;
    for (const auto& s : x) {
        if (chance(rng, p)) out = cat(out, random_l3(rng, letters, e, depth));
        out.push_back(s);
    }
    return out;
}

LassoWord random_b2(std::mt19937_64& rng, std::size_t max_u, std::size_t max_v) {
    const auto bits = syms("0 1");
    Word u = reference::random_word(rng, bits, 0, max_u);
    Word v = reference::random_word(rng, bits, 1, max_v);
    if (std::count(v.begin(), v.end(), Symbol::base("1")) == 0) v[pick(rng, 0, v.size() - 1)] = Symbol::base("1");
    return LassoWord(std::move(u), std::move(v));
}

// A coded group with the given exponents.
Word group(int b, int c, int d, int e) {
    Word w{Symbol::coding(Coding::Alpha)};
    const int counts[4] = {b, c, d, e};
    const Coding letters[4] = {Coding::B, Coding::C, Coding::D, Coding::E};
    for (int k = 0; k < 4; ++k) w.insert(w.end(), static_cast<std::size_t>(counts[k]), Symbol::coding(letters[k]));
    w.push_back(Symbol::coding(Coding::Beta));
    return w;
}

// Random items of R: letters of X_A and groups, well formed with probability `good`.
Word random_items(std::mt19937_64& rng, std::size_t items, int max_exp, double good) {
    const auto base = syms("0 1 a b");
    Word w;
    for (std::size_t i = 0; i < items; ++i) {
        if (chance(rng, 0.6)) {
            w.push_back(one_of(rng, base));
            continue;
        }
        auto e = [&] { return static_cast<int>(pick(rng, 1, static_cast<std::size_t>(max_exp))); };
        if (chance(rng, good)) {
            const int j = e();
            w = cat(w, group(j, j, j, j));
        } else {
            w = cat(w, group(e(), e(), e(), e()));
        }
    }
    return w;
}

Word marker_prefix(int n) {
    Word w(static_cast<std::size_t>(n), kA);
    w.push_back(kB);
    return w;
}

// --- abullet samplers ------------------------------------------------------------------------

// Sup member with |u|, |v| <= 10: a^n b followed by an encoded member of B2^(~.n).  With the size
// bound no ~2 group (10 letters) fits next to a letter it could erase, so only ~1 occurs.
LassoWord sample_sup_bounded(std::mt19937_64& rng) {
    for (;;) {
        const int n = static_cast<int>(pick(rng, 1, 2));
        const LassoWord y = random_b2(rng, 3, 3);
        const auto bits = syms("0 1");
        const Symbol e1 = Symbol::eraser(1);
        LassoWord x(insert_blocks(rng, y.prefix(), bits, e1, 2, 0.3),
                    insert_blocks(rng, y.period(), bits, e1, 1, 0.4));
        const EraserCodec codec(n, parse_alphabet("0 1 a b"));
        const LassoWord coded(cat(marker_prefix(n), codec.encode(x.prefix())), codec.encode(x.period()));
        if (fits(coded, 10, 10)) return coded;
    }
}

// Sup member without size bound, n <= 2, may use ~2.
LassoWord sample_sup_unbounded(std::mt19937_64& rng) {
    const int n = static_cast<int>(pick(rng, 1, 2));
    const LassoWord x = random_exponentiated_b2(rng, n, 2);
    const EraserCodec codec(n, parse_alphabet("0 1 a b"));
    return prepend(marker_prefix(n), codec.encode_lasso(x));
}

// In R with a guard pattern: a malformed group or a group of rank > n.
LassoWord sample_guard(std::mt19937_64& rng) {
    for (;;) {
        const int n = static_cast<int>(pick(rng, 1, 2));
        Word bad;
        if (n == 1 && chance(rng, 0.4)) {
            bad = group(2, 2, 2, 2);
        } else {
            int e[4];
            do {
                for (int& k : e) k = static_cast<int>(pick(rng, 1, 2));
            } while (e[0] == e[1] && e[1] == e[2] && e[2] == e[3]);
            bad = group(e[0], e[1], e[2], e[3]);
        }
        Word u = marker_prefix(n);
        Word v = random_items(rng, pick(rng, 1, 3), 1, 0.8);
        if (chance(rng, 0.5)) {
            u = cat(cat(u, random_items(rng, pick(rng, 0, 1), 1, 1.0)), bad);
        } else {
            const std::size_t at = pick(rng, 0, v.size());
            v.insert(v.begin() + static_cast<std::ptrdiff_t>(at), bad.begin(), bad.end());
        }
        const LassoWord w(u, v);
        if (fits(w, 10, 10)) return w;
    }
}

// Mostly outside R: uniform words over X^box, or a near miss of an R-shaped word.
LassoWord sample_fail_r(std::mt19937_64& rng) {
    const auto box = syms("0 1 a b [ B C D E ]");
    if (chance(rng, 0.5)) return reference::random_lasso(rng, box, 10, 10);
    for (;;) {
        LassoWord w = chance(rng, 0.5) ? sample_sup_bounded(rng) : sample_guard(rng);
        Word u = w.prefix(), v = w.period();
        Word& target = (chance(rng, 0.5) && !u.empty()) ? u : v;
        const std::size_t at = pick(rng, 0, target.size() - 1);
        if (chance(rng, 0.5)) {
            target[at] = one_of(rng, box);
        } else {
            target.erase(target.begin() + static_cast<std::ptrdiff_t>(at));
        }
        if (v.empty()) continue;
        return LassoWord(u, v);
    }
}

// R-shaped with well-formed codes: a^n b then items.
LassoWord sample_other(std::mt19937_64& rng) {
    for (;;) {
        const int n = static_cast<int>(pick(rng, 1, 2));
        const LassoWord w(cat(marker_prefix(n), random_items(rng, pick(rng, 0, 3), 1, 1.0)),
                          random_items(rng, pick(rng, 1, 4), 1, 1.0));
        if (fits(w, 10, 10)) return w;
    }
}

const AbulletSpec& b2spec() {
    static const AbulletSpec spec = AbulletSpec::b2();
    return spec;
}

// x over {0,1,~1..~n}, |u|, |v| <= 10; half built as members.
LassoWord sample_erasers(std::mt19937_64& rng, int n) {
    if (chance(rng, 0.5)) {
        std::string letters = "0 1";
        for (int j = 1; j <= n; ++j) letters += " ~" + std::to_string(j);
        return reference::random_lasso(rng, syms(letters.c_str()), 10, 10);
    }
    for (;;) {
        const LassoWord x = random_exponentiated_b2(rng, n, 2);
        if (fits(x, 10, 10)) return x;
    }
}

LassoWord sample_closing(std::mt19937_64& rng) {
    const auto xa = syms("0 1 a b");
    if (chance(rng, 0.4)) return reference::random_lasso(rng, xa, 8, 8);
    const LassoWord y = chance(rng, 0.7) ? random_b2(rng, 5, 5) : reference::random_lasso(rng, xa, 5, 5);
    return prepend(marker_prefix(static_cast<int>(pick(rng, 1, 2))), y);
}

// --- suites ----------------------------------------------------------------------------------

SuiteReport start(std::string name, std::uint64_t seed) {
    SuiteReport r;
    r.name = std::move(name);
    r.seed = seed;
    return r;
}

std::string verdict(bool b) { return b ? "true" : "false"; }

SuiteReport suite_erasure(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("erasure", seed);
    const Symbol e = Symbol::eraser(1);
    auto check = [&](const Word& x) {
        ++r.cases;
        const EraseOutcome got = erase_finite(x, e);
        const auto want = reference::naive_erase(x, e);
        const bool same = want ? got == EraseOutcome::finite(*want) : got.is_undefined();
        r.count(want ? "defined" : "undefined");
        if (!same)
            r.mismatch(to_string(x) + " erase_finite=" + to_string(got) + " pair-deletion=" +
                       (want ? "finite: " + to_string(*want) : "undefined"));
    };
    reference::for_each_word(syms("x ~1"), 10, check);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) check(reference::random_word(rng, syms("x y ~1"), 0, 20));
    return r;
}

// Depth-first sweep with an incremental parser.
void sweep(const std::vector<Symbol>& letters, std::size_t max_len, CykParser& parser, Word& w,
           const std::function<void(const Word&, bool)>& f) {
    f(w, parser.accepts());
    if (w.size() == max_len) return;
    for (const auto& s : letters) {
        w.push_back(s);
        parser.push(s);
        sweep(letters, max_len, parser, w, f);
        parser.pop();
        w.pop_back();
    }
}

SuiteReport suite_l3(std::uint64_t seed, std::size_t max_len) {
    SuiteReport r = start("l3", seed);
    const Symbol e = Symbol::eraser(1);
    const Grammar l3 = build_L3(parse_alphabet("x"), e);
    CykParser parser(l3);
    Word w;
    sweep(syms("x ~1"), max_len, parser, w, [&](const Word& x, bool in_grammar) {
        ++r.cases;
        const bool erases = erase_finite(x, e) == EraseOutcome::finite({});
        r.count(erases ? "in L3" : "not in L3");
        if (in_grammar != erases)
            r.mismatch(to_string(x) + " cfg=" + verdict(in_grammar) + " erasure=" + verdict(erases));
    });
    r.notes.push_back("exhaustive up to length " + std::to_string(max_len));
    return r;
}

SuiteReport suite_exponentiation(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("exponentiation", seed);
    const BuchiFA b2 = build_B2();
    std::vector<PushdownAutomaton> grammar_route, automaton_route;
    PushdownAutomaton p = pda_from_buchi(b2);
    for (int n = 1; n <= 2; ++n) {
        grammar_route.push_back(okc_to_bpda(iterate_exponentiation(b2_okc(), n)));
        p = exponentiate_mpda(p, Symbol::eraser(n));
        automaton_route.push_back(p);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const int n = 1 + static_cast<int>(i % 2);
        const LassoWord x = sample_erasers(rng, n);
        ++r.cases;
        const bool erase = member_A_approx_n(x, b2, n);
        const bool grammar = bpda_member(grammar_route[n - 1], x);
        const bool automaton = bpda_member(automaton_route[n - 1], x);
        r.count(std::string("n=") + std::to_string(n) + (erase ? " member" : " non-member"));
        if (grammar != erase || automaton != erase)
            r.mismatch(to_string(x) + " n=" + std::to_string(n) + " erase=" + verdict(erase) +
                       " grammar=" + verdict(grammar) + " automaton=" + verdict(automaton));
    }
    return r;
}

SuiteReport suite_pds(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("pds", seed);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const int states = 1 + static_cast<int>(rng() % 4);
        const BuchiPds s = reference::random_layered_pds(rng, states, 6, 1 + static_cast<int>(i % 2));
        ++r.cases;
        const bool want = reference::exhaustive_pds_nonempty(s, 6);
        const bool got = buchi_pds_nonempty(s);
        r.count(want ? "nonempty" : "empty");
        if (got != want)
            r.mismatch("system " + std::to_string(i) + " saturation=" + verdict(got) +
                       " exhaustive=" + verdict(want));
    }
    return r;
}

SuiteReport suite_abullet(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("abullet", seed);
    const auto& spec = b2spec();
    const PushdownAutomaton full = build_abullet_automaton(spec);
    std::mt19937_64 rng(seed);
    // A quarter of the slots per sampler.  The first three resample until the oracle label is
    // the one the slot asks for.
    const std::size_t quota = samples / 4;
    const char* targets[4] = {"sup", "guard", "fail-R", nullptr};
    for (std::size_t i = 0; i < samples; ++i) {
        LassoWord w = sample_other(rng);
        for (int tries = 0; tries < 1000; ++tries) {
            w = i % 4 == 0   ? sample_sup_bounded(rng)
                : i % 4 == 1 ? sample_guard(rng)
                : i % 4 == 2 ? sample_fail_r(rng)
                             : sample_other(rng);
            if (!targets[i % 4] || abullet_label(spec, w) == targets[i % 4]) break;
        }
        ++r.cases;
        const AbulletVerdict v = abullet_classify(spec, w);
        r.count(!v.in_R ? "fail-R" : v.sup ? "sup" : v.guard ? "guard" : "other");
        if (v.sup && v.guard) r.count("sup and guard");
        const bool got = bpda_member(full, w);
        if (got != v.member())
            r.mismatch(to_string(w) + " automaton=" + verdict(got) + " oracle=" + verdict(v.member()));
    }
    for (const char* label : {"sup", "guard", "fail-R"})
        if (r.count_of(label) < quota)
            r.shortfalls.push_back(std::string(label) + " " + std::to_string(r.count_of(label)) +
                                   " < " + std::to_string(quota));
    return r;
}

SuiteReport suite_sandwich(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("sandwich", seed);
    const auto& spec = b2spec();
    const PushdownAutomaton bm = build_abullet_mpda(spec);
    std::mt19937_64 rng(seed);
    std::size_t sup = 0, rejected = 0;
    for (std::size_t guard = 0; sup < samples && guard < 100 * samples; ++guard) {
        const LassoWord w = sample_sup_unbounded(rng);
        if (!abullet_classify(spec, w).sup) continue;
        ++sup;
        ++r.cases;
        r.count(w.prefix().size() > 1 && w.prefix()[1] == kA ? "sup n=2" : "sup n=1");
        if (!bpda_member(bm, w)) r.mismatch(to_string(w) + " in sup, rejected by B");
    }
    for (std::size_t guard = 0; rejected < samples && guard < 100 * samples; ++guard) {
        const LassoWord w = guard % 2 ? sample_other(rng) : sample_fail_r(rng);
        if (abullet_member_oracle(spec, w)) continue;
        ++rejected;
        ++r.cases;
        r.count("oracle-rejected");
        if (bpda_member(bm, w)) r.mismatch(to_string(w) + " outside A-bullet, accepted by B");
    }
    if (sup < samples) r.shortfalls.push_back("sup " + std::to_string(sup));
    if (rejected < samples) r.shortfalls.push_back("rejected " + std::to_string(rejected));
    return r;
}

SuiteReport suite_closing(std::uint64_t seed, std::size_t samples) {
    SuiteReport r = start("closing", seed);
    const auto& spec = b2spec();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const LassoWord w = sample_closing(rng);
        ++r.cases;
        // a^k b y, k >= 1, y over {0,1} with a 1 in the period.
        const Word head = unfold(w, w.prefix().size() + w.period().size());
        std::size_t k = 0;
        while (k < head.size() && head[k] == kA) ++k;
        bool want = false;
        if (k >= 1 && k < head.size() && head[k] == kB) {
            const Word tail(head.begin() + static_cast<std::ptrdiff_t>(k) + 1, head.end());
            Word period_letters = w.period();
            auto bit = [](const Symbol& s) { return s == Symbol::base("0") || s == Symbol::base("1"); };
            // Everything after b lies in the unfolded window or repeats the period.
            const bool tail_bits = std::all_of(tail.begin(), tail.end(), bit) &&
                                   std::all_of(period_letters.begin(), period_letters.end(), bit);
            want = tail_bits && std::count(period_letters.begin(), period_letters.end(), Symbol::base("1")) > 0;
        }
        const bool got = abullet_member_oracle(spec, w);
        r.count(want ? "a+ b B2" : "other");
        if (got != want) r.mismatch(to_string(w) + " oracle=" + verdict(got) + " direct=" + verdict(want));
    }
    return r;
}

// Words of length exactly `len` extending w; false once the deadline passes.
bool sweep_level(const std::vector<Symbol>& letters, std::size_t len, CykParser& parser, Word& w,
                 const std::function<void(const Word&, bool)>& f,
                 std::chrono::steady_clock::time_point deadline) {
    if (w.size() == len) {
        f(w, parser.accepts());
        return true;
    }
    if (w.size() + 2 == len && std::chrono::steady_clock::now() > deadline) return false;
    for (const auto& s : letters) {
        w.push_back(s);
        parser.push(s);
        const bool more = sweep_level(letters, len, parser, w, f, deadline);
        parser.pop();
        w.pop_back();
        if (!more) return false;
    }
    return true;
}

SuiteReport suite_guards(std::uint64_t seed, std::size_t samples, std::size_t max_len,
                         std::optional<std::chrono::seconds> budget) {
    SuiteReport r = start("guards", seed);
    const Alphabet base = parse_alphabet("a b");
    const Grammar g = build_L_guards(base, kA, kB);
    const Alphabet boxed = boxed_alphabet(base);
    const std::vector<Symbol> box(boxed.begin(), boxed.end());
    auto compare = [&](const Word& x, bool in_grammar) {
        ++r.cases;
        const bool direct = in_L_direct(x, kA, kB);
        r.count(direct ? "in L" : "not in L");
        if (direct != in_grammar)
            r.mismatch(to_string(x) + " scanner=" + verdict(direct) + " grammar=" + verdict(in_grammar));
    };
    CykParser parser(g);
    Word w;
    const auto deadline = budget ? std::chrono::steady_clock::now() + *budget
                                 : std::chrono::steady_clock::time_point::max();
    std::size_t complete = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!sweep_level(box, len, parser, w, compare, deadline)) {
            r.shortfalls.push_back("exhaustive sweep complete through length " + std::to_string(complete) +
                                   ", stopped in length " + std::to_string(len) + " after " +
                                   std::to_string(budget->count()) + " s");
            break;
        }
        complete = len;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        // Half uniform, half a^n b followed by group-shaped material.
        Word x;
        if (i % 2 == 0) {
            x = reference::random_word(rng, box, 0, 20);
        } else {
            x = marker_prefix(static_cast<int>(pick(rng, 1, 2)));
            while (x.size() < 20 && chance(rng, 0.8)) {
                if (chance(rng, 0.3)) {
                    x.push_back(one_of(rng, box));
                } else {
                    const Word gr = group(static_cast<int>(pick(rng, 1, 3)), static_cast<int>(pick(rng, 1, 3)),
                                          static_cast<int>(pick(rng, 1, 3)), static_cast<int>(pick(rng, 1, 3)));
                    x = cat(x, gr);
                }
            }
            x.resize(std::min<std::size_t>(x.size(), 20), kA);
        }
        compare(x, cfg_member(g, x));
    }
    r.notes.push_back("exhaustive up to length " + std::to_string(complete) + " over " +
                      std::to_string(box.size()) + " letters, then " + std::to_string(samples) +
                      " random words of length <= 20");
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------------------------

void SuiteReport::count(const std::string& label, std::size_t k) {
    for (auto& [l, v] : counts)
        if (l == label) {
            v += k;
            return;
        }
    counts.emplace_back(label, k);
}

std::size_t SuiteReport::count_of(const std::string& label) const {
    for (const auto& [l, v] : counts)
        if (l == label) return v;
    return 0;
}

void SuiteReport::mismatch(std::string what) {
    ++mismatches;
    if (!counterexample) counterexample = std::move(what);
}

std::string format_report(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite " << r.name << "\n";
    out << "seed " << r.seed << "\n";
    out << "cases " << r.cases << "\n";
    out << "agree " << r.cases - r.mismatches << "\n";
    out << "mismatches " << r.mismatches << "\n";
    for (const auto& [label, k] : r.counts) out << "count " << label << " " << k << "\n";
    for (const auto& s : r.shortfalls) out << "shortfall " << s << "\n";
    for (const auto& n : r.notes) out << "note " << n << "\n";
    if (r.counterexample) out << "counterexample " << *r.counterexample << "\n";
    out << "result " << (r.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"erasure", "l3",      "exponentiation", "pds",
                                                   "abullet", "sandwich", "closing",        "guards"};
    return names;
}

std::size_t default_samples(const std::string& suite) {
    static const std::map<std::string, std::size_t> d = {
        {"erasure", 1000}, {"l3", 0},        {"exponentiation", 200}, {"pds", 100},
        {"abullet", 200},  {"sandwich", 50}, {"closing", 200},        {"guards", 1000}};
    auto it = d.find(suite);
    if (it == d.end()) throw Error("unknown suite '" + suite + "'");
    return it->second;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> samples) {
    const std::size_t k = samples.value_or(default_samples(suite));
    if (suite == "erasure") return suite_erasure(seed, k);
    if (suite == "l3") return suite_l3(seed, 12);
    if (suite == "exponentiation") return suite_exponentiation(seed, k);
    if (suite == "pds") return suite_pds(seed, k);
    if (suite == "abullet") return suite_abullet(seed, k);
    if (suite == "sandwich") return suite_sandwich(seed, k);
    if (suite == "closing") return suite_closing(seed, k);
    if (suite == "guards") return suite_guards(seed, k, 8, std::nullopt);
    throw Error("unknown suite '" + suite + "'");
}

SuiteReport run_guards(std::uint64_t seed, std::size_t samples, std::size_t max_len,
                       std::optional<std::chrono::seconds> budget) {
    return suite_guards(seed, samples, max_len, budget);
}

// ---------------------------------------------------------------------------------------------

LassoWord random_exponentiated_b2(std::mt19937_64& rng, int n, int depth) {
    LassoWord x = random_b2(rng, 3, 3);
    std::vector<Symbol> letters = syms("0 1");
    for (int j = 1; j <= n; ++j) {
        const Symbol e = Symbol::eraser(j);
        x = LassoWord(insert_blocks(rng, x.prefix(), letters, e, depth, 0.3),
                      insert_blocks(rng, x.period(), letters, e, depth, 0.3));
        letters.push_back(e);
    }
    return normalize(x);
}

std::string abullet_label(const AbulletSpec& spec, const LassoWord& w) {
    const AbulletVerdict v = abullet_classify(spec, w);
    return !v.in_R ? "fail-R" : v.sup ? "sup" : v.guard ? "guard" : "other";
}

const std::vector<std::string>& sampler_names() {
    static const std::vector<std::string> names = {"sup",      "guard",    "fail-R", "other",
                                                   "erasers1", "erasers2", "closing"};
    return names;
}

std::vector<LabeledWord> sample_words(const std::string& sampler, std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<LabeledWord> out;
    const BuchiFA b2 = build_B2();
    for (std::size_t i = 0; i < count; ++i) {
        if (sampler == "erasers1" || sampler == "erasers2") {
            const int n = sampler == "erasers1" ? 1 : 2;
            const LassoWord x = sample_erasers(rng, n);
            out.push_back({x, member_A_approx_n(x, b2, n) ? "member" : "non-member"});
            continue;
        }
        LassoWord w = sampler == "sup"      ? sample_sup_bounded(rng)
                      : sampler == "guard"  ? sample_guard(rng)
                      : sampler == "fail-R" ? sample_fail_r(rng)
                      : sampler == "other"  ? sample_other(rng)
                      : sampler == "closing"
                          ? sample_closing(rng)
                          : throw Error("unknown sampler '" + sampler + "'");
        out.push_back({w, abullet_member_oracle(b2spec(), w) ? abullet_label(b2spec(), w) + " member"
                                                              : abullet_label(b2spec(), w) + " non-member"});
    }
    return out;
}

}  // namespace ocfl::campaign
