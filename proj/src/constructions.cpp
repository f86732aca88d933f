#include "ocfl/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ocfl {

namespace {

const Symbol kAlpha = Symbol::coding(Coding::Alpha);
const Symbol kBeta = Symbol::coding(Coding::Beta);
const Symbol kB = Symbol::coding(Coding::B);
const Symbol kC = Symbol::coding(Coding::C);
const Symbol kD = Symbol::coding(Coding::D);
const Symbol kE = Symbol::coding(Coding::E);

// The omega-word with its first k letters removed.
LassoWord drop(const LassoWord& w, std::size_t k) {
    const Word& u = w.prefix();
    const Word& v = w.period();
    if (k <= u.size()) return LassoWord(Word(u.begin() + static_cast<std::ptrdiff_t>(k), u.end()), v);
    const auto r = static_cast<std::ptrdiff_t>((k - u.size()) % v.size());
    Word rot(v.begin() + r, v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + r);
    return LassoWord({}, std::move(rot));
}

// Length of the leading a-block, or nullopt for a^omega.
std::optional<std::size_t> leading_run(const LassoWord& w, const Symbol& a) {
    const std::size_t horizon = w.prefix().size() + w.period().size();
    for (std::size_t i = 1; i <= horizon; ++i)
        if (index(w, i) != a) return i - 1;
    return std::nullopt;
}

std::string fresh(std::string name, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
    return name;
}

}  // namespace

// ---------------------------------------------------------------------------------------------

EraserCodec::EraserCodec(int n, Alphabet base) : n_(n), base_(std::move(base)) {
    if (n_ < 1) throw Error("codec rank must be >= 1");
    for (const auto& s : base_)
        if (!s.is_base()) throw Error("codec base alphabet holds a non-base letter " + s.str());
}

Word EraserCodec::encode(std::span<const Symbol> x) const {
    Word out;
    for (const auto& s : x) {
        if (s.is_base()) {
            if (!base_.contains(s)) throw Error("letter " + s.str() + " is not in X_A");
            out.push_back(s);
            continue;
        }
        if (!s.is_eraser()) throw Error("cannot encode coding letter " + s.str());
        const int j = s.rank();
        if (j > n_)
            throw Error("eraser " + s.str() + " exceeds codec rank " + std::to_string(n_));
        out.push_back(kAlpha);
        for (const auto& c : {kB, kC, kD, kE}) out.insert(out.end(), static_cast<std::size_t>(j), c);
        out.push_back(kBeta);
    }
    return out;
}

LassoWord EraserCodec::encode_lasso(const LassoWord& x) const {
    return normalize(LassoWord(encode(x.prefix()), encode(x.period())));
}

std::variant<LassoWord, DecodeFailure> EraserCodec::decode_lasso(const LassoWord& w) const {
    const std::size_t lu = w.prefix().size();
    const std::size_t lv = w.period().size();
    auto at = [&](std::size_t pos) -> const Symbol& { return index(w, pos + 1); };
    auto fail = [](std::size_t pos, std::string why) {
        return DecodeFailure{pos + 1, std::move(why)};
    };
    // Phase of the first item boundary seen in the periodic part -> (position, item count).
    std::map<std::size_t, std::size_t> seen;
    Word items;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= lu) {
            const std::size_t phase = (pos - lu) % lv;
            auto it = seen.find(phase);
            if (it != seen.end()) {
                const auto k = static_cast<std::ptrdiff_t>(it->second);
                return normalize(LassoWord(Word(items.begin(), items.begin() + k),
                                           Word(items.begin() + k, items.end())));
            }
            seen.emplace(phase, items.size());
        }
        const Symbol& s = at(pos);
        if (s.is_base()) {
            if (!base_.contains(s)) return fail(pos, "letter " + s.str() + " is not in X_A");
            items.push_back(s);
            ++pos;
            continue;
        }
        if (s.is_eraser()) return fail(pos, "eraser " + s.str() + " in a coded word");
        if (s != kAlpha) return fail(pos, "stray coding letter " + s.str());
        const std::size_t start = pos++;
        std::size_t counts[4] = {0, 0, 0, 0};
        const Symbol blocks[4] = {kB, kC, kD, kE};
        for (int k = 0; k < 4; ++k) {
            while (at(pos) == blocks[k]) {
                ++counts[k];
                ++pos;
                // A group covering a whole period inside the periodic part never ends.
                if (pos >= lu && pos - std::max(start, lu) > lv)
                    return fail(start, "incomplete group");
            }
            if (counts[k] == 0) {
                if (at(pos) == kAlpha) return fail(start, "incomplete group");
                return fail(pos, "malformed group: expected " + blocks[k].str() + ", got " +
                                     at(pos).str());
            }
        }
        if (at(pos) != kBeta) {
            if (at(pos) == kAlpha) return fail(start, "incomplete group");
            return fail(pos, "malformed group: expected ], got " + at(pos).str());
        }
        ++pos;
        if (counts[0] != counts[1] || counts[1] != counts[2] || counts[2] != counts[3])
            return fail(start, "mismatched exponents " + std::to_string(counts[0]) + "," +
                                   std::to_string(counts[1]) + "," + std::to_string(counts[2]) +
                                   "," + std::to_string(counts[3]));
        if (counts[0] > static_cast<std::size_t>(n_))
            return fail(start, "rank " + std::to_string(counts[0]) + " > n = " + std::to_string(n_));
        items.push_back(Symbol::eraser(static_cast<int>(counts[0])));
    }
}

// ---------------------------------------------------------------------------------------------

AbulletSpec::AbulletSpec(const BuchiFA& a, Symbol a_marker, Symbol b_marker)
    : a_(buchi_to_muller(a)), a_marker_(std::move(a_marker)), b_marker_(std::move(b_marker)) {
    validate();
}

AbulletSpec::AbulletSpec(MullerFA a, Symbol a_marker, Symbol b_marker)
    : a_(std::move(a)), a_marker_(std::move(a_marker)), b_marker_(std::move(b_marker)) {
    validate();
}

AbulletSpec AbulletSpec::b2() {
    return AbulletSpec(build_B2_muller(parse_alphabet("0 1 a b")), Symbol::base("a"),
                       Symbol::base("b"));
}

void AbulletSpec::validate() const {
    const Alphabet& x = base();
    if (x.size() < 2) throw Error("X_A needs at least two letters");
    for (const auto& s : x)
        if (!s.is_base()) throw Error("X_A holds a non-base letter " + s.str());
    if (a_marker_ == b_marker_) throw Error("markers a and b must differ");
    if (!x.contains(a_marker_) || !x.contains(b_marker_))
        throw Error("markers a and b must be letters of X_A");
}

// ---------------------------------------------------------------------------------------------

OmegaKC exponentiate_okc(const OmegaKC& a, const Symbol& e) {
    const Alphabet x = a.alphabet();
    if (x.contains(e)) throw Error("eraser " + e.str() + " is already a letter");
    const Grammar l3 = build_L3(x, e);
    std::map<Symbol, Grammar> sub;
    for (const auto& c : x) sub.emplace(c, concat(l3, singleton_grammar(Word{c}, x)));
    Alphabet terms = x;
    terms.insert(e);
    auto lift = [&](const Grammar& g) {
        const Grammar s = substitute(g, sub);
        return Grammar(s.start(), s.productions(), terms);
    };
    OmegaKC out;
    for (const auto& [u, v] : a.pairs) out.pairs.emplace_back(lift(u), lift(v));
    return out;
}

OmegaKC iterate_exponentiation(const OmegaKC& a, int n) {
    if (n < 0) throw Error("iteration count must be >= 0");
    OmegaKC out = a;
    for (int k = 1; k <= n; ++k) out = exponentiate_okc(out, Symbol::eraser(k));
    return out;
}

OmegaKC b2_okc(const Alphabet& base) {
    const Symbol zero = Symbol::base("0"), one = Symbol::base("1");
    if (!base.contains(zero) || !base.contains(one)) throw Error("B2 needs letters 0 and 1");
    Grammar v("S", {{"S", {zero, Nonterminal{"S"}}}, {"S", {one}}}, base);
    return OmegaKC{{{singleton_grammar(Word{}, base), v}}};
}

// ---------------------------------------------------------------------------------------------

PushdownAutomaton exponentiate_mpda(const PushdownAutomaton& p_in, const Symbol& e) {
    const PushdownAutomaton p = muller_to_buchi_pda(p_in);
    if (p.inputs().contains(e)) throw Error("eraser " + e.str() + " is already a letter");
    PdaBuilder b;
    for (const auto& z : p.stack_symbols()) b.stack(z);
    const int mark = b.stack(fresh("M", p.stack_symbols()));
    const int item = b.stack(fresh("I", p.stack_symbols()));
    for (const auto& s : p.inputs()) b.input(s);
    b.input(e);
    b.bottom(p.bottom());

    // Control (q, flag, erasing).
    using Key = std::tuple<int, int, bool>;
    std::map<Key, int> ids;
    std::deque<Key> todo;
    auto id_of = [&](int q, int f, bool er) {
        const Key k{q, f, er};
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        std::string name = p.states()[q] + "/" + std::to_string(f);
        if (er) name += "/er";
        const int id = b.state(name);
        ids.emplace(k, id);
        if (f == 2 && !er) b.final_state(id);
        todo.push_back(k);
        return id;
    };
    b.initial(id_of(p.initial(), 0, false));
    while (!todo.empty()) {
        const auto [q, f, er] = todo.front();
        todo.pop_front();
        const int from = ids.at({q, f, er});
        if (er) {
            for (const auto& c : p.inputs())
                for (int top : {mark, item}) b.rule(from, c, top, from, {item, top});
            b.rule(from, e, item, from, {});
            b.rule(from, std::nullopt, mark, id_of(q, f, false), {});
            continue;
        }
        int g = f == 2 ? 0 : f;
        if (g == 0 && p.is_final(q)) g = 1;
        for (int ri : p.rules_from(q)) {
            const auto& r = p.rules()[ri];
            const int to = id_of(r.to, r.input ? (g == 1 ? 2 : g) : g, false);
            b.rule(from, r.input, r.pop, to, r.push);
        }
        for (int z = 0; z < p.stack_count(); ++z)
            b.rule(from, std::nullopt, z, id_of(q, g, true), {mark, z});
    }
    return b.build_buchi();
}

// ---------------------------------------------------------------------------------------------

bool prefix_in_L(const LassoWord& w, const Symbol& a, const Symbol& b) {
    const auto n = leading_run(w, a);
    if (!n) return false;
    const std::size_t lu = w.prefix().size();
    const std::size_t lv = w.period().size();
    const std::size_t k = lu + 2 * lv + *n + 2;
    const Word window = unfold(w, lu + k * lv);
    for (std::size_t len = 1; len <= window.size(); ++len)
        if (in_L_direct(std::span<const Symbol>(window.data(), len), a, b)) return true;
    return false;
}

AbulletVerdict abullet_classify(const AbulletSpec& spec, const LassoWord& w) {
    const Alphabet box = spec.boxed();
    for (const auto& s : letters(w))
        if (!box.contains(s)) throw Error("letter " + s.str() + " is outside X_A and the coding letters");
    AbulletVerdict v;
    v.in_R = buchi_member(build_R(spec.base(), spec.a(), spec.b()), w);
    if (!v.in_R) return v;
    v.guard = prefix_in_L(w, spec.a(), spec.b());
    const auto n = leading_run(w, spec.a());
    if (!n || *n == 0 || index(w, *n + 1) != spec.b()) return v;
    v.n = static_cast<int>(*n);
    const EraserCodec codec(v.n, spec.base());
    const auto decoded = codec.decode_lasso(drop(w, *n + 1));
    if (const auto* f = std::get_if<DecodeFailure>(&decoded)) {
        v.decode_failure = *f;
        return v;
    }
    v.erased = erase_nested(std::get<LassoWord>(decoded), v.n);
    v.sup = v.erased->is_infinite() && spec.in_A(v.erased->infinite_word());
    return v;
}

bool abullet_member_oracle(const AbulletSpec& spec, const LassoWord& w) {
    return abullet_classify(spec, w).member();
}

// ---------------------------------------------------------------------------------------------

namespace {

// The machine B.  The A-state q is frozen while letters are pending on the stack.
class AbulletBuilder {
  public:
    explicit AbulletBuilder(const AbulletSpec& spec) : spec_(spec), aut_(spec.automaton()) {}

    PushdownAutomaton build() {
        z0_ = b_.stack("Z0");
        g_ = b_.stack("G");
        e_ = b_.stack("E");
        eb_ = b_.stack("Eb");
        l1_ = b_.stack("L1");
        l2_ = b_.stack("L2");
        s_ = b_.stack("S");
        u_ = b_.stack("U");
        for (const auto& c : spec_.base()) item_[c] = b_.stack("c." + c.str());
        items_ = {g_};
        for (const auto& [c, z] : item_) items_.push_back(z);
        for (const auto& c : spec_.boxed()) b_.input(c);
        b_.bottom(z0_);

        const int init = b_.state("init");
        const int as = b_.state("a+");
        b_.initial(init);
        b_.rule(init, spec_.a(), z0_, as, {z0_});
        b_.rule(as, spec_.a(), z0_, as, {z0_});
        b_.rule(as, spec_.b(), z0_, mode(aut_.initial(), "rest"), {z0_});
        for (int q = 0; q < aut_.state_count(); ++q) add_state_rules(q);

        for (const auto& set : aut_.table()) {
            MullerEntry entry;
            for (int q : set) {
                entry.required.push_back(plain(q));
                for (const auto& m : kModes) entry.optional.push_back(mode(q, m));
            }
            b_.muller_entry(std::move(entry));
        }
        return b_.build_muller();
    }

  private:
    static constexpr const char* kModes[] = {
        "rest",  "seg",  "pushB",  "pushB2", "skC",   "skD",  "skE",  "bchk",  "bchk2",
        "bcln",  "bfree", "bfree2", "cstart", "ccnt0", "ccnt", "cfree", "zd",    "ze",
        "dpush", "efree", "dpop0", "dpop",   "dcln",  "du",   "eu",   "epush"};

    int plain(int q) { return b_.state(aut_.state_name(q)); }
    int mode(int q, const std::string& m) { return b_.state(aut_.state_name(q) + ":" + m); }

    void r(int from, const Symbol& in, int pop, int to, std::vector<int> push) {
        b_.rule(from, in, pop, to, std::move(push));
    }
    void lam(int from, int pop, int to, std::vector<int> push) {
        b_.rule(from, std::nullopt, pop, to, std::move(push));
    }

    void add_state_rules(int q) {
        auto M = [&](const char* m) { return mode(q, m); };
        const int seg = M("seg");

        // At the bottom: a letter survives and moves A, or becomes pending; a group is pending.
        for (int at : {plain(q), M("rest")}) {
            for (const auto& [c, z] : item_) {
                r(at, c, z0_, plain(aut_.successor(q, c)), {z0_});
                r(at, c, z0_, seg, {z, z0_});
            }
            r(at, kAlpha, z0_, M("pushB"), {eb_, z0_});
        }

        // Inside an erased stretch.
        std::vector<int> tops = items_;
        tops.push_back(l2_);
        for (int t : tops) {
            for (const auto& [c, z] : item_) r(seg, c, t, seg, {z, t});
            r(seg, kAlpha, t, M("pushB"), {eb_, t});
        }
        r(seg, kAlpha, l2_, M("bchk"), {});
        for (int t : items_) r(seg, kAlpha, t, M("bfree"), {t});

        // Pending group ~j: gamma E^j eps, counted on the B-block.
        r(M("pushB"), kB, eb_, M("pushB2"), {e_, eb_});
        r(M("pushB2"), kB, e_, M("pushB2"), {e_, e_});
        r(M("pushB2"), kC, e_, M("skC"), {g_, e_});
        r(M("skC"), kC, g_, M("skC"), {g_});
        r(M("skC"), kD, g_, M("skD"), {g_});
        r(M("skD"), kD, g_, M("skD"), {g_});
        r(M("skD"), kE, g_, M("skE"), {g_});
        r(M("skE"), kE, g_, M("skE"), {g_});
        r(M("skE"), kBeta, g_, seg, {g_});

        // B-block of an acting eraser: j <= k against L2 S^k L1, or nothing to check.
        r(M("bchk"), kB, s_, M("bchk2"), {});
        r(M("bchk2"), kB, s_, M("bchk2"), {});
        lam(M("bchk2"), s_, M("bcln"), {});
        lam(M("bcln"), s_, M("bcln"), {});
        lam(M("bchk2"), l1_, M("cstart"), {});
        lam(M("bcln"), l1_, M("cstart"), {});
        for (int t : items_) {
            r(M("bfree"), kB, t, M("bfree2"), {t});
            r(M("bfree2"), kB, t, M("bfree2"), {t});
            lam(M("bfree2"), t, M("cstart"), {t});
        }

        // C-block pops the erased item: a letter, or gamma E^i eps with i < j.
        for (const auto& [c, z] : item_) r(M("cstart"), kC, z, M("cfree"), {});
        lam(M("cstart"), g_, M("ccnt0"), {});
        r(M("ccnt0"), kC, e_, M("ccnt"), {});
        r(M("ccnt"), kC, e_, M("ccnt"), {});
        r(M("ccnt"), kC, eb_, M("cfree"), {});
        for (int t = 0; t < b_stack_count(); ++t) r(M("cfree"), kC, t, M("cfree"), {t});

        // D/E-blocks: back at the bottom, or min-update of the code above the next item.
        r(M("cfree"), kD, z0_, M("zd"), {z0_});
        r(M("zd"), kD, z0_, M("zd"), {z0_});
        r(M("zd"), kE, z0_, M("ze"), {z0_});
        r(M("ze"), kE, z0_, M("ze"), {z0_});
        r(M("ze"), kBeta, z0_, M("rest"), {z0_});

        for (int t : items_) r(M("cfree"), kD, t, M("dpush"), {s_, l1_, t});
        r(M("dpush"), kD, s_, M("dpush"), {s_, s_});
        r(M("dpush"), kE, s_, M("efree"), {s_});
        r(M("efree"), kE, s_, M("efree"), {s_});
        r(M("efree"), kBeta, s_, seg, {l2_, s_});

        lam(M("cfree"), l2_, M("dpop0"), {});
        r(M("dpop0"), kD, s_, M("dpop"), {});
        r(M("dpop"), kD, s_, M("dpop"), {});
        lam(M("dpop"), s_, M("dcln"), {});
        lam(M("dcln"), s_, M("dcln"), {});
        r(M("dpop"), kD, l1_, M("du"), {u_, l1_});
        r(M("du"), kD, u_, M("du"), {u_, u_});
        r(M("du"), kE, u_, M("eu"), {});
        r(M("eu"), kE, u_, M("eu"), {});
        r(M("eu"), kE, l1_, M("epush"), {s_, l1_});
        r(M("dpop"), kE, l1_, M("epush"), {s_, l1_});
        r(M("dcln"), kE, l1_, M("epush"), {s_, l1_});
        r(M("epush"), kE, s_, M("epush"), {s_, s_});
        r(M("epush"), kBeta, s_, seg, {l2_, s_});
    }

    int b_stack_count() const { return static_cast<int>(8 + item_.size()); }

    const AbulletSpec& spec_;
    const MullerFA& aut_;
    PdaBuilder b_;
    int z0_ = 0, g_ = 0, e_ = 0, eb_ = 0, l1_ = 0, l2_ = 0, s_ = 0, u_ = 0;
    std::map<Symbol, int> item_;
    std::vector<int> items_;
};

}  // namespace

PushdownAutomaton build_abullet_mpda(const AbulletSpec& spec) { return AbulletBuilder(spec).build(); }

PushdownAutomaton build_abullet_automaton(const AbulletSpec& spec) {
    const Alphabet box = spec.boxed();
    const OmegaKC guards{{{build_L_guards(spec.base(), spec.a(), spec.b()), letters_grammar(box)}}};
    const auto guard_part =
        bpda_intersect_buchi(okc_to_bpda(guards), build_R(spec.base(), spec.a(), spec.b()));
    return bpda_union(build_abullet_mpda(spec), guard_part);
}

}  // namespace ocfl
