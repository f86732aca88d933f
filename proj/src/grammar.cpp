#include "ocfl/grammar.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>

namespace ocfl {

namespace {

// Terminal t is encoded as -(t+1), nonterminal ids are >= 0.
struct RawRule {
    int lhs;
    std::vector<int> rhs;
};

std::shared_ptr<const NormalForm> build_normal_form(const Grammar& g) {
    auto nf = std::make_shared<NormalForm>();
    std::unordered_map<std::string, int> nt_id;
    for (const auto& n : g.nonterminals())
        nt_id.emplace(n, static_cast<int>(nt_id.size()));
    int count = static_cast<int>(nt_id.size());
    int t = 0;
    for (const auto& s : g.terminals())
        nf->terminal_index.emplace(s, t++);

    std::vector<RawRule> rules;
    std::map<int, int> wrapper;
    auto wrap = [&](int code) {
        auto it = wrapper.find(code);
        if (it != wrapper.end())
            return it->second;
        int w = count++;
        wrapper.emplace(code, w);
        rules.push_back({w, {code}});
        return w;
    };
    for (const auto& p : g.productions()) {
        std::vector<int> rhs;
        for (const auto& s : p.rhs) {
            if (const auto* nt = std::get_if<Nonterminal>(&s))
                rhs.push_back(nt_id.at(nt->name));
            else
                rhs.push_back(-(nf->terminal_index.at(std::get<Symbol>(s)) + 1));
        }
        if (rhs.size() >= 2)
            for (int& x : rhs)
                if (x < 0)
                    x = wrap(x);
        int lhs = nt_id.at(p.lhs);
        while (rhs.size() > 2) {
            int rest = count++;
            rules.push_back({lhs, {rhs[0], rest}});
            rhs.erase(rhs.begin());
            lhs = rest;
        }
        rules.push_back({lhs, std::move(rhs)});
    }

    std::vector<char> nullable(count, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : rules) {
            if (nullable[r.lhs])
                continue;
            bool all = std::all_of(r.rhs.begin(), r.rhs.end(), [&](int x) { return x >= 0 && nullable[x]; });
            if (all) {
                nullable[r.lhs] = 1;
                changed = true;
            }
        }
    }

    std::vector<std::vector<int>> unit(count);
    std::vector<std::vector<std::pair<int, int>>> binary(count);
    std::vector<std::vector<int>> term(count);
    for (const auto& r : rules) {
        if (r.rhs.size() == 1) {
            if (r.rhs[0] >= 0)
                unit[r.lhs].push_back(r.rhs[0]);
            else
                term[r.lhs].push_back(-r.rhs[0] - 1);
        } else if (r.rhs.size() == 2) {
            binary[r.lhs].push_back({r.rhs[0], r.rhs[1]});
            if (nullable[r.rhs[1]])
                unit[r.lhs].push_back(r.rhs[0]);
            if (nullable[r.rhs[0]])
                unit[r.lhs].push_back(r.rhs[1]);
        }
    }

    nf->nonterminal_count = count;
    nf->start = nt_id.at(g.start());
    nf->start_nullable = nullable[nf->start];
    nf->terminal_rules.assign(nf->terminal_index.size(), {});
    nf->by_left.assign(count, {});
    std::set<std::tuple<int, int, int>> bin_seen;
    std::set<std::pair<int, int>> term_seen;
    for (int a = 0; a < count; ++a) {
        std::vector<char> reach(count, 0);
        std::vector<int> work{a};
        reach[a] = 1;
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            for (int y : unit[x])
                if (!reach[y]) {
                    reach[y] = 1;
                    work.push_back(y);
                }
        }
        for (int b = 0; b < count; ++b) {
            if (!reach[b])
                continue;
            for (auto [l, r] : binary[b])
                if (bin_seen.emplace(a, l, r).second)
                    nf->by_left[l].push_back({r, a});
            for (int tt : term[b])
                if (term_seen.emplace(a, tt).second)
                    nf->terminal_rules[tt].push_back(a);
        }
    }
    return nf;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    std::string name = base;
    for (int k = 1; taken.contains(name); ++k)
        name = base + std::to_string(k);
    return name;
}

Production prod(std::string lhs, std::vector<GrammarSymbol> rhs) {
    return Production{std::move(lhs), std::move(rhs)};
}

GrammarSymbol nt(std::string name) { return Nonterminal{std::move(name)}; }

}  // namespace

Grammar::Grammar(std::string start, std::vector<Production> productions, Alphabet terminals)
    : start_(std::move(start)), productions_(std::move(productions)), terminals_(std::move(terminals)) {
    std::set<std::string> seen;
    auto add_nt = [&](const std::string& n) {
        if (n.empty())
            throw Error("nonterminal with an empty name");
        if (seen.insert(n).second)
            nonterminals_.push_back(n);
    };
    add_nt(start_);
    for (const auto& p : productions_)
        add_nt(p.lhs);
    for (const auto& p : productions_)
        for (const auto& s : p.rhs) {
            if (const auto* n = std::get_if<Nonterminal>(&s))
                add_nt(n->name);
            else
                terminals_.insert(std::get<Symbol>(s));
        }
    normal_form_ = build_normal_form(*this);
}

CykParser::CykParser(const Grammar& g)
    : nf_(g.shared_normal_form()),
      words_((static_cast<std::size_t>(nf_->nonterminal_count) + 63) / 64) {}

void CykParser::push(const Symbol& s) {
    auto it = nf_->terminal_index.find(s);
    if (it == nf_->terminal_index.end())
        throw Error("terminal mismatch: " + s.str() + " is not a terminal of the grammar");
    const std::size_t n = columns_.size();
    std::vector<Bits> col(n + 1, Bits(words_, 0));
    for (int a : nf_->terminal_rules[it->second])
        col[n][a >> 6] |= std::uint64_t{1} << (a & 63);
    for (std::size_t i = n; i-- > 0;) {
        Bits& out = col[i];
        for (std::size_t k = i + 1; k <= n; ++k) {
            const Bits& left = columns_[k - 1][i];
            const Bits& right = col[k];
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = left[w];
                while (bits) {
                    int b = static_cast<int>(w * 64) + std::countr_zero(bits);
                    bits &= bits - 1;
                    for (auto [c, a] : nf_->by_left[b])
                        if (right[c >> 6] >> (c & 63) & 1)
                            out[a >> 6] |= std::uint64_t{1} << (a & 63);
                }
            }
        }
    }
    columns_.push_back(std::move(col));
}

void CykParser::pop() {
    if (columns_.empty())
        throw Error("CykParser::pop on an empty word");
    columns_.pop_back();
}

bool CykParser::accepts() const {
    if (columns_.empty())
        return nf_->start_nullable;
    int s = nf_->start;
    return columns_.back()[0][s >> 6] >> (s & 63) & 1;
}

bool cfg_member(const Grammar& g, std::span<const Symbol> x) {
    if (x.empty())
        return g.normal_form().start_nullable;
    CykParser p(g);
    for (const auto& s : x)
        p.push(s);
    return p.accepts();
}

Grammar build_L3(const Alphabet& base, const Symbol& eraser) {
    if (base.contains(eraser))
        throw Error("L3: the eraser must not be a letter of X_A");
    std::vector<Production> ps;
    for (const auto& a : base)
        ps.push_back(prod("S", {a, nt("S"), eraser, nt("S")}));
    ps.push_back(prod("S", {}));
    Alphabet terms = base;
    terms.insert(eraser);
    return Grammar("S", std::move(ps), std::move(terms));
}

Grammar build_L_guards(const Alphabet& base, const Symbol& a, const Symbol& b) {
    for (const auto& s : base)
        if (!s.is_base())
            throw Error("L guards: X_A must hold base letters only, got " + s.str());
    if (!base.contains(a) || !base.contains(b) || a == b)
        throw Error("L guards: markers must be two distinct letters of X_A");
    const Alphabet box = boxed_alphabet(base);
    auto code = [](Coding c) -> GrammarSymbol { return Symbol::coding(c); };
    const std::pair<Coding, const char*> blocks[] = {
        {Coding::B, "B"}, {Coding::C, "C"}, {Coding::D, "D"}, {Coding::E, "E"}};

    std::vector<Production> ps;
    for (const char* l : {"L_B", "L_C", "L_D", "L_E", "L_BC", "L_CD", "L_DE"})
        ps.push_back(prod("L", {nt(l)}));
    ps.push_back(prod("U", {}));
    for (const auto& x : box)
        ps.push_back(prod("U", {x, nt("U")}));
    for (auto [c, n] : blocks) {
        std::string x = n;
        ps.push_back(prod("Plus_" + x, {code(c)}));
        ps.push_back(prod("Plus_" + x, {code(c), nt("Plus_" + x)}));
        // a^n b U X^n with n >= 1, then X^+ makes the block longer than n.
        ps.push_back(prod("Count_" + x, {a, nt("Count_" + x), code(c)}));
        ps.push_back(prod("Count_" + x, {a, b, nt("U"), code(c)}));
        ps.push_back(prod("L_" + x, {nt("Count_" + x), nt("Plus_" + x)}));
    }
    for (int k = 0; k + 1 < 4; ++k) {
        auto [c1, n1] = blocks[k];
        auto [c2, n2] = blocks[k + 1];
        std::string pair = std::string(n1) + n2;
        ps.push_back(prod("Bal_" + pair, {code(c1), nt("Bal_" + pair), code(c2)}));
        ps.push_back(prod("Bal_" + pair, {code(c1), code(c2)}));
        ps.push_back(prod("Neq_" + pair, {nt(std::string("Plus_") + n1), nt("Bal_" + pair)}));
        ps.push_back(prod("Neq_" + pair, {nt("Bal_" + pair), nt(std::string("Plus_") + n2)}));
    }
    const GrammarSymbol alpha = code(Coding::Alpha), beta = code(Coding::Beta);
    ps.push_back(prod("L_BC", {nt("U"), alpha, nt("Neq_BC"), nt("Plus_D"), nt("Plus_E"), beta}));
    ps.push_back(prod("L_CD", {nt("U"), alpha, nt("Plus_B"), nt("Neq_CD"), nt("Plus_E"), beta}));
    ps.push_back(prod("L_DE", {nt("U"), alpha, nt("Plus_B"), nt("Plus_C"), nt("Neq_DE"), beta}));
    return Grammar("L", std::move(ps), box);
}

bool in_L_direct(std::span<const Symbol> x, const Symbol& a, const Symbol& b) {
    const std::size_t len = x.size();
    auto is_code = [](const Symbol& s, Coding c) { return s.is_coding() && s.coding_letter() == c; };

    // Trailing alpha B^j C^k D^l E^m beta with a mismatch between neighbouring blocks.
    if (len > 0 && is_code(x[len - 1], Coding::Beta)) {
        std::size_t pos = len - 1;
        std::size_t counts[4] = {0, 0, 0, 0};
        bool ok = true;
        for (int blk = 3; blk >= 0 && ok; --blk) {
            const Coding c = static_cast<Coding>(static_cast<int>(Coding::B) + blk);
            while (pos > 0 && is_code(x[pos - 1], c)) {
                --pos;
                ++counts[blk];
            }
            ok = counts[blk] > 0;
        }
        if (ok && pos > 0 && is_code(x[pos - 1], Coding::Alpha))
            if (counts[0] != counts[1] || counts[1] != counts[2] || counts[2] != counts[3])
                return true;
    }

    // a^n b ... X^j with j > n for X in {B, C, D, E}.
    std::size_t n = 0;
    while (n < len && x[n] == a)
        ++n;
    if (n == 0 || n >= len || x[n] != b)
        return false;
    const Symbol& last = x[len - 1];
    if (!last.is_coding() || last.coding_letter() == Coding::Alpha || last.coding_letter() == Coding::Beta)
        return false;
    std::size_t run = 0;
    while (run < len && x[len - 1 - run] == last)
        ++run;
    return run > n;
}

Grammar singleton_grammar(std::span<const Symbol> w, Alphabet terminals) {
    std::vector<GrammarSymbol> rhs(w.begin(), w.end());
    return Grammar("S", {prod("S", std::move(rhs))}, std::move(terminals));
}

Grammar letters_grammar(const Alphabet& letters) {
    std::vector<Production> ps;
    for (const auto& s : letters)
        ps.push_back(prod("S", {s}));
    return Grammar("S", std::move(ps), letters);
}

Grammar star_grammar(const Alphabet& letters) {
    std::vector<Production> ps{prod("S", {})};
    for (const auto& s : letters)
        ps.push_back(prod("S", {s, nt("S")}));
    return Grammar("S", std::move(ps), letters);
}

Grammar rename(const Grammar& g, const std::string& prefix) {
    std::vector<Production> ps;
    for (const auto& p : g.productions()) {
        Production q{prefix + p.lhs, {}};
        for (const auto& s : p.rhs) {
            if (const auto* n = std::get_if<Nonterminal>(&s))
                q.rhs.push_back(Nonterminal{prefix + n->name});
            else
                q.rhs.push_back(s);
        }
        ps.push_back(std::move(q));
    }
    return Grammar(prefix + g.start(), std::move(ps), g.terminals());
}

Grammar substitute(const Grammar& g, const std::map<Symbol, Grammar>& sub) {
    std::set<Symbol> used;
    for (const auto& p : g.productions())
        for (const auto& s : p.rhs)
            if (const auto* t = std::get_if<Symbol>(&s))
                used.insert(*t);
    std::set<std::string> taken(g.nonterminals().begin(), g.nonterminals().end());
    std::map<Symbol, std::string> start_of;
    std::vector<Production> ps;
    Alphabet terms;
    int k = 0;
    for (const auto& t : used) {
        auto it = sub.find(t);
        if (it == sub.end())
            throw Error("substitute: no grammar for terminal " + t.str());
        std::string prefix;
        do
            prefix = "sub" + std::to_string(k++) + ".";
        while (taken.contains(prefix + it->second.start()));
        Grammar r = rename(it->second, prefix);
        taken.insert(r.nonterminals().begin(), r.nonterminals().end());
        start_of.emplace(t, r.start());
        ps.insert(ps.end(), r.productions().begin(), r.productions().end());
        terms.insert(r.terminals().begin(), r.terminals().end());
    }
    for (const auto& p : g.productions()) {
        Production q{p.lhs, {}};
        for (const auto& s : p.rhs) {
            if (const auto* t = std::get_if<Symbol>(&s))
                q.rhs.push_back(Nonterminal{start_of.at(*t)});
            else
                q.rhs.push_back(s);
        }
        ps.push_back(std::move(q));
    }
    return Grammar(g.start(), std::move(ps), std::move(terms));
}

namespace {

Grammar combine(const Grammar& g1, const Grammar& g2, bool sequential) {
    Grammar r1 = rename(g1, "l.");
    Grammar r2 = rename(g2, "r.");
    std::set<std::string> taken(r1.nonterminals().begin(), r1.nonterminals().end());
    taken.insert(r2.nonterminals().begin(), r2.nonterminals().end());
    std::string start = fresh_name("S", taken);
    std::vector<Production> ps;
    if (sequential) {
        ps.push_back(prod(start, {nt(r1.start()), nt(r2.start())}));
    } else {
        ps.push_back(prod(start, {nt(r1.start())}));
        ps.push_back(prod(start, {nt(r2.start())}));
    }
    ps.insert(ps.end(), r1.productions().begin(), r1.productions().end());
    ps.insert(ps.end(), r2.productions().begin(), r2.productions().end());
    Alphabet terms = r1.terminals();
    terms.insert(r2.terminals().begin(), r2.terminals().end());
    return Grammar(start, std::move(ps), std::move(terms));
}

}  // namespace

Grammar concat(const Grammar& g1, const Grammar& g2) { return combine(g1, g2, true); }

Grammar union_of(const Grammar& g1, const Grammar& g2) { return combine(g1, g2, false); }

Grammar intersect_dfa(const Grammar& g, const Dfa& d) {
    for (const auto& t : g.terminals())
        if (!d.alphabet().contains(t))
            throw Error("intersect_dfa: DFA alphabet misses terminal " + t.str());
    const NormalForm& nf = g.normal_form();
    const int q = d.state_count();
    auto name = [&](int p, int a, int r) {
        return "<" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(r) + ">";
    };
    std::vector<Production> ps;
    const std::string start = "S";
    for (int f = 0; f < q; ++f)
        if (d.is_accepting(f))
            ps.push_back(prod(start, {nt(name(d.initial(), nf.start, f))}));
    if (nf.start_nullable && d.is_accepting(d.initial()))
        ps.push_back(prod(start, {}));
    for (const auto& [sym, t] : nf.terminal_index)
        for (int a : nf.terminal_rules[t])
            for (int p = 0; p < q; ++p)
                ps.push_back(prod(name(p, a, d.successor(p, sym)), {sym}));
    for (int b = 0; b < nf.nonterminal_count; ++b)
        for (auto [c, a] : nf.by_left[b])
            for (int p = 0; p < q; ++p)
                for (int m = 0; m < q; ++m)
                    for (int r = 0; r < q; ++r)
                        ps.push_back(prod(name(p, a, r), {nt(name(p, b, m)), nt(name(m, c, r))}));
    return trim(Grammar(start, std::move(ps), g.terminals()));
}

Grammar trim(const Grammar& g) {
    std::set<std::string> productive;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (productive.contains(p.lhs))
                continue;
            bool ok = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GrammarSymbol& s) {
                const auto* n = std::get_if<Nonterminal>(&s);
                return !n || productive.contains(n->name);
            });
            if (ok) {
                productive.insert(p.lhs);
                changed = true;
            }
        }
    }
    auto usable = [&](const Production& p) {
        if (!productive.contains(p.lhs))
            return false;
        return std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GrammarSymbol& s) {
            const auto* n = std::get_if<Nonterminal>(&s);
            return !n || productive.contains(n->name);
        });
    };
    std::map<std::string, std::vector<const Production*>> by_lhs;
    for (const auto& p : g.productions())
        if (usable(p))
            by_lhs[p.lhs].push_back(&p);
    std::set<std::string> reachable{g.start()};
    std::deque<std::string> work{g.start()};
    while (!work.empty()) {
        auto n = work.front();
        work.pop_front();
        for (const auto* p : by_lhs[n])
            for (const auto& s : p->rhs)
                if (const auto* m = std::get_if<Nonterminal>(&s))
                    if (reachable.insert(m->name).second)
                        work.push_back(m->name);
    }
    std::vector<Production> ps;
    for (const auto& p : g.productions())
        if (usable(p) && reachable.contains(p.lhs))
            ps.push_back(p);
    return Grammar(g.start(), std::move(ps), g.terminals());
}

bool has_nonempty_word(const Grammar& g) {
    Grammar t = trim(g);
    std::set<std::string> nonempty;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : t.productions()) {
            if (nonempty.contains(p.lhs))
                continue;
            bool ok = std::any_of(p.rhs.begin(), p.rhs.end(), [&](const GrammarSymbol& s) {
                const auto* n = std::get_if<Nonterminal>(&s);
                return !n || nonempty.contains(n->name);
            });
            if (ok) {
                nonempty.insert(p.lhs);
                changed = true;
            }
        }
    }
    return nonempty.contains(t.start());
}

std::string to_string(const GrammarSymbol& s) {
    if (const auto* n = std::get_if<Nonterminal>(&s))
        return n->name;
    return std::get<Symbol>(s).str();
}

}  // namespace ocfl
