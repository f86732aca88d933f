#include "ocfl/pushdown.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <tuple>
#include <unordered_set>

#include "ocfl/graph.hpp"

namespace ocfl {

namespace {

std::vector<std::vector<int>> index_rules(int n, const std::vector<PdaRule>& rules) {
    std::vector<std::vector<int>> by(n);
    for (std::size_t i = 0; i < rules.size(); ++i) by[rules[i].from].push_back(static_cast<int>(i));
    return by;
}

void check_state_list(const std::vector<int>& qs, int n, const char* what) {
    for (int q : qs)
        if (q < 0 || q >= n) throw Error(std::string("state index out of range in ") + what);
}

}  // namespace

PushdownAutomaton PushdownAutomaton::buchi(std::vector<std::string> states, Alphabet inputs,
                                           std::vector<std::string> stack, int initial, int bottom,
                                           std::vector<PdaRule> rules, std::vector<int> finals) {
    PushdownAutomaton p;
    p.acceptance_ = Acceptance::Buchi;
    p.states_ = std::move(states);
    p.inputs_ = std::move(inputs);
    p.stack_ = std::move(stack);
    p.initial_ = initial;
    p.bottom_ = bottom;
    p.rules_ = std::move(rules);
    check_state_list(finals, p.state_count(), "final states");
    p.finals_.assign(p.states_.size(), false);
    for (int q : finals) p.finals_[q] = true;
    p.validate();
    return p;
}

PushdownAutomaton PushdownAutomaton::muller(std::vector<std::string> states, Alphabet inputs,
                                            std::vector<std::string> stack, int initial,
                                            int bottom, std::vector<PdaRule> rules,
                                            std::vector<MullerEntry> table) {
    PushdownAutomaton p;
    p.acceptance_ = Acceptance::Muller;
    p.states_ = std::move(states);
    p.inputs_ = std::move(inputs);
    p.stack_ = std::move(stack);
    p.initial_ = initial;
    p.bottom_ = bottom;
    p.rules_ = std::move(rules);
    for (auto& e : table) {
        check_state_list(e.required, p.state_count(), "table");
        check_state_list(e.optional, p.state_count(), "table");
        std::ranges::sort(e.required);
        e.required.erase(std::unique(e.required.begin(), e.required.end()), e.required.end());
        std::ranges::sort(e.optional);
        e.optional.erase(std::unique(e.optional.begin(), e.optional.end()), e.optional.end());
        std::erase_if(e.optional, [&](int q) { return std::ranges::binary_search(e.required, q); });
        if (e.required.empty()) throw Error("Muller table entry needs at least one required state");
        if (e.required.size() > 64) throw Error("Muller table entry has more than 64 required states");
    }
    p.table_ = std::move(table);
    p.finals_.assign(p.states_.size(), false);
    p.validate();
    return p;
}

void PushdownAutomaton::validate() {
    const int n = state_count();
    const int g = stack_count();
    if (n == 0) throw Error("automaton has no states");
    if (g == 0) throw Error("automaton has no stack symbols");
    if (initial_ < 0 || initial_ >= n) throw Error("initial state out of range");
    if (bottom_ < 0 || bottom_ >= g) throw Error("bottom symbol out of range");
    for (const auto& r : rules_) {
        if (r.from < 0 || r.from >= n || r.to < 0 || r.to >= n)
            throw Error("rule state out of range");
        if (r.pop < 0 || r.pop >= g) throw Error("rule stack symbol out of range");
        for (int z : r.push)
            if (z < 0 || z >= g) throw Error("rule stack symbol out of range");
        if (r.input && !inputs_.contains(*r.input))
            throw Error("rule reads '" + r.input->str() + "' outside the input alphabet");
    }
    by_state_ = index_rules(n, rules_);
}

std::vector<int> PushdownAutomaton::finals() const {
    std::vector<int> out;
    for (int q = 0; q < state_count(); ++q)
        if (finals_[q]) out.push_back(q);
    return out;
}

int PdaBuilder::state(const std::string& name) {
    auto [it, fresh] = state_ids_.try_emplace(name, static_cast<int>(states_.size()));
    if (fresh) states_.push_back(name);
    return it->second;
}

int PdaBuilder::stack(const std::string& name) {
    auto [it, fresh] = stack_ids_.try_emplace(name, static_cast<int>(stack_.size()));
    if (fresh) stack_.push_back(name);
    return it->second;
}

void PdaBuilder::rule(int from, std::optional<Symbol> in, int pop, int to, std::vector<int> push) {
    if (in) inputs_.insert(*in);
    rules_.push_back({from, std::move(in), pop, to, std::move(push)});
}

PushdownAutomaton PdaBuilder::build_buchi() const {
    return PushdownAutomaton::buchi(states_, inputs_, stack_, initial_, bottom_, rules_, finals_);
}

PushdownAutomaton PdaBuilder::build_muller() const {
    return PushdownAutomaton::muller(states_, inputs_, stack_, initial_, bottom_, rules_, table_);
}

Alphabet OmegaKC::alphabet() const {
    Alphabet out;
    for (const auto& [u, v] : pairs) {
        out.insert(u.terminals().begin(), u.terminals().end());
        out.insert(v.terminals().begin(), v.terminals().end());
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

namespace {

// Pushes the right-hand side of a grammar production in namespace `ns`.
std::vector<int> rhs_stack(PdaBuilder& b, const std::string& ns, const Production& p) {
    std::vector<int> out;
    for (const auto& s : p.rhs) {
        if (const auto* nt = std::get_if<Nonterminal>(&s))
            out.push_back(b.stack(ns + nt->name));
        else
            out.push_back(b.stack(ns + "'" + std::get<Symbol>(s).str() + "'"));
    }
    return out;
}

void add_parser(PdaBuilder& b, int phase, const std::string& ns, const Grammar& g) {
    for (const auto& p : g.productions())
        b.rule(phase, std::nullopt, b.stack(ns + p.lhs), phase, rhs_stack(b, ns, p));
    for (const auto& t : g.terminals())
        b.rule(phase, t, b.stack(ns + "'" + t.str() + "'"), phase, {});
}

}  // namespace

PushdownAutomaton okc_to_bpda(const OmegaKC& okc, std::vector<std::string>* warnings) {
    PdaBuilder b;
    const int init = b.state("init");
    const int z0 = b.stack("Z0");
    b.initial(init);
    b.bottom(z0);
    for (const auto& t : okc.alphabet()) b.input(t);
    for (std::size_t i = 0; i < okc.pairs.size(); ++i) {
        const auto& [u, v] = okc.pairs[i];
        const std::string id = std::to_string(i + 1);
        if (!has_nonempty_word(v)) {
            if (warnings)
                warnings->push_back("component " + id +
                                    " dropped: its period language has no nonempty word");
            continue;
        }
        const int su = b.state("U" + id);
        const int bd = b.state("Bd" + id);
        const int sv = b.state("V" + id);
        const int mark = b.stack("M" + id);
        const std::string nu = "u" + id + ".";
        const std::string nv = "v" + id + ".";
        b.rule(init, std::nullopt, z0, su, {b.stack(nu + u.start()), mark});
        add_parser(b, su, nu, u);
        add_parser(b, sv, nv, v);
        b.rule(su, std::nullopt, mark, bd, {mark});
        b.rule(bd, std::nullopt, mark, sv, {b.stack(nv + v.start()), mark});
        b.rule(sv, std::nullopt, mark, bd, {mark});
        b.final_state(bd);
    }
    return b.build_buchi();
}

PushdownAutomaton muller_to_buchi_pda(const PushdownAutomaton& m) {
    if (m.acceptance() == Acceptance::Buchi) return m;
    const int n = m.state_count();
    const auto& table = m.table();
    // Per entry: position of each state among the required ones (-1 if absent), and the states
    // allowed at all.
    std::vector<std::vector<int>> req_pos(table.size(), std::vector<int>(n, -1));
    std::vector<std::vector<bool>> allowed(table.size(), std::vector<bool>(n, false));
    std::vector<std::uint64_t> full(table.size());
    for (std::size_t e = 0; e < table.size(); ++e) {
        for (std::size_t k = 0; k < table[e].required.size(); ++k) {
            req_pos[e][table[e].required[k]] = static_cast<int>(k);
            allowed[e][table[e].required[k]] = true;
        }
        for (int q : table[e].optional) allowed[e][q] = true;
        const auto r = table[e].required.size();
        full[e] = r == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
    }

    PdaBuilder b;
    for (int z = 0; z < m.stack_count(); ++z) b.stack(m.stack_symbols()[z]);
    for (const auto& s : m.inputs()) b.input(s);
    b.bottom(m.bottom());

    // Control (q, entry or -1, seen mask).
    using Key = std::tuple<int, int, std::uint64_t>;
    std::map<Key, int> ids;
    std::deque<Key> todo;
    auto id_of = [&](const Key& k) {
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        const auto [q, e, v] = k;
        std::string name = m.states()[q];
        if (e >= 0) name += "/e" + std::to_string(e + 1) + "/" + std::to_string(v);
        const int id = b.state(name);
        ids.emplace(k, id);
        if (e >= 0 && v == full[e]) b.final_state(id);
        todo.push_back(k);
        return id;
    };
    auto commit = [&](int q, std::size_t e) -> std::optional<Key> {
        if (!allowed[e][q]) return std::nullopt;
        std::uint64_t v = req_pos[e][q] >= 0 ? (std::uint64_t{1} << req_pos[e][q]) : 0;
        return Key{q, static_cast<int>(e), v};
    };
    b.initial(id_of({m.initial(), -1, 0}));
    while (!todo.empty()) {
        const auto [q, e, v] = todo.front();
        todo.pop_front();
        const int from = ids.at({q, e, v});
        for (int ri : m.rules_from(q)) {
            const auto& r = m.rules()[ri];
            if (e < 0) {
                b.rule(from, r.input, r.pop, id_of({r.to, -1, 0}), r.push);
                for (std::size_t f = 0; f < table.size(); ++f)
                    if (auto k = commit(r.to, f)) b.rule(from, r.input, r.pop, id_of(*k), r.push);
            } else {
                if (!allowed[e][r.to]) continue;
                std::uint64_t nv = v == full[e] ? 0 : v;
                if (req_pos[e][r.to] >= 0) nv |= std::uint64_t{1} << req_pos[e][r.to];
                b.rule(from, r.input, r.pop, id_of({r.to, e, nv}), r.push);
            }
        }
    }
    return b.build_buchi();
}

BuchiPds product_with_lasso(const PushdownAutomaton& p, const LassoWord& w) {
    if (p.acceptance() != Acceptance::Buchi)
        throw Error("product_with_lasso needs a Buchi automaton");
    const Word& u = w.prefix();
    const Word& v = w.period();
    const int lu = static_cast<int>(u.size());
    const int len = lu + static_cast<int>(v.size());
    auto letter = [&](int pos) -> const Symbol& { return pos < lu ? u[pos] : v[pos - lu]; };
    auto next = [&](int pos) { return pos + 1 < len ? pos + 1 : lu; };

    BuchiPds s;
    s.stack_count = p.stack_count();
    s.bottom = p.bottom();
    std::unordered_map<std::int64_t, int> ids;
    std::vector<std::int64_t> keys;
    auto key = [&](int q, int pos, int f) {
        return (static_cast<std::int64_t>(q) * len + pos) * 3 + f;
    };
    auto id_of = [&](int q, int pos, int f) {
        const auto k = key(q, pos, f);
        auto [it, fresh] = ids.try_emplace(k, static_cast<int>(keys.size()));
        if (fresh) {
            keys.push_back(k);
            s.finals.push_back(f == 2);
        }
        return it->second;
    };
    s.initial = id_of(p.initial(), 0, 0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto k = keys[i];
        const int f = static_cast<int>(k % 3);
        const int pos = static_cast<int>((k / 3) % len);
        const int q = static_cast<int>(k / 3 / len);
        int g = f == 2 ? 0 : f;
        if (g == 0 && p.is_final(q)) g = 1;
        for (int ri : p.rules_from(q)) {
            const auto& r = p.rules()[ri];
            int to;
            if (!r.input)
                to = id_of(r.to, pos, g);
            else if (*r.input == letter(pos))
                to = id_of(r.to, next(pos), g == 1 ? 2 : g);
            else
                continue;
            s.rules.push_back({static_cast<int>(i), r.pop, to, r.push});
        }
    }
    s.state_count = static_cast<int>(keys.size());
    return s;
}

namespace {

// Forward summary computation for an input-free pushdown system whose pushes have length <= 2.
class Saturation {
  public:
    explicit Saturation(const BuchiPds& s) : s_(s) {
        normalize();
        by_head_.resize(static_cast<std::size_t>(states_) * g_);
        for (std::size_t i = 0; i < rules_.size(); ++i)
            by_head_[head_key(rules_[i].from, rules_[i].pop)].push_back(static_cast<int>(i));
        head_id_.assign(by_head_.size(), -1);
    }

    bool run() {
        discover(s_.initial, s_.bottom);
        while (!tasks_.empty()) {
            Task t = tasks_.front();
            tasks_.pop_front();
            switch (t.kind) {
                case Task::Explore: explore(t.a); break;
                case Task::Same: same_edge(t.a, t.b, t.f); break;
                case Task::Exit: add_exit(t.a, t.b, t.f); break;
            }
        }
        std::vector<std::vector<int>> adj(heads_.size());
        for (const auto* m : {&edges_, &calls_})
            for (const auto& [k, f] : *m)
                adj[static_cast<int>(k >> 32)].push_back(static_cast<int>(k & 0xffffffffu));
        const auto comp = strongly_connected_components(adj);
        for (const auto* m : {&edges_, &calls_})
            for (const auto& [k, f] : *m)
                if (f && comp[static_cast<int>(k >> 32)] == comp[static_cast<int>(k & 0xffffffffu)])
                    return true;
        return false;
    }

  private:
    struct Rule {
        int from, pop, to;
        int push_len;
        int push[2];
    };
    struct Task {
        enum Kind { Explore, Same, Exit } kind;
        int a, b;
        std::uint8_t f;
    };
    struct Caller {
        int head;
        int ret;
        std::uint8_t f;
    };

    void normalize() {
        states_ = s_.state_count;
        g_ = s_.stack_count;
        finals_ = s_.finals;
        for (const auto& r : s_.rules) {
            const int k = static_cast<int>(r.push.size());
            if (k <= 2) {
                Rule n{r.from, r.pop, r.to, k, {0, 0}};
                for (int i = 0; i < k; ++i) n.push[i] = r.push[i];
                rules_.push_back(n);
                continue;
            }
            // (p, g) -> (t1, X_{k-1} X_k), (t1, X_{k-1}) -> (t2, X_{k-2} X_{k-1}), ...
            int from = r.from;
            int pop = r.pop;
            for (int i = k - 2; i >= 1; --i) {
                const int t = states_++;
                finals_.push_back(false);
                rules_.push_back({from, pop, t, 2, {r.push[i], r.push[i + 1]}});
                from = t;
                pop = r.push[i];
            }
            rules_.push_back({from, pop, r.to, 2, {r.push[0], r.push[1]}});
        }
    }

    std::size_t head_key(int p, int z) const {
        return static_cast<std::size_t>(p) * g_ + static_cast<std::size_t>(z);
    }

    int discover(int p, int z) {
        auto& id = head_id_[head_key(p, z)];
        if (id >= 0) return id;
        id = static_cast<int>(heads_.size());
        heads_.push_back({p, z});
        exits_.emplace_back();
        preds_.emplace_back();
        callers_.emplace_back();
        tasks_.push_back({Task::Explore, id, 0, 0});
        return id;
    }

    using EdgeMap = std::unordered_map<std::uint64_t, std::uint8_t>;

    static bool record_edge(EdgeMap& m, int h, int h2, std::uint8_t f) {
        const std::uint64_t k = (static_cast<std::uint64_t>(h) << 32) | static_cast<std::uint32_t>(h2);
        auto [it, fresh] = m.try_emplace(k, f);
        if (fresh) return true;
        if (it->second >= f) return false;
        it->second = f;
        return true;
    }

    void explore(int h) {
        const auto [p, z] = heads_[h];
        const std::uint8_t f = finals_[p] ? 1 : 0;
        for (int ri : by_head_[head_key(p, z)]) {
            const Rule& r = rules_[ri];
            if (r.push_len == 0) {
                tasks_.push_back({Task::Exit, h, r.to, f});
            } else if (r.push_len == 1) {
                tasks_.push_back({Task::Same, h, discover(r.to, r.push[0]), f});
            } else {
                const int callee = discover(r.to, r.push[0]);
                record_edge(calls_, h, callee, f);
                callers_[callee].push_back({h, r.push[1], f});
                for (const auto& [q, fe] : exits_[callee])
                    tasks_.push_back({Task::Same, h, discover(q, r.push[1]),
                                      static_cast<std::uint8_t>(f | fe)});
            }
        }
    }

    void same_edge(int h, int h2, std::uint8_t f) {
        if (!record_edge(edges_, h, h2, f)) return;
        preds_[h2].push_back({h, f});
        for (const auto& [q, fe] : exits_[h2])
            tasks_.push_back({Task::Exit, h, q, static_cast<std::uint8_t>(f | fe)});
    }

    void add_exit(int h, int q, std::uint8_t f) {
        auto& ex = exits_[h];
        auto it = std::ranges::find_if(ex, [&](const auto& e) { return e.first == q; });
        if (it != ex.end()) {
            if (it->second >= f) return;
            it->second = f;
        } else {
            ex.push_back({q, f});
        }
        for (const auto& [h0, f0] : preds_[h])
            tasks_.push_back({Task::Exit, h0, q, static_cast<std::uint8_t>(f0 | f)});
        for (const auto& c : callers_[h])
            tasks_.push_back({Task::Same, c.head, discover(q, c.ret), static_cast<std::uint8_t>(c.f | f)});
    }

    const BuchiPds& s_;
    int states_ = 0;
    int g_ = 0;
    std::vector<bool> finals_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_head_;
    std::vector<int> head_id_;
    std::vector<std::pair<int, int>> heads_;
    std::vector<std::vector<std::pair<int, std::uint8_t>>> exits_;
    std::vector<std::vector<std::pair<int, std::uint8_t>>> preds_;
    std::vector<std::vector<Caller>> callers_;
    // Same-frame edges (direct or through a completed call) and call edges.
    EdgeMap edges_, calls_;
    std::deque<Task> tasks_;
};

}  // namespace

bool buchi_pds_nonempty(const BuchiPds& s) {
    if (s.state_count == 0) return false;
    return Saturation(s).run();
}

bool bpda_member(const PushdownAutomaton& p, const LassoWord& w) {
    for (const auto& part : {w.prefix(), w.period()})
        for (const auto& c : part)
            if (!p.inputs().contains(c))
                throw Error("letter '" + c.str() + "' is outside the automaton's input alphabet");
    if (p.acceptance() == Acceptance::Muller) return bpda_member(muller_to_buchi_pda(p), w);
    return buchi_pds_nonempty(product_with_lasso(p, w));
}

PushdownAutomaton bpda_union(const PushdownAutomaton& p1_in, const PushdownAutomaton& p2_in) {
    const PushdownAutomaton p1 = muller_to_buchi_pda(p1_in);
    const PushdownAutomaton p2 = muller_to_buchi_pda(p2_in);
    PdaBuilder b;
    const int init = b.state("init");
    const int z0 = b.stack("Z0");
    b.initial(init);
    b.bottom(z0);
    int k = 0;
    for (const PushdownAutomaton* p : {&p1, &p2}) {
        const std::string ns = std::to_string(++k) + ":";
        for (const auto& s : p->inputs()) b.input(s);
        std::vector<int> st, zs;
        for (const auto& q : p->states()) st.push_back(b.state(ns + q));
        for (const auto& z : p->stack_symbols()) zs.push_back(b.stack(ns + z));
        b.rule(init, std::nullopt, z0, st[p->initial()], {zs[p->bottom()]});
        for (const auto& r : p->rules()) {
            std::vector<int> push;
            for (int z : r.push) push.push_back(zs[z]);
            b.rule(st[r.from], r.input, zs[r.pop], st[r.to], push);
        }
        for (int q : p->finals()) b.final_state(st[q]);
    }
    return b.build_buchi();
}

PushdownAutomaton bpda_intersect_buchi(const PushdownAutomaton& p_in, const BuchiFA& r) {
    const PushdownAutomaton p = muller_to_buchi_pda(p_in);
    PdaBuilder b;
    for (const auto& z : p.stack_symbols()) b.stack(z);
    for (const auto& s : p.inputs()) b.input(s);
    b.bottom(p.bottom());
    using Key = std::tuple<int, int, int>;
    std::map<Key, int> ids;
    std::deque<Key> todo;
    auto id_of = [&](int q, int s, int f) {
        const Key k{q, s, f};
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        const int id = b.state(p.states()[q] + "/" + r.state_name(s) + "/" + std::to_string(f));
        ids.emplace(k, id);
        if (f == 2) b.final_state(id);
        todo.push_back(k);
        return id;
    };
    b.initial(id_of(p.initial(), r.initial(), 0));
    while (!todo.empty()) {
        const auto [q, s, f] = todo.front();
        todo.pop_front();
        const int from = ids.at({q, s, f});
        int g = f == 2 ? 0 : f;
        if (g == 0 && p.is_final(q)) g = 1;
        if (g == 1 && r.is_final(s)) g = 2;
        for (int ri : p.rules_from(q)) {
            const auto& rule = p.rules()[ri];
            if (!rule.input) {
                b.rule(from, std::nullopt, rule.pop, id_of(rule.to, s, g), rule.push);
                continue;
            }
            const int k = r.symbol_index(*rule.input);
            if (k < 0) continue;
            for (int s2 : r.successors(s, k))
                b.rule(from, rule.input, rule.pop, id_of(rule.to, s2, g), rule.push);
        }
    }
    return b.build_buchi();
}

PushdownAutomaton pda_from_buchi(const BuchiFA& a) {
    std::vector<PdaRule> rules;
    for (const auto& t : a.transitions()) rules.push_back({t.from, t.symbol, 0, t.to, {0}});
    std::vector<int> finals;
    for (int q = 0; q < a.state_count(); ++q)
        if (a.is_final(q)) finals.push_back(q);
    return PushdownAutomaton::buchi(a.state_names(), a.alphabet(), {"Z0"}, a.initial(), 0,
                                    std::move(rules), std::move(finals));
}

PushdownAutomaton pda_from_muller(const MullerFA& a) {
    std::vector<PdaRule> rules;
    for (const auto& t : a.transitions()) rules.push_back({t.from, t.symbol, 0, t.to, {0}});
    std::vector<MullerEntry> table;
    for (const auto& s : a.table()) table.push_back({s, {}});
    return PushdownAutomaton::muller(a.state_names(), a.alphabet(), {"Z0"}, a.initial(), 0,
                                     std::move(rules), std::move(table));
}

}  // namespace ocfl
