#include "ocfl/omega_regular.hpp"

#include <algorithm>

#include "ocfl/graph.hpp"

namespace ocfl {

namespace {

std::map<Symbol, int> index_alphabet(const Alphabet& a) {
    std::map<Symbol, int> m;
    int k = 0;
    for (const auto& s : a)
        m.emplace(s, k++);
    return m;
}

void check_state(int q, std::size_t n, const char* what) {
    if (q < 0 || static_cast<std::size_t>(q) >= n)
        throw Error(std::string(what) + ": state " + std::to_string(q) + " out of range");
}

int lookup(const std::map<Symbol, int>& m, const Symbol& s) {
    auto it = m.find(s);
    return it == m.end() ? -1 : it->second;
}

// Lasso positions: 0..|u|-1 walk the prefix, |u|..|u|+|v|-1 cycle through the period.
std::vector<int> lasso_symbols(const LassoWord& w, const std::map<Symbol, int>& m) {
    std::vector<int> out;
    for (const auto* part : {&w.prefix(), &w.period()})
        for (const auto& s : *part) {
            int k = lookup(m, s);
            if (k < 0)
                throw Error("symbol outside alphabet: " + s.str());
            out.push_back(k);
        }
    return out;
}

}  // namespace

BuchiFA::BuchiFA(std::vector<std::string> states, Alphabet alphabet, int initial, std::vector<int> finals,
                 std::vector<FaTransition> transitions)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      symbol_index_(index_alphabet(alphabet_)),
      initial_(initial),
      final_(states_.size(), false),
      transitions_(std::move(transitions)),
      delta_(states_.size(), std::vector<std::vector<int>>(alphabet_.size())) {
    check_state(initial_, states_.size(), "initial");
    for (int f : finals) {
        check_state(f, states_.size(), "final");
        final_[f] = true;
    }
    for (const auto& t : transitions_) {
        check_state(t.from, states_.size(), "transition");
        check_state(t.to, states_.size(), "transition");
        int k = lookup(symbol_index_, t.symbol);
        if (k < 0)
            throw Error("transition symbol outside alphabet: " + t.symbol.str());
        auto& succ = delta_[t.from][k];
        if (std::find(succ.begin(), succ.end(), t.to) == succ.end())
            succ.push_back(t.to);
    }
}

int BuchiFA::symbol_index(const Symbol& s) const { return lookup(symbol_index_, s); }

bool BuchiFA::is_deterministic() const {
    for (const auto& row : delta_)
        for (const auto& succ : row)
            if (succ.size() > 1)
                return false;
    return true;
}

MullerFA::MullerFA(std::vector<std::string> states, Alphabet alphabet, int initial,
                   std::vector<FaTransition> transitions, std::vector<std::vector<int>> table)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      symbol_index_(index_alphabet(alphabet_)),
      initial_(initial),
      delta_(states_.size(), std::vector<int>(alphabet_.size(), -1)) {
    check_state(initial_, states_.size(), "initial");
    for (const auto& t : transitions) {
        check_state(t.from, states_.size(), "transition");
        check_state(t.to, states_.size(), "transition");
        int k = lookup(symbol_index_, t.symbol);
        if (k < 0)
            throw Error("transition symbol outside alphabet: " + t.symbol.str());
        int& slot = delta_[t.from][k];
        if (slot >= 0 && slot != t.to)
            throw Error("Muller automaton is not deterministic at state " + states_[t.from]);
        slot = t.to;
    }
    for (std::size_t q = 0; q < delta_.size(); ++q)
        for (int to : delta_[q])
            if (to < 0)
                throw Error("Muller automaton is not total at state " + states_[q]);
    for (auto& set : table) {
        for (int q : set)
            check_state(q, states_.size(), "table");
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        table_.push_back(std::move(set));
    }
    std::sort(table_.begin(), table_.end());
    table_.erase(std::unique(table_.begin(), table_.end()), table_.end());
}

int MullerFA::symbol_index(const Symbol& s) const { return lookup(symbol_index_, s); }

int MullerFA::successor(int q, const Symbol& s) const {
    int k = symbol_index(s);
    if (k < 0)
        throw Error("symbol outside alphabet: " + s.str());
    return delta_[q][k];
}

std::vector<FaTransition> MullerFA::transitions() const {
    std::vector<FaTransition> out;
    for (std::size_t q = 0; q < delta_.size(); ++q)
        for (const auto& [s, k] : symbol_index_)
            out.push_back({static_cast<int>(q), s, delta_[q][k]});
    return out;
}

bool MullerFA::table_contains(std::vector<int> set) const {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return std::binary_search(table_.begin(), table_.end(), set);
}

Dfa::Dfa(int states, Alphabet alphabet, int initial, std::vector<int> accepting,
         std::vector<FaTransition> transitions)
    : alphabet_(std::move(alphabet)),
      symbol_index_(index_alphabet(alphabet_)),
      initial_(initial),
      accepting_(static_cast<std::size_t>(states), false),
      delta_(static_cast<std::size_t>(states), std::vector<int>(alphabet_.size(), -1)) {
    check_state(initial_, delta_.size(), "initial");
    for (int q : accepting) {
        check_state(q, delta_.size(), "accepting");
        accepting_[q] = true;
    }
    for (const auto& t : transitions) {
        check_state(t.from, delta_.size(), "transition");
        check_state(t.to, delta_.size(), "transition");
        int k = lookup(symbol_index_, t.symbol);
        if (k < 0)
            throw Error("transition symbol outside alphabet: " + t.symbol.str());
        if (delta_[t.from][k] >= 0 && delta_[t.from][k] != t.to)
            throw Error("DFA is not deterministic");
        delta_[t.from][k] = t.to;
    }
    for (const auto& row : delta_)
        for (int to : row)
            if (to < 0)
                throw Error("DFA is not total");
}

int Dfa::successor(int q, const Symbol& s) const {
    int k = lookup(symbol_index_, s);
    if (k < 0)
        throw Error("symbol outside alphabet: " + s.str());
    return delta_[q][k];
}

bool Dfa::accepts(std::span<const Symbol> w) const {
    int q = initial_;
    for (const auto& s : w)
        q = successor(q, s);
    return accepting_[q];
}

bool buchi_member(const BuchiFA& aut, const LassoWord& w) {
    std::map<Symbol, int> m;
    for (const auto& s : aut.alphabet())
        m.emplace(s, aut.symbol_index(s));
    const auto sym = lasso_symbols(w, m);
    const int len = static_cast<int>(sym.size());
    const int ulen = static_cast<int>(w.prefix().size());
    auto next_pos = [&](int p) { return p + 1 < len ? p + 1 : ulen; };

    // Product of the automaton with the lasso shape; node = state * len + position.
    const int n = aut.state_count() * len;
    std::vector<std::vector<int>> adj(n);
    std::vector<char> seen(n, 0);
    std::vector<int> work{aut.initial() * len};
    seen[work.back()] = 1;
    while (!work.empty()) {
        int node = work.back();
        work.pop_back();
        int q = node / len, p = node % len;
        for (int to : aut.successors(q, sym[p])) {
            int nxt = to * len + next_pos(p);
            adj[node].push_back(nxt);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                work.push_back(nxt);
            }
        }
    }
    const auto comp = strongly_connected_components(adj);
    for (int node = 0; node < n; ++node) {
        if (!seen[node] || !aut.is_final(node / len))
            continue;
        for (int nxt : adj[node])
            if (comp[nxt] == comp[node])
                return true;
    }
    return false;
}

bool muller_member(const MullerFA& aut, const LassoWord& w) {
    std::map<Symbol, int> m;
    for (const auto& s : aut.alphabet())
        m.emplace(s, aut.symbol_index(s));
    const auto sym = lasso_symbols(w, m);
    const int len = static_cast<int>(sym.size());
    const int ulen = static_cast<int>(w.prefix().size());

    // Run until a (state, period position) pair repeats at a period boundary walk.
    std::vector<int> first_seen(static_cast<std::size_t>(aut.state_count()) * len, -1);
    std::vector<int> run;
    int q = aut.initial(), p = 0, step = 0;
    while (true) {
        if (p >= ulen) {
            int key = q * len + p;
            if (first_seen[key] >= 0) {
                std::vector<int> cycle(run.begin() + first_seen[key], run.end());
                return aut.table_contains(std::move(cycle));
            }
            first_seen[key] = step;
        }
        run.push_back(q);
        q = aut.successor(q, sym[p]);
        p = p + 1 < len ? p + 1 : ulen;
        ++step;
    }
}

BuchiFA build_B2(const Alphabet& alphabet) {
    const auto zero = Symbol::base("0"), one = Symbol::base("1");
    if (!alphabet.contains(zero) || !alphabet.contains(one))
        throw Error("B2 needs letters 0 and 1 in its alphabet");
    std::vector<FaTransition> t;
    for (int q : {0, 1}) {
        t.push_back({q, zero, 0});
        t.push_back({q, one, 1});
    }
    return BuchiFA({"q0", "q1"}, alphabet, 0, {1}, std::move(t));
}

MullerFA build_B2_muller(const Alphabet& alphabet) {
    const auto zero = Symbol::base("0"), one = Symbol::base("1");
    if (!alphabet.contains(zero) || !alphabet.contains(one))
        throw Error("B2 needs letters 0 and 1 in its alphabet");
    std::vector<std::string> states{"q0", "q1"};
    const bool need_sink = alphabet.size() > 2;
    if (need_sink)
        states.push_back("sink");
    std::vector<FaTransition> t;
    for (int q = 0; q < static_cast<int>(states.size()); ++q)
        for (const auto& s : alphabet) {
            int to = 2;
            if (q != 2 && s == zero)
                to = 0;
            else if (q != 2 && s == one)
                to = 1;
            t.push_back({q, s, to});
        }
    return MullerFA(std::move(states), alphabet, 0, std::move(t), {{1}, {0, 1}});
}

BuchiFA build_R(const Alphabet& base, const Symbol& a, const Symbol& b) {
    for (const auto& s : base)
        if (!s.is_base())
            throw Error("R: base alphabet must hold base letters only, got " + s.str());
    if (!base.contains(a) || !base.contains(b) || a == b)
        throw Error("R: markers must be two distinct letters of the base alphabet");
    enum { Start, As, Between, Alpha, Bs, Cs, Ds, Es, Count };
    std::vector<std::string> names{"start", "a+", "between", "alpha", "B+", "C+", "D+", "E+"};
    auto code = [](Coding c) { return Symbol::coding(c); };
    std::vector<FaTransition> t{{Start, a, As}, {As, a, As}, {As, b, Between}};
    for (const auto& s : base)
        t.push_back({Between, s, Between});
    t.push_back({Between, code(Coding::Alpha), Alpha});
    t.push_back({Alpha, code(Coding::B), Bs});
    t.push_back({Bs, code(Coding::B), Bs});
    t.push_back({Bs, code(Coding::C), Cs});
    t.push_back({Cs, code(Coding::C), Cs});
    t.push_back({Cs, code(Coding::D), Ds});
    t.push_back({Ds, code(Coding::D), Ds});
    t.push_back({Ds, code(Coding::E), Es});
    t.push_back({Es, code(Coding::E), Es});
    t.push_back({Es, code(Coding::Beta), Between});
    static_assert(Count == 8);
    return BuchiFA(std::move(names), boxed_alphabet(base), Start, {Between}, std::move(t));
}

MullerFA buchi_to_muller(const BuchiFA& aut) {
    if (!aut.is_deterministic())
        throw Error("buchi_to_muller needs a deterministic automaton");
    const int n = aut.state_count();
    if (n > 16)
        throw Error("buchi_to_muller: too many states for an explicit table");
    auto states = aut.state_names();
    std::vector<FaTransition> t;
    int sink = -1;
    for (int q = 0; q < n; ++q)
        for (const auto& s : aut.alphabet()) {
            const auto& succ = aut.successors(q, aut.symbol_index(s));
            if (succ.empty()) {
                if (sink < 0) {
                    sink = static_cast<int>(states.size());
                    states.push_back("sink");
                }
                t.push_back({q, s, sink});
            } else {
                t.push_back({q, s, succ.front()});
            }
        }
    if (sink >= 0)
        for (const auto& s : aut.alphabet())
            t.push_back({sink, s, sink});
    std::vector<std::vector<int>> table;
    const int total = static_cast<int>(states.size());
    for (unsigned mask = 1; mask < (1u << total); ++mask) {
        std::vector<int> set;
        bool hits_final = false;
        for (int q = 0; q < total; ++q)
            if (mask & (1u << q)) {
                set.push_back(q);
                hits_final = hits_final || (q < n && aut.is_final(q));
            }
        if (hits_final)
            table.push_back(std::move(set));
    }
    return MullerFA(std::move(states), aut.alphabet(), aut.initial(), std::move(t), std::move(table));
}

}  // namespace ocfl
