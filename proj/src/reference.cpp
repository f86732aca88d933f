#include "ocfl/reference.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "ocfl/graph.hpp"

namespace ocfl::reference {

std::optional<Word> naive_erase(Word x, const Symbol& eraser) {
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            if (x[i] != eraser && x[i + 1] == eraser) {
                x.erase(x.begin() + static_cast<std::ptrdiff_t>(i),
                        x.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    for (const auto& s : x)
        if (s == eraser) return std::nullopt;
    return x;
}

bool exhaustive_pds_nonempty(const BuchiPds& s, std::size_t bound) {
    using Config = std::pair<int, std::vector<int>>;  // stack stored bottom first
    std::map<Config, int> ids;
    std::vector<Config> configs;
    std::vector<std::vector<int>> adj;
    auto id_of = [&](Config c) {
        if (c.second.size() > bound) throw std::logic_error("stack bound exceeded");
        auto [it, fresh] = ids.try_emplace(c, static_cast<int>(configs.size()));
        if (fresh) {
            configs.push_back(std::move(c));
            adj.emplace_back();
        }
        return it->second;
    };
    id_of({s.initial, {s.bottom}});
    for (std::size_t i = 0; i < configs.size(); ++i) {
        for (const auto& r : s.rules) {
            const Config c = configs[i];
            if (c.first != r.from || c.second.empty() || c.second.back() != r.pop) continue;
            Config next{r.to, c.second};
            next.second.pop_back();
            for (auto it = r.push.rbegin(); it != r.push.rend(); ++it) next.second.push_back(*it);
            const int j = id_of(std::move(next));
            adj[i].push_back(j);
        }
    }
    const auto comp = strongly_connected_components(adj);
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (!s.finals[configs[i].first]) continue;
        for (int j : adj[i])
            if (comp[j] == comp[i]) return true;
    }
    return false;
}

BuchiPds random_layered_pds(std::mt19937_64& rng, int states, int levels, int per_level) {
    BuchiPds s;
    s.state_count = states;
    s.stack_count = levels * per_level;
    s.initial = 0;
    s.bottom = 0;
    std::bernoulli_distribution coin(0.5);
    for (int q = 0; q < states; ++q) s.finals.push_back(coin(rng));
    std::uniform_int_distribution<int> state(0, states - 1);
    std::uniform_int_distribution<int> pick(0, per_level - 1);
    std::uniform_int_distribution<int> rule_count(states * levels, states * levels * per_level * 2);
    std::uniform_int_distribution<int> shape(0, 9);
    const int n = rule_count(rng);
    for (int i = 0; i < n; ++i) {
        const int level = std::uniform_int_distribution<int>(0, levels - 1)(rng);
        BuchiPds::Rule r{state(rng), level * per_level + pick(rng), state(rng), {}};
        // 0..2: pop, 3..6: swap, 7..8: push one, 9: push two.
        const int k = shape(rng);
        int len = k <= 2 ? 0 : k <= 6 ? 1 : k <= 8 ? 2 : 3;
        if (level + len > levels) len = 1;
        for (int t = 0; t < len; ++t) {
            const int lvl = level + (len - 1 - t);
            r.push.push_back(lvl * per_level + pick(rng));
        }
        s.rules.push_back(std::move(r));
    }
    return s;
}

bool okc_member_by_cuts(const OmegaKC& okc, const LassoWord& w, int unroll) {
    const std::size_t lu = w.prefix().size();
    const std::size_t lv = w.period().size();
    const std::size_t window = lu + static_cast<std::size_t>(unroll) * lv;
    const Word text = unfold(w, window);
    auto fold = [&](std::size_t pos) { return pos < lu ? pos : lu + (pos - lu) % lv; };
    const std::size_t nodes = lu + lv;
    for (const auto& [u, v] : okc.pairs) {
        std::vector<std::vector<int>> adj(nodes);
        for (std::size_t i = 0; i < nodes; ++i) {
            CykParser p(v);
            for (std::size_t j = i; j < window; ++j) {
                p.push(text[j]);
                if (p.accepts()) adj[i].push_back(static_cast<int>(fold(j + 1)));
            }
        }
        // A cut node lies on a cycle iff it shares an SCC with a successor.
        const auto comp = strongly_connected_components(adj);
        std::vector<bool> cyclic(nodes, false);
        for (std::size_t i = 0; i < nodes; ++i)
            for (int j : adj[i])
                if (comp[j] == comp[i]) cyclic[i] = true;
        std::vector<bool> seen(nodes, false);
        std::vector<int> stack;
        auto start = [&](std::size_t pos) {
            const auto f = fold(pos);
            if (!seen[f]) {
                seen[f] = true;
                stack.push_back(static_cast<int>(f));
            }
        };
        if (cfg_member(u, Word{})) start(0);
        CykParser pu(u);
        for (std::size_t j = 0; j < window; ++j) {
            pu.push(text[j]);
            if (pu.accepts()) start(j + 1);
        }
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            if (cyclic[i]) return true;
            for (int j : adj[i])
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
    }
    return false;
}

void for_each_word(const std::vector<Symbol>& letters, std::size_t max_len,
                   const std::function<void(const Word&)>& f) {
    Word w;
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        for (;;) {
            w.clear();
            for (auto d : digits) w.push_back(letters[d]);
            f(w);
            std::size_t k = len;
            while (k > 0 && ++digits[k - 1] == letters.size()) digits[--k] = 0;
            if (k == 0) break;
        }
    }
}

Word random_word(std::mt19937_64& rng, const std::vector<Symbol>& letters, std::size_t min_len,
                 std::size_t max_len) {
    const auto len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
    return w;
}

LassoWord random_lasso(std::mt19937_64& rng, const std::vector<Symbol>& letters,
                       std::size_t max_prefix, std::size_t max_period) {
    Word u = random_word(rng, letters, 0, max_prefix);
    Word v = random_word(rng, letters, 1, max_period);
    return LassoWord(std::move(u), std::move(v));
}

}  // namespace ocfl::reference
