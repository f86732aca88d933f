#include "ocfl/erasure.hpp"

#include <algorithm>

namespace ocfl {

namespace {

// Effect of a block on any stack tall enough: pop `deficit`, then push `survivors`.
struct BlockEffect {
    std::size_t deficit = 0;
    Word survivors;
};

BlockEffect block_effect(std::span<const Symbol> block, const Symbol& eraser) {
    BlockEffect e;
    for (const auto& s : block) {
        if (s != eraser)
            e.survivors.push_back(s);
        else if (!e.survivors.empty())
            e.survivors.pop_back();
        else
            ++e.deficit;
    }
    return e;
}

}  // namespace

std::string to_string(const EraseOutcome& r) {
    if (r.is_undefined())
        return "undefined";
    if (r.is_finite())
        return "finite: " + to_string(r.finite_word());
    return "infinite: " + to_string(r.infinite_word());
}

EraseOutcome erase_finite(std::span<const Symbol> x, const Symbol& eraser) {
    Word stack;
    for (const auto& s : x) {
        if (s != eraser) {
            stack.push_back(s);
        } else {
            if (stack.empty())
                return EraseOutcome::undefined();
            stack.pop_back();
        }
    }
    return EraseOutcome::finite(std::move(stack));
}

EraseOutcome erase_lasso(const LassoWord& x, const Symbol& eraser) {
    auto head = erase_finite(x.prefix(), eraser);
    if (head.is_undefined())
        return head;
    const Word& start = head.finite_word();
    const auto effect = block_effect(x.period(), eraser);
    const std::size_t d = effect.deficit;
    const std::size_t s = effect.survivors.size();

    if (start.size() < d || s < d)
        return EraseOutcome::undefined();

    Word base(start.begin(), start.end() - static_cast<std::ptrdiff_t>(d));
    if (s > d) {
        Word loop(effect.survivors.begin(), effect.survivors.end() - static_cast<std::ptrdiff_t>(d));
        return EraseOutcome::infinite(LassoWord(std::move(base), std::move(loop)));
    }

    // Height is constant from the first period on; every later period repeats the same
    // stack sequence, so the limit is the common prefix of the stacks seen in one period.
    Word stack = base;
    stack.insert(stack.end(), effect.survivors.begin(), effect.survivors.end());
    std::size_t common = stack.size();
    Word first = stack;
    for (const auto& sym : x.period()) {
        if (sym != eraser)
            stack.push_back(sym);
        else
            stack.pop_back();
        std::size_t k = 0;
        while (k < common && k < stack.size() && stack[k] == first[k])
            ++k;
        common = k;
    }
    first.erase(first.begin() + static_cast<std::ptrdiff_t>(common), first.end());
    return EraseOutcome::finite(std::move(first));
}

EraseOutcome erase_nested(const LassoWord& x, int n) {
    if (n < 0)
        throw Error("erase_nested: negative rank");
    for (const auto& s : letters(x))
        if (s.is_eraser() && s.rank() > n)
            throw Error("erase_nested: eraser " + s.str() + " exceeds rank " + std::to_string(n));
    LassoWord cur = normalize(x);
    for (int k = n; k >= 1; --k) {
        auto r = erase_lasso(cur, Symbol::eraser(k));
        if (!r.is_infinite())
            return r;
        cur = r.infinite_word();
    }
    return EraseOutcome::infinite(cur);
}

bool member_A_approx_n(const LassoWord& x, const BuchiFA& a, int n) {
    auto r = erase_nested(x, n);
    if (!r.is_infinite())
        return false;
    const auto& y = r.infinite_word();
    for (const auto& s : letters(y))
        if (!a.alphabet().contains(s))
            return false;
    return buchi_member(a, y);
}

bool member_A_approx_n(const LassoWord& x, const MullerFA& a, int n) {
    auto r = erase_nested(x, n);
    if (!r.is_infinite())
        return false;
    const auto& y = r.infinite_word();
    for (const auto& s : letters(y))
        if (!a.alphabet().contains(s))
            return false;
    return muller_member(a, y);
}

}  // namespace ocfl
