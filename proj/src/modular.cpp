#include "vword/modular.hpp"

#include "vword/elements.hpp"
#include "vword/errors.hpp"

namespace vword {

Prm evaluate(const GroupWord& w, const GeneratorMap& gm) {
    Prm acc = Prm::identity();
    for (const GenSymbol& s : w) {
        auto it = gm.find(s.base);
        if (it == gm.end()) throw UnknownGenerator(s.base);
        acc = compose(acc, s.inverted ? it->second.inverse() : it->second);
    }
    return acc;
}

const Prm& Evaluator::of(const GroupWord& w) {
    const std::string key = render_word(w);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Prm value = Prm::identity();
    if (!w.empty()) {
        GroupWord prefix(w.begin(), w.end() - 1);
        const GenSymbol& s = w.back();
        auto it = gm_.find(s.base);
        if (it == gm_.end()) throw UnknownGenerator(s.base);
        value = compose(of(prefix), s.inverted ? it->second.inverse() : it->second);
    }
    return cache_.emplace(key, std::move(value)).first->second;
}

namespace modular {

namespace {

// A syllable is a generator with a nonzero exponent: a^1, b^1 or b^2
// (b^2 = b^-1 since b has order three).
struct Syllable {
    char base;     // 'a' or 'b'
    int exponent;  // a: 1; b: 1 or 2
};

int order_of(char base) { return base == 'a' ? 2 : 3; }

}  // namespace

GroupWord normalize(const GroupWord& w) {
    std::vector<Syllable> stack;
    for (const GenSymbol& s : w) {
        if (s.base != "a" && s.base != "b") throw UnknownGenerator(s.base);
        const char base = s.base[0];
        const int order = order_of(base);
        // a^-1 = a, b^-1 = b^2.
        int delta = s.inverted ? order - 1 : 1;
        if (!stack.empty() && stack.back().base == base) {
            int merged = (stack.back().exponent + delta) % order;
            stack.pop_back();
            if (merged != 0) stack.push_back({base, merged});
        } else {
            stack.push_back({base, delta});
        }
    }

    GroupWord out;
    for (const Syllable& syl : stack) {
        if (syl.base == 'a')
            out.push_back({"a", false});
        else
            out.push_back({"b", syl.exponent == 2});
    }
    return out;
}

std::size_t len(const GroupWord& w) { return normalize(w).size(); }

std::vector<GroupWord> enumerate_normal_forms(std::size_t max_len) {
    static const GenSymbol kA{"a", false};
    static const GenSymbol kB{"b", false};
    static const GenSymbol kBInv{"b", true};

    std::vector<GroupWord> out;
    // Level-by-level: words of equal length stay sorted because parents are
    // visited in order and each letter menu below is in order a < b < b^-1.
    std::vector<GroupWord> level;
    for (const GenSymbol& s : {kA, kB, kBInv}) level.push_back({s});
    for (std::size_t k = 1; k <= max_len && !level.empty(); ++k) {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<GroupWord> next;
        for (const GroupWord& w : level) {
            if (w.back().base == "a") {
                for (const GenSymbol& s : {kB, kBInv}) {
                    next.push_back(w);
                    next.back().push_back(s);
                }
            } else {
                next.push_back(w);
                next.back().push_back(kA);
            }
        }
        level = std::move(next);
    }
    return out;
}

std::pair<GroupWord, GroupWord> f2_generators() {
    // [a,b] = a b^-1 a b and [a,b^-1] = a b a b^-1 once normalized
    // (a^-1 = a and b^-2 = b).
    const GroupWord x = {{"a", false}, {"b", true}, {"a", false}, {"b", false}};
    const GroupWord y = {{"a", false}, {"b", false}, {"a", false}, {"b", true}};
    return {x, y};
}

GeneratorMap psi_generators() {
    // element_b() carries the permutation-form table (domain = range); the
    // map invariant wants minimal tables, so reduce both on the way in.
    return {{"a", element_a().reduced()}, {"b", element_b().reduced()}};
}

}  // namespace modular

}  // namespace vword
