#include "vword/elements.hpp"

namespace vword {

namespace {

Prm make_table(std::initializer_list<std::pair<const char*, const char*>> rows) {
    std::vector<Prm::Pair> pairs;
    for (const auto& [d, r] : rows) pairs.emplace_back(BinaryWord{d}, BinaryWord{r});
    return Prm{std::move(pairs)};
}

}  // namespace

const Prm& element_a() {
    static const Prm a = make_table({
        {"0", "11111"},
        {"10", "11110"},
        {"110", "1110"},
        {"1110", "110"},
        {"11110", "10"},
        {"11111", "0"},
    });
    return a;
}

const Prm& element_b() {
    static const Prm b = make_table({
        {"0", "1010"},
        {"100", "1011"},
        {"1010", "110"},
        {"1011", "111"},
        {"110", "0"},
        {"111", "100"},
    });
    return b;
}

const Prm& element_z() {
    static const Prm z = make_table({
        {"0", "110"},
        {"100", "10"},
        {"101", "0"},
        {"11", "111"},
    });
    return z;
}

}  // namespace vword
