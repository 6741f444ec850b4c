#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "vword/cantor.hpp"
#include "vword/errors.hpp"

using namespace vword;

namespace {

BinaryWord w(const char* bits) { return BinaryWord(bits); }

// Independent completeness oracle: walk every binary word at the set's
// maximum depth and demand exactly one element of the set as a prefix.
// This is the "every infinite sequence has a unique prefix in the set"
// criterion made finite, with no Kraft arithmetic involved.
bool covers_exactly_once(const std::vector<BinaryWord>& words) {
    if (words.empty()) return false;
    std::size_t depth = 0;
    for (const BinaryWord& u : words) depth = std::max(depth, u.size());
    for (std::size_t x = 0; x < (std::size_t{1} << depth); ++x) {
        std::string bits(depth, '0');
        for (std::size_t i = 0; i < depth; ++i)
            if (x & (std::size_t{1} << i)) bits[i] = '1';
        const BinaryWord leaf(bits);
        std::size_t hits = 0;
        for (const BinaryWord& u : words)
            if (u.is_prefix_of(leaf)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

bool is_antichain(const std::vector<BinaryWord>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && words[i].is_proper_prefix_of(words[j])) return false;
    return true;
}

std::vector<BinaryWord> random_word_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> count_dist(1, 6);
    std::uniform_int_distribution<int> len_dist(0, 4);
    std::uniform_int_distribution<int> bit_dist(0, 1);
    std::set<BinaryWord> out;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        std::string bits;
        const int len = len_dist(rng);
        for (int j = 0; j < len; ++j) bits += bit_dist(rng) ? '1' : '0';
        out.insert(BinaryWord(bits));
    }
    return {out.begin(), out.end()};
}

// A guaranteed barrier: start from {e} and split random leaves.
std::vector<BinaryWord> random_barrier(std::mt19937& rng, int splits) {
    std::vector<BinaryWord> words{BinaryWord()};
    for (int i = 0; i < splits; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        const std::size_t k = pick(rng);
        const BinaryWord u = words[k];
        words.erase(words.begin() + k);
        words.push_back(u.child('0'));
        words.push_back(u.child('1'));
    }
    return words;
}

}  // namespace

TEST_CASE("binary word construction and textual form") {
    CHECK(BinaryWord().empty());
    CHECK(BinaryWord().str() == "e");
    CHECK(BinaryWord::parse("e").empty());
    CHECK(BinaryWord::parse("0101").bits() == "0101");
    CHECK(w("10").size() == 2);
    CHECK(w("10").str() == "10");
    CHECK_THROWS_AS(BinaryWord("01x"), ParseError);
    CHECK_THROWS_AS(BinaryWord::parse("ee"), ParseError);
    CHECK_THROWS_AS(BinaryWord::parse(""), ParseError);
}

TEST_CASE("word concatenation, children, suffixes") {
    CHECK((w("10") + w("01")).bits() == "1001");
    CHECK((BinaryWord() + w("0")).bits() == "0");
    CHECK(w("10").child('1').bits() == "101");
    CHECK(w("10011").suffix_after(w("10")).bits() == "011");
    CHECK(w("10").suffix_after(w("10")).empty());
}

TEST_CASE("prefix relation classification") {
    CHECK(prefix_relation(BinaryWord(), w("10")) == PrefixRelation::UIsProperPrefix);
    CHECK(prefix_relation(w("10"), w("10")) == PrefixRelation::Equal);
    CHECK(prefix_relation(w("10"), w("111")) == PrefixRelation::Incomparable);
    CHECK(prefix_relation(w("111"), w("11")) == PrefixRelation::VIsProperPrefix);
    CHECK(w("0").is_prefix_of(w("0")));
    CHECK_FALSE(w("0").is_proper_prefix_of(w("0")));
    CHECK(w("11").is_proper_prefix_of(w("110")));
}

TEST_CASE("cone disjointness") {
    CHECK(cones_disjoint(w("0"), w("11111")));
    CHECK_FALSE(cones_disjoint(w("111"), w("11110")));
    CHECK_FALSE(cones_disjoint(w("10"), w("10011")));
    CHECK_FALSE(cones_disjoint(w("10"), w("10")));
}

TEST_CASE("cones_disjoint is symmetric") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto words = random_word_set(rng);
        for (const BinaryWord& u : words)
            for (const BinaryWord& v : words) {
                CHECK(cones_disjoint(u, v) == cones_disjoint(v, u));
                CHECK(cones_disjoint(u, v) ==
                      (prefix_relation(u, v) == PrefixRelation::Incomparable));
            }
    }
}

TEST_CASE("barrier recognition on the worked examples") {
    CHECK(is_barrier(std::vector<BinaryWord>{w("0"), w("100"), w("101"), w("11")}));
    CHECK_FALSE(is_barrier(std::vector<BinaryWord>{w("0"), w("100"), w("11")}));
    CHECK_FALSE(is_barrier(
        std::vector<BinaryWord>{w("0"), w("100"), w("101"), w("11"), w("110")}));
    CHECK(is_barrier(std::vector<BinaryWord>{BinaryWord()}));
    CHECK_FALSE(is_barrier(std::vector<BinaryWord>{}));
}

TEST_CASE("barrier recognition agrees with the exhaustive coverage oracle") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        const auto words = random_word_set(rng);
        const bool oracle = is_antichain(words) && covers_exactly_once(words);
        CHECK(is_barrier(words) == oracle);
    }
    for (int splits = 0; splits < 12; ++splits) {
        auto words = random_barrier(rng, splits);
        CHECK(is_barrier(words));
        CHECK(covers_exactly_once(words));
        // Removing any single word must break completeness.
        if (words.size() > 1) {
            auto broken = words;
            broken.pop_back();
            CHECK_FALSE(is_barrier(broken));
        }
    }
}

TEST_CASE("Barrier class canonicalizes and validates") {
    const Barrier b({w("11"), w("0"), w("100"), w("101")});
    CHECK(b.size() == 4);
    CHECK(b.str() == "0,100,101,11");
    CHECK(b.words().front() == w("0"));
    CHECK_THROWS_AS(Barrier({w("0"), w("100"), w("11")}), std::invalid_argument);
    CHECK_THROWS_AS(Barrier({}), std::invalid_argument);
    CHECK(Barrier::root().size() == 1);
    CHECK(Barrier::root().words().front().empty());
}

TEST_CASE("finding the barrier word above a given address") {
    const Barrier b({w("0"), w("100"), w("101"), w("11")});
    CHECK(b.words()[b.find_prefix_of(w("0110"))] == w("0"));
    CHECK(b.words()[b.find_prefix_of(w("100"))] == w("100"));
    CHECK(b.words()[b.find_prefix_of(w("111"))] == w("11"));
    CHECK(b.find_prefix_of(w("10")) == Barrier::npos);
    CHECK(b.find_prefix_of(BinaryWord()) == Barrier::npos);
}

TEST_CASE("refinement to contain a word") {
    CHECK(refine_to_contain(Barrier::root(), w("10")) ==
          Barrier({w("0"), w("10"), w("11")}));
    CHECK(refine_to_contain(Barrier({w("0"), w("1")}), w("0")) ==
          Barrier({w("0"), w("1")}));
    CHECK(refine_to_contain(Barrier({w("0"), w("10"), w("11")}), w("111")) ==
          Barrier({w("0"), w("10"), w("110"), w("111")}));
}

TEST_CASE("refinement output is a barrier refining the input") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> len_dist(0, 6);
    std::uniform_int_distribution<int> bit_dist(0, 1);
    for (int i = 0; i < 100; ++i) {
        const Barrier b(random_barrier(rng, i % 8));
        std::string bits;
        const int len = len_dist(rng);
        for (int j = 0; j < len; ++j) bits += bit_dist(rng) ? '1' : '0';
        const BinaryWord target(bits);

        const Barrier refined = refine_to_contain(b, target);
        CHECK(is_barrier(refined.words()));
        for (const BinaryWord& u : b.words()) {
            const bool covered = std::any_of(
                refined.words().begin(), refined.words().end(),
                [&](const BinaryWord& v) { return u.is_prefix_of(v); });
            CHECK(covered);
        }
        for (const BinaryWord& v : refined.words())
            if (prefix_relation(v, target) != PrefixRelation::Incomparable)
                CHECK(target.is_prefix_of(v));
    }
}
