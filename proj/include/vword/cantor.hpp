#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vword {

/// How two finite binary words sit under the prefix partial order.
enum class PrefixRelation { Equal, UIsProperPrefix, VIsProperPrefix, Incomparable };

/// A finite word over {0,1}: the address of a node of the infinite rooted
/// binary tree, and the label of the cone of all infinite sequences that
/// extend it. The empty word is the root; its textual form is "e".
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string_view bits);

    /// Accepts a 0/1 string or the token "e" for the empty word.
    static BinaryWord parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    const std::string& bits() const { return bits_; }

    bool is_prefix_of(const BinaryWord& other) const;
    bool is_proper_prefix_of(const BinaryWord& other) const;

    /// The residue w such that prefix + w == *this. Requires
    /// prefix.is_prefix_of(*this).
    BinaryWord suffix_after(const BinaryWord& prefix) const;

    BinaryWord child(char bit) const;

    std::string str() const { return bits_.empty() ? "e" : bits_; }

    friend BinaryWord operator+(const BinaryWord& u, const BinaryWord& v);

    /// Lexicographic with 0 < 1 and prefixes first; the canonical order used
    /// for all serialized forms.
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::string bits_;
};

PrefixRelation prefix_relation(const BinaryWord& u, const BinaryWord& v);

/// [u] and [v] are disjoint iff neither word is a prefix of the other.
bool cones_disjoint(const BinaryWord& u, const BinaryWord& v);

/// True iff the set is an antichain whose dyadic Kraft sum is exactly 1,
/// i.e. every infinite binary sequence has exactly one element as a prefix.
/// Computed with integer carries, never floating point.
bool is_barrier(std::span<const BinaryWord> words);

/// A complete finite antichain of binary words, stored in canonical
/// lexicographic order. {e} is the minimal barrier; the empty set is not one.
class Barrier {
public:
    /// Sorts and validates; throws std::invalid_argument if the words do not
    /// form a barrier.
    explicit Barrier(std::vector<BinaryWord> words);

    static Barrier root();

    const std::vector<BinaryWord>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Index of the unique element that is a prefix of w (possibly equal),
    /// or npos when w lies strictly above the barrier.
    std::size_t find_prefix_of(const BinaryWord& w) const;

    /// Comma-separated words in canonical order.
    std::string str() const;

    friend bool operator==(const Barrier&, const Barrier&) = default;

private:
    std::vector<BinaryWord> words_;
};

/// Smallest refinement of b in which every element comparable to w either
/// equals w or extends w; splits leaves above w until none remain.
Barrier refine_to_contain(const Barrier& b, const BinaryWord& w);

}  // namespace vword
