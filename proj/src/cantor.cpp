#include "vword/cantor.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vword/errors.hpp"

namespace vword {

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
    for (char c : bits_) {
        if (c != '0' && c != '1')
            throw ParseError("binary word may contain only 0 and 1: '" + std::string(bits) + "'");
    }
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text == "e") return BinaryWord{};
    if (text.empty()) throw ParseError("empty binary word: write e for the root");
    return BinaryWord{text};
}

bool BinaryWord::is_prefix_of(const BinaryWord& other) const {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
}

bool BinaryWord::is_proper_prefix_of(const BinaryWord& other) const {
    return bits_.size() < other.bits_.size() && is_prefix_of(other);
}

BinaryWord BinaryWord::suffix_after(const BinaryWord& prefix) const {
    if (!prefix.is_prefix_of(*this))
        throw std::invalid_argument("suffix_after: '" + prefix.str() + "' is not a prefix of '" +
                                    str() + "'");
    BinaryWord out;
    out.bits_ = bits_.substr(prefix.size());
    return out;
}

BinaryWord BinaryWord::child(char bit) const {
    BinaryWord out = *this;
    out.bits_.push_back(bit);
    return out;
}

BinaryWord operator+(const BinaryWord& u, const BinaryWord& v) {
    BinaryWord out = u;
    out.bits_ += v.bits_;
    return out;
}

PrefixRelation prefix_relation(const BinaryWord& u, const BinaryWord& v) {
    if (u == v) return PrefixRelation::Equal;
    if (u.is_prefix_of(v)) return PrefixRelation::UIsProperPrefix;
    if (v.is_prefix_of(u)) return PrefixRelation::VIsProperPrefix;
    return PrefixRelation::Incomparable;
}

bool cones_disjoint(const BinaryWord& u, const BinaryWord& v) {
    return prefix_relation(u, v) == PrefixRelation::Incomparable;
}

bool is_barrier(std::span<const BinaryWord> words) {
    if (words.empty()) return false;

    std::vector<BinaryWord> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    // In lexicographic order a prefix pair, if any, appears adjacent.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i] == sorted[i + 1]) return false;
        if (sorted[i].is_prefix_of(sorted[i + 1])) return false;
    }

    // Kraft sum as binary carries: sum of 2^(-len) equals 1 iff every count
    // of words at depth l is even after carrying, ending with one word at
    // the root.
    std::map<std::size_t, unsigned long long> count_at_depth;
    for (const auto& w : sorted) ++count_at_depth[w.size()];
    while (true) {
        auto it = count_at_depth.rbegin();
        std::size_t depth = it->first;
        unsigned long long count = it->second;
        if (depth == 0) return count == 1;
        if (count % 2 != 0) return false;
        count_at_depth.erase(depth);
        count_at_depth[depth - 1] += count / 2;
    }
}

Barrier::Barrier(std::vector<BinaryWord> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    if (!is_barrier(words_)) {
        std::string listing;
        for (const auto& w : words_) listing += (listing.empty() ? "" : ",") + w.str();
        throw std::invalid_argument("not a barrier: {" + listing + "}");
    }
}

Barrier Barrier::root() { return Barrier{{BinaryWord{}}}; }

std::size_t Barrier::find_prefix_of(const BinaryWord& w) const {
    // At most one element can be a prefix of w since the set is an antichain.
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i].is_prefix_of(w)) return i;
    return npos;
}

std::string Barrier::str() const {
    std::string out;
    for (const auto& w : words_) {
        if (!out.empty()) out += ',';
        out += w.str();
    }
    return out;
}

Barrier refine_to_contain(const Barrier& b, const BinaryWord& w) {
    std::vector<BinaryWord> words = b.words();
    bool split = true;
    while (split) {
        split = false;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i].is_proper_prefix_of(w)) {
                BinaryWord leaf = words[i];
                words[i] = leaf.child('0');
                words.push_back(leaf.child('1'));
                split = true;
                break;
            }
        }
    }
    return Barrier{std::move(words)};
}

}  // namespace vword
