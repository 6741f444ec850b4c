#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vword/cantor.hpp"

namespace vword {

/// A prefix replacement map: a bijection between two barriers acting on
/// Cantor space by prefix substitution. Elements act on the right, so
/// compose(p, q) applies p first.
///
/// The table is stored as pairs (domain word, range word) sorted by domain
/// word. Construction validates the barrier and bijection invariants but does
/// not merge sibling pairs; reduced() gives the unique minimal table and is
/// the canonical form used by equals().
class Prm {
public:
    using Pair = std::pair<BinaryWord, BinaryWord>;

    /// ({e}, {e}, e -> e).
    static Prm identity();

    /// Sorts by domain word; throws std::invalid_argument unless the domain
    /// words and the range words each form a barrier of equal size.
    explicit Prm(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return pairs_; }
    Barrier domain() const;
    Barrier range() const;

    /// Image of w under prefix substitution: sigma(d) + (w minus d) for the
    /// unique domain word d that is a prefix of w. Throws InsufficientDepth
    /// when w lies strictly above the domain barrier; use image_of_cone then.
    BinaryWord apply(const BinaryWord& w) const;

    /// Minimal set of pairwise-incomparable cone labels whose union is the
    /// image of [w]: a single deep label when some domain word is a prefix
    /// of w, otherwise the images of the domain words extending w. Computed
    /// on the reduced table, so the set is minimal for any presentation.
    std::vector<BinaryWord> image_of_cone(const BinaryWord& w) const;

    /// (range, domain, sigma^-1).
    Prm inverse() const;

    /// Merges sibling pairs (d0 -> r0, d1 -> r1) into (d -> r) until none
    /// remain; the unique minimal table inducing the same map.
    Prm reduced() const;

    bool is_reduced() const;

    /// True iff every domain word maps to itself.
    bool is_identity() const;

    /// One mapping per line, "<domain> -> <range>", canonical order.
    std::string to_text() const;

    /// Parses to_text() output; ignores blank lines and '#' comments.
    /// Throws ParseError on malformed or invalid tables.
    static Prm parse(std::string_view text);

    /// Structural comparison of the stored tables; use equals() to compare
    /// the induced maps.
    friend bool operator==(const Prm&, const Prm&) = default;

private:
    Prm() = default;
    std::vector<Pair> pairs_;
};

/// p first, then q; the result is reduced.
Prm compose(const Prm& p, const Prm& q);

/// True iff p and q induce the same map on Cantor space.
bool equals(const Prm& p, const Prm& q);

/// Smallest k <= max_order with p^k the identity, or nullopt if no such
/// power exists within the bound.
std::optional<unsigned> element_order(const Prm& p, unsigned max_order);

}  // namespace vword
