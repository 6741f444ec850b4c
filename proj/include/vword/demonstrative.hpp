#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vword/cantor.hpp"
#include "vword/modular.hpp"

namespace vword {

/// A tested word whose image of the demonstration cone touched the cone
/// itself; witness is the offending image label.
struct Violation {
    GroupWord word;
    BinaryWord witness;

    bool operator==(const Violation&) const = default;
};

/// Outcome of a bounded demonstration-node check. The verdict certifies
/// only the words actually tested; max_len records the cutoff.
struct DemonstrationReport {
    BinaryWord node;
    std::size_t max_len = 0;
    std::size_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    /// Header `node=<w> max_len=<k> checked=<n>`, then one violation per
    /// line as `<word>\t<witness-cone>`.
    std::string str() const;
};

/// Tests [node] * g against [node] for each supplied word g: a violation is
/// recorded when any label of image_of_cone(evaluate(g), node) is comparable
/// to node (the cones then intersect). Every supplied word is tested as-is;
/// filtering trivial words is the caller's concern. Violations come back
/// sorted by word length, then lexicographically.
DemonstrationReport check_demonstration_node(const GeneratorMap& gm,
                                             const BinaryWord& node,
                                             std::span<const GroupWord> words);

/// Per-condition outcome of the ping-pong test below.
struct PingPongReport {
    bool x2_not_inside_x1 = false;
    bool h1_moves_x2_into_x1 = false;
    bool h2_moves_x1_into_x2 = false;

    bool ok() const {
        return x2_not_inside_x1 && h1_moves_x2_into_x1 && h2_moves_x1_into_x2;
    }
};

/// The cone specialization of the Ping-Pong Lemma: with X1 = [x1] and
/// X2 = [x2], checks X2 not contained in X1, h(X2) inside X1 for every h in
/// h1, and h(X1) inside X2 for every h in h2. All three passing certifies
/// <H1, H2> = H1 * H2 for the subgroups the supplied elements generate.
PingPongReport ping_pong_check(std::span<const Prm> h1, std::span<const Prm> h2,
                               const BinaryWord& x1, const BinaryWord& x2);

}  // namespace vword
