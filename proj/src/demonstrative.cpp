#include "vword/demonstrative.hpp"

#include <algorithm>
#include <sstream>

namespace vword {

std::string DemonstrationReport::str() const {
    std::ostringstream out;
    out << "node=" << node.str() << " max_len=" << max_len
        << " checked=" << checked << '\n';
    for (const Violation& v : violations)
        out << render_word(v.word) << '\t' << v.witness.str() << '\n';
    return out.str();
}

DemonstrationReport check_demonstration_node(const GeneratorMap& gm,
                                             const BinaryWord& node,
                                             std::span<const GroupWord> words) {
    DemonstrationReport report;
    report.node = node;

    Evaluator eval(gm);
    for (const GroupWord& w : words) {
        report.max_len = std::max(report.max_len, w.size());
        ++report.checked;
        for (const BinaryWord& label : eval.of(w).image_of_cone(node)) {
            if (prefix_relation(label, node) != PrefixRelation::Incomparable) {
                report.violations.push_back({w, label});
                break;
            }
        }
    }

    std::ranges::sort(report.violations, [](const Violation& x, const Violation& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return report;
}

namespace {

// h(X) lands inside [target] for every h in the set: each image label of the
// cone [x] must extend target.
bool moves_cone_inside(std::span<const Prm> set, const BinaryWord& x,
                       const BinaryWord& target) {
    for (const Prm& p : set)
        for (const BinaryWord& label : p.image_of_cone(x))
            if (!target.is_prefix_of(label)) return false;
    return true;
}

}  // namespace

PingPongReport ping_pong_check(std::span<const Prm> h1, std::span<const Prm> h2,
                               const BinaryWord& x1, const BinaryWord& x2) {
    PingPongReport report;
    report.x2_not_inside_x1 = !x1.is_prefix_of(x2);
    report.h1_moves_x2_into_x1 = moves_cone_inside(h1, x2, x1);
    report.h2_moves_x1_into_x2 = moves_cone_inside(h2, x1, x2);
    return report;
}

}  // namespace vword
