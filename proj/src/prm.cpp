#include "vword/prm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vword/errors.hpp"

namespace vword {

namespace {

std::vector<BinaryWord> firsts(const std::vector<Prm::Pair>& pairs) {
    std::vector<BinaryWord> out;
    out.reserve(pairs.size());
    for (const auto& [d, r] : pairs) out.push_back(d);
    return out;
}

std::vector<BinaryWord> seconds(const std::vector<Prm::Pair>& pairs) {
    std::vector<BinaryWord> out;
    out.reserve(pairs.size());
    for (const auto& [d, r] : pairs) out.push_back(r);
    return out;
}

}  // namespace

Prm Prm::identity() {
    Prm p;
    p.pairs_.emplace_back(BinaryWord{}, BinaryWord{});
    return p;
}

Prm::Prm(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(),
              [](const Pair& a, const Pair& b) { return a.first < b.first; });
    if (!is_barrier(firsts(pairs_)))
        throw std::invalid_argument("prm domain words do not form a barrier");
    auto range_words = seconds(pairs_);
    if (!is_barrier(range_words))
        throw std::invalid_argument("prm range words do not form a barrier");
    // Barrier + equal sizes already forces a bijection (barriers are sets).
}

Barrier Prm::domain() const { return Barrier{firsts(pairs_)}; }

Barrier Prm::range() const { return Barrier{seconds(pairs_)}; }

BinaryWord Prm::apply(const BinaryWord& w) const {
    for (const auto& [d, r] : pairs_)
        if (d.is_prefix_of(w)) return r + w.suffix_after(d);
    throw InsufficientDepth("no domain word of the prm is a prefix of '" + w.str() + "'");
}

std::vector<BinaryWord> Prm::image_of_cone(const BinaryWord& w) const {
    // Minimality is a property of the map, not of the table: compute on the
    // reduced form, where sibling pairs that would split a cone are merged.
    const Prm base = reduced();
    for (const auto& [d, r] : base.pairs_)
        if (d.is_prefix_of(w)) return {r + w.suffix_after(d)};
    std::vector<BinaryWord> out;
    for (const auto& [d, r] : base.pairs_)
        if (w.is_proper_prefix_of(d)) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

Prm Prm::inverse() const {
    std::vector<Pair> inv;
    inv.reserve(pairs_.size());
    for (const auto& [d, r] : pairs_) inv.emplace_back(r, d);
    return Prm{std::move(inv)};
}

Prm Prm::reduced() const {
    std::vector<Pair> pairs = pairs_;
    // Sibling pairs are adjacent in a lexicographically sorted antichain, so
    // one left-to-right scan with backtracking reaches the fixed point.
    std::size_t i = 0;
    while (i + 1 < pairs.size()) {
        const auto& [d0, r0] = pairs[i];
        const auto& [d1, r1] = pairs[i + 1];
        bool siblings = !d0.empty() && !d1.empty() && !r0.empty() && !r1.empty() &&
                        d0.bits().back() == '0' && d1.bits().back() == '1' &&
                        r0.bits().back() == '0' && r1.bits().back() == '1' &&
                        d0.bits().substr(0, d0.size() - 1) == d1.bits().substr(0, d1.size() - 1) &&
                        r0.bits().substr(0, r0.size() - 1) == r1.bits().substr(0, r1.size() - 1);
        if (siblings) {
            BinaryWord d{std::string_view(d0.bits()).substr(0, d0.size() - 1)};
            BinaryWord r{std::string_view(r0.bits()).substr(0, r0.size() - 1)};
            pairs[i] = {d, r};
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (i > 0) --i;
        } else {
            ++i;
        }
    }
    Prm out;
    out.pairs_ = std::move(pairs);
    return out;
}

bool Prm::is_reduced() const { return *this == reduced(); }

bool Prm::is_identity() const {
    for (const auto& [d, r] : pairs_)
        if (d != r) return false;
    return true;
}

std::string Prm::to_text() const {
    std::string out;
    for (const auto& [d, r] : pairs_) {
        out += d.str();
        out += " -> ";
        out += r.str();
        out += '\n';
    }
    return out;
}

Prm Prm::parse(std::string_view text) {
    std::vector<Pair> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw ParseError("prm line " + std::to_string(lineno) + ": expected '<word> -> <word>'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string lhs = trim(line.substr(0, arrow));
        std::string rhs = trim(line.substr(arrow + 2));
        if (lhs.empty() || rhs.empty())
            throw ParseError("prm line " + std::to_string(lineno) + ": missing word");
        pairs.emplace_back(BinaryWord::parse(lhs), BinaryWord::parse(rhs));
    }
    if (pairs.empty()) throw ParseError("empty prm table");
    try {
        return Prm{std::move(pairs)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid prm table: ") + e.what());
    }
}

Prm compose(const Prm& p, const Prm& q) {
    std::vector<Prm::Pair> pairs;
    for (const auto& [d, r] : p.pairs()) {
        // Push the cone [r] through q, transporting any refinement of [r]
        // back to the domain side through p.
        bool deep = false;
        for (const auto& [dq, rq] : q.pairs()) {
            if (dq.is_prefix_of(r)) {
                pairs.emplace_back(d, rq + r.suffix_after(dq));
                deep = true;
                break;
            }
        }
        if (!deep) {
            for (const auto& [dq, rq] : q.pairs())
                if (r.is_proper_prefix_of(dq)) pairs.emplace_back(d + dq.suffix_after(r), rq);
        }
    }
    return Prm{std::move(pairs)}.reduced();
}

bool equals(const Prm& p, const Prm& q) { return p.reduced() == q.reduced(); }

std::optional<unsigned> element_order(const Prm& p, unsigned max_order) {
    Prm power = p.reduced();
    for (unsigned k = 1; k <= max_order; ++k) {
        if (power.is_identity()) return k;
        power = compose(power, p);
    }
    return std::nullopt;
}

}  // namespace vword
