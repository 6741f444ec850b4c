#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vword/prm.hpp"
#include "vword/words.hpp"

namespace vword {

/// Assignment of prms to generator names.
using GeneratorMap = std::map<std::string, Prm>;

/// Left-to-right product of the letters' prms, inverting where flagged;
/// the result is reduced. Throws UnknownGenerator for unmapped letters.
Prm evaluate(const GroupWord& w, const GeneratorMap& gm);

/// evaluate() with memoisation on word prefixes; evaluating many words that
/// share prefixes costs one composition per distinct prefix.
class Evaluator {
public:
    explicit Evaluator(GeneratorMap gm) : gm_(std::move(gm)) {}

    const Prm& of(const GroupWord& w);
    const GeneratorMap& generators() const { return gm_; }

private:
    GeneratorMap gm_;
    std::map<std::string, Prm> cache_;
};

namespace modular {

/// The normal form in C2 * C3 = <a, b | a^2, b^3>: letters alternate between
/// a and {b, b^-1}. Rewrites a^-1 -> a, aa -> 1, b b^-1 -> 1, b^-1 b -> 1,
/// bb -> b^-1, b^-1 b^-1 -> b, leftmost first, to the fixed point.
/// Letters must be a or b (either inversion).
GroupWord normalize(const GroupWord& w);

/// Geodesic length: the letter count of the normal form.
std::size_t len(const GroupWord& w);

/// All normal forms with length in [1, max_len], ordered by length then
/// lexicographically (a < b < b^-1). Counts 2^floor(k/2) + 2^ceil(k/2)
/// at each length k.
std::vector<GroupWord> enumerate_normal_forms(std::size_t max_len);

/// The commutators [a,b] and [a,b^-1] in normal form (a B a b, a b a B);
/// they generate a free subgroup of rank two.
std::pair<GroupWord, GroupWord> f2_generators();

/// {a -> element_a(), b -> element_b()}, tables in reduced form.
GeneratorMap psi_generators();

}  // namespace modular

}  // namespace vword
