#pragma once

#include "vword/prm.hpp"

namespace vword {

/// The involution a: 0 <-> 11111, 10 <-> 11110, 110 <-> 1110.
/// Together with b it generates a copy of C2 * C3 whose action never returns
/// the cone [0] to itself.
const Prm& element_a();

/// The order-three element b: the 3-cycles (0 1010 110) and (100 1011 111)
/// on its barrier {0,100,1010,1011,110,111}.
const Prm& element_b();

/// Generator of an infinite cyclic subgroup with demonstration node 0:
/// 0 -> 110, 100 -> 10, 101 -> 0, 11 -> 111.
const Prm& element_z();

}  // namespace vword
