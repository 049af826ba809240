#pragma once
// Exact determinants.  Bareiss (fraction-free) elimination keeps every
// intermediate an integer, so there is no rational blow-up inside the sweep.

#include <vector>

#include "pf/rational.hpp"

namespace pf {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Determinant of a square integer matrix; throws std::invalid_argument on
// ragged or empty input.
Int bareiss_det(IntMatrix a);

// Determinant of a square rational matrix: clears each row's denominators,
// runs Bareiss, divides the scaling back out.
Rat det(const RatMatrix& a);

}  // namespace pf
