#pragma once

#include <vector>

#include "kummerlab/numeric.hpp"

namespace kummerlab {

// Determinant of a square matrix of residues, reduced mod m. The entries
// are lifted to integers and eliminated fraction-free (Bareiss), so the
// result is exact for any modulus, prime or not.
u64 det_mod(const std::vector<std::vector<u64>>& matrix, u64 m);

} // namespace kummerlab
