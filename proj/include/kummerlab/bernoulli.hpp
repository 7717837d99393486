#pragma once

#include <string>
#include <vector>

#include "kummerlab/numeric.hpp"

namespace kummerlab {

struct ExactRational {
    std::string numerator;   // decimal, sign folded in
    std::string denominator; // decimal, positive
};

// B_0 .. B_n as exact rationals (B_1 = +1/2 convention; the even-index
// values are convention-independent).
std::vector<ExactRational> bernoulli_table(unsigned n_max);

struct RegularityResult {
    bool regular = false;
    std::vector<unsigned> irregular_indices; // even n in [2, p-3] with p | numerator(B_n)
};

// Kummer criterion with exact rational Bernoulli numbers. Accepts odd
// primes up to the configured bound of 150.
RegularityResult is_regular(u64 p);

} // namespace kummerlab
