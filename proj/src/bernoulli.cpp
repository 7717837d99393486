#include "kummerlab/bernoulli.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "kummerlab/errors.hpp"

namespace kummerlab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Akiyama-Tanigawa transform over exact rationals.
std::vector<cpp_rational> bernoulli_exact(unsigned n_max) {
    std::vector<cpp_rational> out(n_max + 1);
    std::vector<cpp_rational> row(n_max + 1);
    for (unsigned m = 0; m <= n_max; ++m) {
        row[m] = cpp_rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j)
            row[j - 1] = cpp_int(j) * (row[j - 1] - row[j]);
        out[m] = row[0];
    }
    return out;
}

} // namespace

std::vector<ExactRational> bernoulli_table(unsigned n_max) {
    std::vector<ExactRational> out;
    out.reserve(n_max + 1);
    for (const auto& b : bernoulli_exact(n_max)) {
        out.push_back(ExactRational{numerator(b).str(), denominator(b).str()});
    }
    return out;
}

RegularityResult is_regular(u64 p) {
    if (p > 150) throw OutOfConfiguredRange("is_regular: only primes up to 150 are configured");
    if (p == 2 || !is_prime(p)) throw NotAnOddPrime("is_regular: p must be an odd prime");

    RegularityResult r;
    if (p == 3) { // empty Bernoulli range
        r.regular = true;
        return r;
    }
    const auto table = bernoulli_exact(static_cast<unsigned>(p - 3));
    const cpp_int pp = p;
    for (unsigned n = 2; n + 3 <= p; n += 2) {
        if (numerator(table[n]) % pp == 0) r.irregular_indices.push_back(n);
    }
    r.regular = r.irregular_indices.empty();
    return r;
}

} // namespace kummerlab
