#include "kummerlab/det.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace kummerlab {

using boost::multiprecision::cpp_int;

u64 det_mod(const std::vector<std::vector<u64>>& matrix, u64 m) {
    const std::size_t n = matrix.size();
    if (n == 0) return 1 % m;

    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = matrix[i][j];

    int sign = 1;
    cpp_int prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (a[c][c] == 0) {
            std::size_t pivot = c;
            while (pivot < n && a[pivot][c] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[c], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                cpp_int t = a[i][j] * a[c][c] - a[i][c] * a[c][j];
                a[i][j] = t / prev; // exact by the Bareiss identity
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }

    cpp_int det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    cpp_int r = det % cpp_int(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

} // namespace kummerlab
