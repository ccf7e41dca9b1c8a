/* Independent combinatorial oracles used across the test binaries. */
#ifndef TATELAB_TESTS_ORACLES_HPP
#define TATELAB_TESTS_ORACLES_HPP

#include <vector>

namespace oracles {

/* Coefficients of num(t) / den(t) as formal power series, den[0] != 0. */
inline std::vector<long> series_quotient(std::vector<long> num, std::vector<long> den, int n) {
    std::vector<long> c(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        long s = i < static_cast<int>(num.size()) ? num[i] : 0;
        for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j)
            s -= den[j] * c[i - j];
        c[i] = s / den[0];
    }
    return c;
}

/* Total Betti numbers of the residue field of the preset ring: the
 * Poincare series is 1 / (1 - 6t + 6t^2 - t^3). */
inline std::vector<long> koszul_betti(int n) {
    return series_quotient({1}, {1, -6, 6, -1}, n);
}

/* Coefficients of (2+t)/(1-t-t^2): 2, 3, 5, 8, 13, ... */
inline std::vector<long> fib_series(int n) {
    return series_quotient({2, 1}, {1, -1, -1}, n);
}

}  // namespace oracles

#endif
