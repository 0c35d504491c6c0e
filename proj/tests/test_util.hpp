#pragma once

// Independent oracles shared by the test suites.  Everything here is the
// slow, obviously-correct route: quadratic pair counts, erase-based
// decoding, full enumerations and plain quadrature, kept deliberately free
// of the library's optimized paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "parkfn/perm.hpp"

namespace parkfn::testutil {

inline std::int64_t naive_inversions(const std::vector<int>& word) {
    std::int64_t inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[j] < word[i]) ++inv;
    return inv;
}

// Decode by repeatedly selecting the rank-th remaining slot, O(n^2).
inline Permutation naive_lehmer_decode(const LehmerCode& code) {
    const int n = code.size();
    std::vector<int> slots(static_cast<std::size_t>(n));
    std::iota(slots.begin(), slots.end(), 1);
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        const int rank = j - code.at(j) + 1;  // 1-based among remaining
        const int pos = slots[static_cast<std::size_t>(rank) - 1];
        slots.erase(slots.begin() + (rank - 1));
        word[static_cast<std::size_t>(pos) - 1] = j;
    }
    return Permutation(std::move(word));
}

inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double fm, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
           simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-10) {
    const double m = 0.5 * (a + b);
    return simpson(f, a, b, f(a), f(b), f(m), eps, 50);
}

}  // namespace parkfn::testutil
