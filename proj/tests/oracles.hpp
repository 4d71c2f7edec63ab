#pragma once

// Test-only reference computations. None of these call into the library's
// arithmetic, so they stay independent of the code paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>

namespace oracle {

using Int = std::int64_t;
using Row = std::array<Int, 3>;

/// Leibniz expansion over the six permutations.
inline Int leibniz_det(const Row &r0, const Row &r1, const Row &r2)
{
    const std::array<Row, 3> m{r0, r1, r2};
    std::array<int, 3> perm{0, 1, 2};
    Int total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                inversions += perm[i] > perm[j];
        const Int term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]];
        total += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Largest divisor by trial division; small inputs only.
inline Int trial_gcd(Int a, Int b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    if (a == 0) return b;
    if (b == 0) return a;
    for (Int g = std::min(a, b); g > 1; --g) {
        if (a % g == 0 && b % g == 0) return g;
    }
    return 1;
}

/// f_n(k) through its fractional-part definition,
///   <kn/c> - <(k+1)n/c> + n/c,
/// evaluated over the common denominator c.
inline Int f_from_fractional_parts(Int n, Int c, Int k)
{
    const Int num = (k * n) % c - ((k + 1) * n) % c + n;
    return num / c; // exact: num is 0 or c
}

/// Small uniform integer; test-only, so std::uniform_int_distribution is fine.
inline Int uniform(std::mt19937_64 &rng, Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

} // namespace oracle
