#pragma once

#include <compare>
#include <tuple>
#include <vector>

#include "whitetet/intlin.hpp"

namespace whitetet {

/// Exact rational with positive denominator. Equality compares values, so
/// 1/2 == 2/4.
struct Frac {
    Int num = 0;
    Int den = 1;

    Frac() = default;
    Frac(Int numerator, Int denominator);

    friend Frac operator+(const Frac &lhs, const Frac &rhs);
    friend Frac operator-(const Frac &lhs, const Frac &rhs);
    friend bool operator==(const Frac &lhs, const Frac &rhs);
    friend std::strong_ordering operator<=>(const Frac &lhs, const Frac &rhs);
};

/// (1 - a - b) mod c, in [0, c). Requires c >= 1 and 0 <= a, b < c.
Int d_of(Int a, Int b, Int c);

/// Parameters of T_{a,b,c} with its derived d.
class CanonicalForm {
public:
    /// Throws std::invalid_argument unless c >= 1 and 0 <= a, b < c.
    CanonicalForm(Int a, Int b, Int c);

    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }
    Int d() const { return d_; }

    /// Total order used to pick canonical representatives: (c, a, b).
    std::tuple<Int, Int, Int> key() const { return {c_, a_, b_}; }

    friend bool operator==(const CanonicalForm &lhs, const CanonicalForm &rhs)
    {
        return lhs.key() == rhs.key();
    }
    friend auto operator<=>(const CanonicalForm &lhs, const CanonicalForm &rhs)
    {
        return lhs.key() <=> rhs.key();
    }

private:
    Int a_;
    Int b_;
    Int c_;
    Int d_;
};

/// <kn/c> = (kn mod c) / c. Requires c >= 1.
Frac frac_kn_c(Int k, Int n, Int c);

/// gcd(a, c) == gcd(b, c) == gcd(d, c) == 1.
bool is_clean_canonical(const CanonicalForm &cf);

/// <ka/c> + <kb/c> + <kd/c> - k/c == 1 for every k = 1 .. c-1, decided in
/// exact rationals. Requires a clean form with c > 1.
bool satisfies_system(const CanonicalForm &cf);

/// White's criterion: clean and at least one of a, b, c, d equals 1.
bool white_empty(const CanonicalForm &cf);

/// f_n(k) = floor((k+1)n/c) - floor(kn/c) on k = 1 .. c-2, for 0 < n < c
/// with gcd(n, c) = 1. Always 0 or 1.
int f_n(Int n, Int c, Int k);

/// f_n^{-1}({1}) by direct evaluation, ascending.
std::vector<Int> f_support(Int n, Int c);

/// { floor(kc/n) : k = 1 .. n-1 }, ascending; the closed form of f_support.
std::vector<Int> f_support_closed_form(Int n, Int c);

/// f_a(k) + f_b(k) + f_d(k) == 1 for k = 1 .. c-2, together with
/// a + b + d == c + 1. Requires a clean form with c > 1.
bool check_sum_system(const CanonicalForm &cf);

} // namespace whitetet
