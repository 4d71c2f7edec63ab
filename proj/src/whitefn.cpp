#include "whitetet/whitefn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace whitetet {
namespace {

void require_clean_nontrivial(const CanonicalForm &cf, const char *who)
{
    if (cf.c() <= 1) {
        throw std::invalid_argument(std::string(who) + " requires c > 1");
    }
    if (!is_clean_canonical(cf)) {
        throw std::invalid_argument(std::string(who) + " requires a clean form");
    }
}

void require_fn_domain(Int n, Int c)
{
    if (n <= 0 || n >= c) {
        throw std::invalid_argument("f_n requires 0 < n < c");
    }
    if (std::gcd(n, c) != 1) {
        throw std::invalid_argument("f_n requires gcd(n, c) = 1");
    }
}

} // namespace

Frac::Frac(Int numerator, Int denominator) : num(numerator), den(denominator)
{
    if (den <= 0) {
        throw std::invalid_argument("fraction denominator must be positive");
    }
}

Frac operator+(const Frac &lhs, const Frac &rhs)
{
    if (lhs.den == rhs.den) {
        return {checked_add(lhs.num, rhs.num), lhs.den};
    }
    return {checked_add(checked_mul(lhs.num, rhs.den), checked_mul(rhs.num, lhs.den)),
            checked_mul(lhs.den, rhs.den)};
}

Frac operator-(const Frac &lhs, const Frac &rhs)
{
    return lhs + Frac(checked_neg(rhs.num), rhs.den);
}

bool operator==(const Frac &lhs, const Frac &rhs)
{
    return checked_mul(lhs.num, rhs.den) == checked_mul(rhs.num, lhs.den);
}

std::strong_ordering operator<=>(const Frac &lhs, const Frac &rhs)
{
    return checked_mul(lhs.num, rhs.den) <=> checked_mul(rhs.num, lhs.den);
}

Int d_of(Int a, Int b, Int c)
{
    if (c < 1 || a < 0 || b < 0 || a >= c || b >= c) {
        throw std::invalid_argument("d_of requires c >= 1 and 0 <= a, b < c");
    }
    return floor_mod(checked_sub(checked_sub(Int{1}, a), b), c);
}

CanonicalForm::CanonicalForm(Int a, Int b, Int c) : a_(a), b_(b), c_(c), d_(d_of(a, b, c)) {}

Frac frac_kn_c(Int k, Int n, Int c)
{
    if (c < 1) {
        throw std::invalid_argument("frac_kn_c requires c >= 1");
    }
    return {floor_mod(checked_mul(k, n), c), c};
}

bool is_clean_canonical(const CanonicalForm &cf)
{
    const Int c = cf.c();
    return std::gcd(cf.a(), c) == 1 && std::gcd(cf.b(), c) == 1 && std::gcd(cf.d(), c) == 1;
}

bool satisfies_system(const CanonicalForm &cf)
{
    require_clean_nontrivial(cf, "satisfies_system");
    const Int c = cf.c();
    const Frac one(1, 1);
    for (Int k = 1; k < c; ++k) {
        const Frac lhs = frac_kn_c(k, cf.a(), c) + frac_kn_c(k, cf.b(), c) +
                         frac_kn_c(k, cf.d(), c) - Frac(k, c);
        if (lhs != one) {
            return false;
        }
    }
    return true;
}

bool white_empty(const CanonicalForm &cf)
{
    if (!is_clean_canonical(cf)) {
        return false;
    }
    return cf.a() == 1 || cf.b() == 1 || cf.c() == 1 || cf.d() == 1;
}

int f_n(Int n, Int c, Int k)
{
    require_fn_domain(n, c);
    if (k < 1 || k > c - 2) {
        throw std::invalid_argument("f_n requires 1 <= k <= c - 2");
    }
    const Int value = checked_mul(checked_add(k, Int{1}), n) / c - checked_mul(k, n) / c;
    return static_cast<int>(value);
}

std::vector<Int> f_support(Int n, Int c)
{
    require_fn_domain(n, c);
    std::vector<Int> support;
    for (Int k = 1; k <= c - 2; ++k) {
        if (f_n(n, c, k) == 1) {
            support.push_back(k);
        }
    }
    return support;
}

std::vector<Int> f_support_closed_form(Int n, Int c)
{
    require_fn_domain(n, c);
    std::vector<Int> support;
    for (Int k = 1; k < n; ++k) {
        support.push_back(checked_mul(k, c) / n);
    }
    return support;
}

bool check_sum_system(const CanonicalForm &cf)
{
    require_clean_nontrivial(cf, "check_sum_system");
    const Int c = cf.c();
    if (checked_add(checked_add(cf.a(), cf.b()), cf.d()) != checked_add(c, Int{1})) {
        return false;
    }
    for (Int k = 1; k <= c - 2; ++k) {
        if (f_n(cf.a(), c, k) + f_n(cf.b(), c, k) + f_n(cf.d(), c, k) != 1) {
            return false;
        }
    }
    return true;
}

} // namespace whitetet
