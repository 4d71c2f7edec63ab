#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "whitetet/geometry.hpp"
#include "whitetet/whitefn.hpp"

using namespace whitetet;

TEST_CASE("Frac compares by value")
{
    CHECK(Frac(1, 2) == Frac(2, 4));
    CHECK(Frac(1, 5) + Frac(4, 5) == Frac(1, 1));
    CHECK(Frac(1, 3) < Frac(1, 2));
    CHECK_THROWS_AS(Frac(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Frac(1, -2), std::invalid_argument);
}

TEST_CASE("d_of")
{
    CHECK(d_of(1, 1, 7) == 6);
    CHECK(d_of(3, 4, 7) == 1);
    CHECK(d_of(0, 0, 1) == 0);
    CHECK(d_of(2, 2, 3) == 0);
    CHECK_THROWS_AS(d_of(7, 0, 7), std::invalid_argument);
    CHECK_THROWS_AS(d_of(0, -1, 7), std::invalid_argument);
    CHECK_THROWS_AS(d_of(0, 0, 0), std::invalid_argument);
}

TEST_CASE("CanonicalForm validates and derives d")
{
    const CanonicalForm cf(3, 4, 7);
    CHECK(cf.d() == 1);
    CHECK_THROWS_AS(CanonicalForm(1, 1, 1), std::invalid_argument);
    CHECK(CanonicalForm(0, 0, 1).d() == 0);
    CHECK(CanonicalForm(1, 2, 5) < CanonicalForm(2, 1, 5));
    CHECK(CanonicalForm(4, 4, 5) < CanonicalForm(0, 0, 6));
}

TEST_CASE("frac_kn_c")
{
    CHECK(frac_kn_c(1, 1, 2) == Frac(1, 2));
    CHECK(frac_kn_c(3, 2, 5) == Frac(1, 5));
    CHECK(frac_kn_c(3, 3, 5) == Frac(4, 5));
    CHECK(frac_kn_c(3, 2, 5) + frac_kn_c(3, 5 - 2, 5) == Frac(1, 1));
    CHECK(frac_kn_c(4, 3, 6) == Frac(0, 1));
    CHECK(frac_kn_c(-1, 1, 3) == Frac(2, 3));
    CHECK_THROWS_AS(frac_kn_c(1, 1, 0), std::invalid_argument);
}

TEST_CASE("property: fractional reflection identity for c <= 100")
{
    for (Int c = 2; c <= 100; ++c)
        for (Int n = 1; n < c; ++n)
            for (Int k = 1; k < c; ++k) {
                if ((k * n) % c == 0) {
                    continue;
                }
                REQUIRE(frac_kn_c(k, n, c) + frac_kn_c(k, c - n, c) == Frac(1, 1));
            }
}

TEST_CASE("is_clean_canonical")
{
    CHECK(is_clean_canonical(CanonicalForm(1, 1, 2)));
    CHECK_FALSE(is_clean_canonical(CanonicalForm(2, 2, 3)));
    CHECK(is_clean_canonical(CanonicalForm(0, 0, 1)));
    CHECK(is_clean_bruteforce(white_tetrahedron(1, 1, 2)));
    CHECK_FALSE(is_clean_bruteforce(white_tetrahedron(2, 2, 3)));
}

TEST_CASE("satisfies_system")
{
    CHECK(satisfies_system(CanonicalForm(1, 1, 2)));
    CHECK_FALSE(satisfies_system(CanonicalForm(2, 3, 7)));
    for (Int c = 2; c <= 40; ++c)
        for (Int a = 1; a < c; ++a)
            if (std::gcd(a, c) == 1)
                REQUIRE(satisfies_system(CanonicalForm(a, c - a, c)));

    CHECK_THROWS_AS(satisfies_system(CanonicalForm(2, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(satisfies_system(CanonicalForm(0, 0, 1)), std::invalid_argument);
}

TEST_CASE("white_empty")
{
    CHECK(white_empty(CanonicalForm(1, 1, 5)));
    CHECK(white_empty(CanonicalForm(0, 0, 1)));
    CHECK_FALSE(white_empty(CanonicalForm(2, 3, 7)));
    CHECK_FALSE(white_empty(CanonicalForm(2, 2, 3)));
    // (1, 2, 4): a = 1 but gcd(2, 4) = 2.
    CHECK_FALSE(white_empty(CanonicalForm(1, 2, 4)));
}

TEST_CASE("property: white_empty is symmetric in a and b")
{
    for (Int c = 1; c <= 60; ++c)
        for (Int a = 0; a < c; ++a)
            for (Int b = 0; b < c; ++b)
                REQUIRE(white_empty(CanonicalForm(a, b, c)) == white_empty(CanonicalForm(b, a, c)));
}

TEST_CASE("f_n examples")
{
    for (Int c = 3; c <= 20; ++c)
        for (Int k = 1; k <= c - 2; ++k)
            REQUIRE(f_n(1, c, k) == 0);
    CHECK(f_n(2, 5, 2) == 1);
    CHECK(f_n(3, 5, 1) == 1);
    CHECK(f_n(3, 5, 1) == 1 - f_n(2, 5, 1));

    CHECK_THROWS_AS(f_n(2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(f_n(0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(f_n(5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(f_n(2, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_n(2, 5, 4), std::invalid_argument);
}

TEST_CASE("property: f_n floor form equals its fractional-part form")
{
    for (Int c = 3; c <= 60; ++c)
        for (Int n = 1; n < c; ++n) {
            if (std::gcd(n, c) != 1) {
                continue;
            }
            for (Int k = 1; k <= c - 2; ++k) {
                const int value = f_n(n, c, k);
                REQUIRE((value == 0 || value == 1));
                REQUIRE(value == oracle::f_from_fractional_parts(n, c, k));
            }
        }
}

TEST_CASE("f_support")
{
    for (Int c = 2; c <= 10; ++c)
        CHECK(f_support(1, c).empty());
    CHECK(f_support(2, 5) == std::vector<Int>{2});
    CHECK(f_support_closed_form(2, 5) == std::vector<Int>{2});
    CHECK(f_support(3, 7) == std::vector<Int>{2, 4});
    CHECK(f_support_closed_form(3, 7) == std::vector<Int>{2, 4});
    // c = 2: the domain 1..c-2 is empty.
    CHECK(f_support(1, 2).empty());
    CHECK_THROWS_AS(f_support(3, 6), std::invalid_argument);
}

TEST_CASE("check_sum_system")
{
    CHECK(check_sum_system(CanonicalForm(1, 1, 2)));
    CHECK(check_sum_system(CanonicalForm(1, 2, 5)));
    const CanonicalForm t237(2, 3, 7);
    CHECK(t237.a() + t237.b() + t237.d() == 8);
    CHECK_FALSE(check_sum_system(t237));
    CHECK_THROWS_AS(check_sum_system(CanonicalForm(2, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(check_sum_system(CanonicalForm(0, 0, 1)), std::invalid_argument);
}

TEST_CASE("property: the three fast criteria agree with the oracle for clean forms, c <= 16")
{
    for (Int c = 2; c <= 16; ++c)
        for (Int a = 0; a < c; ++a)
            for (Int b = 0; b < c; ++b) {
                const CanonicalForm cf(a, b, c);
                if (!is_clean_canonical(cf)) {
                    continue;
                }
                const bool oracle_empty = is_empty_bruteforce(white_tetrahedron(a, b, c));
                REQUIRE(satisfies_system(cf) == oracle_empty);
                REQUIRE(check_sum_system(cf) == oracle_empty);
                REQUIRE(white_empty(cf) == oracle_empty);
            }
}
