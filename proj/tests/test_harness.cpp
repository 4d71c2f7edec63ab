#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whitetet/harness.hpp"

using namespace whitetet;

namespace {

std::vector<std::tuple<Int, Int, Int>> oracle_empty_forms(Int c)
{
    std::vector<std::tuple<Int, Int, Int>> forms;
    for (Int a = 0; a < c; ++a)
        for (Int b = 0; b < c; ++b)
            if (is_empty_bruteforce(white_tetrahedron(a, b, c)))
                forms.emplace_back(a, b, c);
    return forms;
}

std::vector<std::tuple<Int, Int, Int>> keys(const std::vector<CanonicalForm> &forms)
{
    std::vector<std::tuple<Int, Int, Int>> out;
    for (const auto &cf : forms)
        out.emplace_back(cf.a(), cf.b(), cf.c());
    return out;
}

} // namespace

TEST_CASE("verify_white small ranges")
{
    VerificationReport r1 = verify_white(1);
    CHECK(r1.ok());
    CHECK(r1.tally_for("white_empty_matches_oracle").passed == 1);

    using F = std::tuple<Int, Int, Int>;
    CHECK(oracle_empty_forms(2) == std::vector<F>{{1, 1, 2}});
    CHECK(keys(empty_forms(2)) == oracle_empty_forms(2));
    CHECK(oracle_empty_forms(3) == std::vector<F>{{1, 1, 3}, {1, 2, 3}, {2, 1, 3}});
    CHECK(keys(empty_forms(3)) == oracle_empty_forms(3));

    VerificationReport r3 = verify_white(3);
    CHECK(r3.ok());
    CHECK(r3.total_cases() == 2 * (1 + 4 + 9));
}

TEST_CASE("verify_white at c_max = 12")
{
    const VerificationReport r = verify_white(12);
    CHECK(r.ok());
    CHECK(r.counterexamples.empty());
}

TEST_CASE("coplanarity and interior points")
{
    const CanonicalForm cf(1, 1, 2);
    CHECK(satisfied_clauses(cf) == std::vector<std::string>{"a=1", "b=1", "d=1"});
    const IntVec3 p = parallelepiped_interior_points(1, 1, 2).front();
    CHECK(p.x() == 1);
    CHECK(p.y() == 1);
    CHECK(p.x() + p.y() - p.z() == 1);

    for (const IntVec3 &q : parallelepiped_interior_points(3, 4, 7))
        CHECK(q.x() + q.y() - q.z() == 1);

    CHECK(verify_coplanarity(15).ok());
    CHECK(verify_interior_points(12).ok());
}

TEST_CASE("f_n properties and equation systems")
{
    const VerificationReport fn = verify_fn_properties(40);
    CHECK(fn.ok());
    for (const auto &c : fn.checks)
        CHECK(c.passed > 0);
    CHECK(verify_equation_systems(12).ok());
    CHECK(verify_witness_families(30, 12).ok());
}

TEST_CASE("normalization trials")
{
    VerificationReport r = verify_normalization(200, 42, 8);
    CHECK(r.ok());
    CHECK(r.tally_for("canonical_form_recovered").passed == 200);
    CHECK(*r.seed == 42);

    // Determinism from the seed.
    const VerificationReport again = verify_normalization(200, 42, 8);
    REQUIRE(again.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i)
        CHECK(again.checks[i].passed == r.checks[i].passed);

    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 5; ++i)
        CHECK(random_unimodular_map(a) == random_unimodular_map(b));
}

TEST_CASE("sign-flip image of T(1,1,2) normalizes back")
{
    IntMatrix3 flip = IntMatrix3::Identity();
    flip(2, 2) = -1;
    const Tetrahedron image =
        map_tetrahedron(AffineUnimodularMap::linear(flip), white_tetrahedron(1, 1, 2));
    CHECK(canonical_form(image) == CanonicalForm(1, 1, 2));
    CHECK(canonical_form(white_tetrahedron(1, 1, 2)) == CanonicalForm(1, 1, 2));
}

TEST_CASE("random unimodular maps stay unimodular")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        const AffineUnimodularMap m = random_unimodular_map(rng);
        CHECK(is_unimodular(m.matrix()));
        CHECK(m.translation().cwiseAbs().maxCoeff() <= 5);
    }
    for (int i = 0; i < 1000; ++i) {
        const Int v = draw(rng, -3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("report bookkeeping")
{
    VerificationReport r;
    r.record("x", true, [] { return std::string("unused"); });
    CHECK(r.ok());
    r.record("x", false, [] { return std::string("boom"); });
    CHECK_FALSE(r.ok());
    CHECK(r.counterexamples.front() == "x: boom");
    for (int i = 0; i < 100; ++i)
        r.record("y", false, [] { return std::string("again"); });
    CHECK(r.counterexamples.size() == VerificationReport::max_counterexamples);
    CHECK(r.total_failures() == 101);
}

TEST_CASE("run_suite dispatch")
{
    CHECK(suite_names().size() == 7);
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    SuiteOptions small;
    small.c_max = 2;
    CHECK_THROWS_AS(run_suite("fn", small), std::invalid_argument);
    CHECK(run_suite("white", small).ok());
    CHECK(run_suite("coplanar", small).ok());
}
