#include "whitetet/harness.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace whitetet {
namespace {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe_point(const IntVec3 &p)
{
    std::ostringstream out;
    out << '(' << p.x() << ',' << p.y() << ',' << p.z() << ')';
    return out.str();
}

std::string describe(const CanonicalForm &cf)
{
    return describe_form(cf.a(), cf.b(), cf.c());
}

bool lex_less(const IntVec3 &p, const IntVec3 &q)
{
    return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
}

std::string describe_tetrahedron(const Tetrahedron &t)
{
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        out += (i ? " " : "") + describe_point(t.vertex(i));
    }
    return out + "]";
}

std::string bool_str(bool b)
{
    return b ? "true" : "false";
}

} // namespace

std::uint64_t VerificationReport::total_cases() const
{
    std::uint64_t n = 0;
    for (const auto &c : checks) {
        n += c.passed + c.failed;
    }
    return n;
}

std::uint64_t VerificationReport::total_failures() const
{
    std::uint64_t n = 0;
    for (const auto &c : checks) {
        n += c.failed;
    }
    return n;
}

CheckTally &VerificationReport::tally_for(std::string_view check)
{
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckTally &t) { return t.name == check; });
    if (it != checks.end()) {
        return *it;
    }
    checks.push_back({std::string(check), 0, 0});
    return checks.back();
}

std::string describe_form(Int a, Int b, Int c)
{
    std::ostringstream out;
    out << "T(" << a << ',' << b << ',' << c << ')';
    return out.str();
}

std::vector<CanonicalForm> empty_forms(Int c)
{
    std::vector<CanonicalForm> forms;
    for (Int a = 0; a < c; ++a) {
        for (Int b = 0; b < c; ++b) {
            CanonicalForm cf(a, b, c);
            if (white_empty(cf)) {
                forms.push_back(cf);
            }
        }
    }
    return forms;
}

std::vector<std::string> satisfied_clauses(const CanonicalForm &cf)
{
    std::vector<std::string> clauses;
    if (cf.c() == 1) clauses.emplace_back("c=1");
    if (cf.a() == 1) clauses.emplace_back("a=1");
    if (cf.b() == 1) clauses.emplace_back("b=1");
    if (cf.d() == 1) clauses.emplace_back("d=1");
    return clauses;
}

VerificationReport verify_white(Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "white";
    report.c_max = c_max;
    report.tally_for("white_empty_matches_oracle");
    report.tally_for("clean_matches_oracle");

    for (Int c = 1; c <= c_max; ++c) {
        for (Int a = 0; a < c; ++a) {
            for (Int b = 0; b < c; ++b) {
                const CanonicalForm cf(a, b, c);
                const auto points = lattice_points_in(white_tetrahedron(a, b, c));
                bool oracle_empty = true;
                bool oracle_clean = true;
                for (const auto &lp : points) {
                    oracle_empty &= lp.where == PointLocation::Vertex;
                    oracle_clean &= lp.where != PointLocation::BoundaryNonVertex;
                }
                const bool fast_empty = white_empty(cf);
                const bool fast_clean = is_clean_canonical(cf);
                report.record("white_empty_matches_oracle", fast_empty == oracle_empty, [&] {
                    return describe(cf) + " white_empty=" + bool_str(fast_empty) +
                           " oracle=" + bool_str(oracle_empty);
                });
                report.record("clean_matches_oracle", fast_clean == oracle_clean, [&] {
                    return describe(cf) + " is_clean_canonical=" + bool_str(fast_clean) +
                           " oracle=" + bool_str(oracle_clean);
                });
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

VerificationReport verify_equation_systems(Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "system";
    report.c_max = c_max;
    report.tally_for("system_matches_sum_system");
    report.tally_for("system_matches_oracle");

    for (Int c = 2; c <= c_max; ++c) {
        for (Int a = 0; a < c; ++a) {
            for (Int b = 0; b < c; ++b) {
                const CanonicalForm cf(a, b, c);
                if (!is_clean_canonical(cf)) {
                    continue;
                }
                const bool rational = satisfies_system(cf);
                const bool summed = check_sum_system(cf);
                const bool oracle = is_empty_bruteforce(white_tetrahedron(a, b, c));
                report.record("system_matches_sum_system", rational == summed, [&] {
                    return describe(cf) + " satisfies_system=" + bool_str(rational) +
                           " check_sum_system=" + bool_str(summed);
                });
                report.record("system_matches_oracle", rational == oracle, [&] {
                    return describe(cf) + " satisfies_system=" + bool_str(rational) +
                           " oracle=" + bool_str(oracle);
                });
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

VerificationReport verify_interior_points(Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "points";
    report.c_max = c_max;
    report.tally_for("interior_count_is_c_minus_1");
    report.tally_for("generator_matches_oracle");

    for (Int c = 1; c <= c_max; ++c) {
        for (Int a = 0; a < c; ++a) {
            for (Int b = 0; b < c; ++b) {
                const CanonicalForm cf(a, b, c);
                if (!is_clean_canonical(cf)) {
                    continue;
                }
                auto generated = parallelepiped_interior_points(a, b, c);
                const auto scanned = parallelepiped_interior_bruteforce(
                    IntVec3::UnitX(), IntVec3::UnitY(), IntVec3(a, b, c));
                report.record("interior_count_is_c_minus_1",
                              static_cast<Int>(scanned.size()) == c - 1, [&] {
                                  return describe(cf) + " oracle found " +
                                         std::to_string(scanned.size()) + " interior points";
                              });
                std::sort(generated.begin(), generated.end(), lex_less);
                report.record("generator_matches_oracle", generated == scanned,
                              [&] { return describe(cf) + " generated points differ from scan"; });
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

VerificationReport verify_coplanarity(Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "coplanar";
    report.c_max = c_max;
    report.tally_for("interior_count_is_c_minus_1");
    report.tally_for("plane_x_eq_1");
    report.tally_for("plane_y_eq_1");
    report.tally_for("plane_x_plus_y_minus_z_eq_1");

    for (Int c = 2; c <= c_max; ++c) {
        for (Int a = 0; a < c; ++a) {
            for (Int b = 0; b < c; ++b) {
                const CanonicalForm cf(a, b, c);
                if (!is_clean_canonical(cf)) {
                    continue;
                }
                const auto points = parallelepiped_interior_points(a, b, c);
                report.record("interior_count_is_c_minus_1",
                              static_cast<Int>(points.size()) == c - 1, [&] {
                                  return describe(cf) + " has " + std::to_string(points.size()) +
                                         " interior points";
                              });
                if (!white_empty(cf)) {
                    continue;
                }
                for (const IntVec3 &p : points) {
                    if (cf.a() == 1) {
                        report.record("plane_x_eq_1", p.x() == 1, [&] {
                            return describe(cf) + " point " + describe_point(p) + " off x=1";
                        });
                    }
                    if (cf.b() == 1) {
                        report.record("plane_y_eq_1", p.y() == 1, [&] {
                            return describe(cf) + " point " + describe_point(p) + " off y=1";
                        });
                    }
                    if (cf.d() == 1) {
                        report.record("plane_x_plus_y_minus_z_eq_1",
                                      p.x() + p.y() - p.z() == 1, [&] {
                                          return describe(cf) + " point " + describe_point(p) +
                                                 " off x+y-z=1";
                                      });
                    }
                }
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

VerificationReport verify_fn_properties(Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "fn";
    report.c_max = c_max;
    report.tally_for("f1_vanishes");
    report.tally_for("support_closed_form");
    report.tally_for("support_size_n_minus_1");
    report.tally_for("reflection_c_minus_n");
    report.tally_for("frac_reflection_identity");

    for (Int c = 2; c <= c_max; ++c) {
        for (Int n = 1; n < c; ++n) {
            if (std::gcd(n, c) != 1) {
                continue;
            }
            const std::string where = "n=" + std::to_string(n) + " c=" + std::to_string(c);
            if (n == 1) {
                const auto support = f_support(1, c);
                report.record("f1_vanishes", support.empty(),
                              [&] { return where + " f_1 has nonempty support"; });
            } else {
                const auto support = f_support(n, c);
                report.record("support_closed_form", support == f_support_closed_form(n, c),
                              [&] { return where + " support differs from floor(kc/n)"; });
                report.record("support_size_n_minus_1",
                              static_cast<Int>(support.size()) == n - 1, [&] {
                                  return where + " support size " + std::to_string(support.size());
                              });
            }
            for (Int k = 1; k <= c - 2; ++k) {
                report.record("reflection_c_minus_n", f_n(c - n, c, k) == 1 - f_n(n, c, k),
                              [&] { return where + " k=" + std::to_string(k); });
            }
            for (Int k = 1; k < c; ++k) {
                if ((k * n) % c == 0) {
                    continue;
                }
                report.record("frac_reflection_identity",
                              frac_kn_c(k, n, c) + frac_kn_c(k, c - n, c) == Frac(1, 1),
                              [&] { return where + " k=" + std::to_string(k); });
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

Int draw(std::mt19937_64 &rng, Int lo, Int hi)
{
    if (hi < lo) {
        throw std::invalid_argument("draw requires lo <= hi");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the result exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return lo + static_cast<Int>(x % span);
}

AffineUnimodularMap random_unimodular_map(std::mt19937_64 &rng, int min_steps, int max_steps)
{
    IntMatrix3 m = IntMatrix3::Identity();
    const Int steps = draw(rng, min_steps, max_steps);
    for (Int s = 0; s < steps; ++s) {
        IntMatrix3 e = IntMatrix3::Identity();
        switch (draw(rng, 0, 2)) {
        case 0: { // shear: row i += k * row j
            const Int i = draw(rng, 0, 2);
            const Int j = (i + draw(rng, 1, 2)) % 3;
            e(i, j) = draw(rng, -3, 3);
            break;
        }
        case 1: { // swap two coordinates
            const Int i = draw(rng, 0, 2);
            const Int j = (i + draw(rng, 1, 2)) % 3;
            e.row(i).swap(e.row(j));
            break;
        }
        default: { // sign flip
            const Int i = draw(rng, 0, 2);
            e(i, i) = -1;
            break;
        }
        }
        m = mul(e, m);
    }
    const IntVec3 t(draw(rng, -5, 5), draw(rng, -5, 5), draw(rng, -5, 5));
    return {m, t};
}

VerificationReport verify_normalization(std::uint64_t trials, std::uint64_t seed, Int c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "normalize";
    report.c_max = c_max;
    report.trials = trials;
    report.seed = seed;
    report.tally_for("map_is_sound");
    report.tally_for("all_assignments_sound");
    report.tally_for("volume_preserved");
    report.tally_for("canonical_form_recovered");

    std::vector<CanonicalForm> pool;
    for (Int c = 1; c <= c_max; ++c) {
        const auto forms = empty_forms(c);
        pool.insert(pool.end(), forms.begin(), forms.end());
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const CanonicalForm source = pool[static_cast<std::size_t>(
            draw(rng, 0, static_cast<Int>(pool.size()) - 1))];
        const Tetrahedron original = white_tetrahedron(source.a(), source.b(), source.c());
        const AffineUnimodularMap map = random_unimodular_map(rng);

        std::array<IntVec3, 4> vertices{};
        for (std::size_t i = 0; i < 4; ++i) {
            vertices[i] = map(original.vertex(i));
        }
        for (std::size_t i = 3; i > 0; --i) {
            std::swap(vertices[i], vertices[static_cast<std::size_t>(draw(rng, 0, Int(i)))]);
        }
        const Tetrahedron image(vertices);

        const std::string where = "trial " + std::to_string(trial) + " " + describe(source) +
                                  " image " + describe_tetrahedron(image);
        try {
            const NormalizationResult result = canonical_normalization(image);
            report.record("map_is_sound", image_matches(image, result.map, result.form),
                          [&] { return where; });
            bool every = true;
            for (const RoleAssignment &roles : all_role_assignments()) {
                const NormalizationResult r = normalize(image, roles);
                every &= image_matches(image, r.map, r.form);
            }
            report.record("all_assignments_sound", every, [&] { return where; });
            report.record("volume_preserved", result.form.c() == volume6(image),
                          [&] { return where; });
            const CanonicalForm expected = canonical_form(original);
            report.record("canonical_form_recovered", result.form == expected, [&] {
                return where + " got " + describe(result.form) + " expected " + describe(expected);
            });
        } catch (const std::exception &e) {
            report.record("map_is_sound", false,
                          [&] { return where + " threw: " + std::string(e.what()); });
        }
    }
    report.seconds = clock.seconds();
    return report;
}

VerificationReport verify_witness_families(Int c_max, Int oracle_c_max)
{
    Stopwatch clock;
    VerificationReport report;
    report.suite = "witness";
    report.c_max = c_max;
    report.tally_for("one_a_c_white");
    report.tally_for("a_cminusa_c_white");
    report.tally_for("one_a_c_oracle");
    report.tally_for("a_cminusa_c_oracle");

    for (Int c = 2; c <= c_max; ++c) {
        for (Int a = 1; a < c; ++a) {
            if (std::gcd(a, c) != 1) {
                continue;
            }
            const CanonicalForm first(1, a, c);
            const CanonicalForm second(a, c - a, c);
            report.record("one_a_c_white", white_empty(first), [&] { return describe(first); });
            report.record("a_cminusa_c_white", white_empty(second),
                          [&] { return describe(second); });
            if (c <= oracle_c_max) {
                report.record("one_a_c_oracle", is_empty_bruteforce(white_tetrahedron(1, a, c)),
                              [&] { return describe(first); });
                report.record("a_cminusa_c_oracle",
                              is_empty_bruteforce(white_tetrahedron(a, c - a, c)),
                              [&] { return describe(second); });
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"white",    "system", "points",  "coplanar",
                                                "fn",       "normalize", "witness"};
    return names;
}

Int default_c_max(std::string_view suite)
{
    if (suite == "fn") return 100;
    if (suite == "normalize") return 10;
    if (suite == "witness") return 50;
    return 25;
}

Int minimum_c_max(std::string_view suite)
{
    if (suite == "coplanar") return 2;
    if (suite == "fn") return 3;
    return 1;
}

VerificationReport run_suite(std::string_view suite, const SuiteOptions &options)
{
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("unknown suite: " + std::string(suite));
    }
    const Int c_max = options.c_max.value_or(default_c_max(suite));
    if (c_max < minimum_c_max(suite)) {
        throw std::invalid_argument("suite " + std::string(suite) + " requires max-c >= " +
                                    std::to_string(minimum_c_max(suite)));
    }
    if (suite == "white") return verify_white(c_max);
    if (suite == "system") return verify_equation_systems(c_max);
    if (suite == "points") return verify_interior_points(c_max);
    if (suite == "coplanar") return verify_coplanarity(c_max);
    if (suite == "fn") return verify_fn_properties(c_max);
    if (suite == "normalize") {
        if (options.trials < 1) {
            throw std::invalid_argument("normalize suite requires trials >= 1");
        }
        return verify_normalization(options.trials, options.seed, c_max);
    }
    return verify_witness_families(c_max, std::min<Int>(c_max, 25));
}

} // namespace whitetet
