#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "whitetet/normalize.hpp"

namespace whitetet {

struct CheckTally {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

struct VerificationReport {
    std::string suite;
    Int c_max = 0;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::vector<CheckTally> checks;
    /// Capped at max_counterexamples; nonempty exactly when some check failed.
    std::vector<std::string> counterexamples;
    double seconds = 0.0;

    static constexpr std::size_t max_counterexamples = 64;

    bool ok() const { return counterexamples.empty(); }
    std::uint64_t total_cases() const;
    std::uint64_t total_failures() const;

    /// Counts one outcome of `check`; `describe` is only invoked on failure.
    template <typename Describe>
    void record(std::string_view check, bool pass, Describe &&describe)
    {
        CheckTally &tally = tally_for(check);
        if (pass) {
            ++tally.passed;
            return;
        }
        ++tally.failed;
        if (counterexamples.size() < max_counterexamples) {
            counterexamples.push_back(std::string(check) + ": " + describe());
        }
    }

    /// Registers a check with zero cases so it shows up in the report.
    CheckTally &tally_for(std::string_view check);
};

std::string describe_form(Int a, Int b, Int c);

/// Every (a, b) with T_{a,b,c} empty by White's criterion, lexicographic.
std::vector<CanonicalForm> empty_forms(Int c);

/// Which of the coplanarity clauses hold for a form: "c=1", "a=1", "b=1",
/// "d=1" in that order.
std::vector<std::string> satisfied_clauses(const CanonicalForm &cf);

// --- Suites ----------------------------------------------------------------

/// white_empty and is_clean_canonical against the lattice-point oracle for
/// every c <= c_max and 0 <= a, b < c.
VerificationReport verify_white(Int c_max);

/// satisfies_system, check_sum_system and oracle emptiness agree on every
/// clean form with 2 <= c <= c_max.
VerificationReport verify_equation_systems(Int c_max);

/// The closed-form interior points of P_{a,b,c} equal the oracle scan, and
/// number c - 1, for every clean form with c <= c_max.
VerificationReport verify_interior_points(Int c_max);

/// For every empty form: x = 1 when a = 1, y = 1 when b = 1,
/// x + y - z = 1 when d = 1, over all c - 1 interior points.
VerificationReport verify_coplanarity(Int c_max);

/// Properties (i)-(iii) of f_n and the fractional-part reflection identity,
/// for all coprime 0 < n < c <= c_max.
VerificationReport verify_fn_properties(Int c_max);

/// Seeded random unimodular images of empty forms with c <= c_max must
/// normalize soundly back to the original canonical form.
VerificationReport verify_normalization(std::uint64_t trials, std::uint64_t seed, Int c_max);

/// T_{1,a,c} and T_{a,c-a,c} with gcd(a, c) = 1 are empty: by White's
/// criterion up to c_max, and by the oracle up to oracle_c_max.
VerificationReport verify_witness_families(Int c_max, Int oracle_c_max);

struct SuiteOptions {
    std::optional<Int> c_max;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

/// "white", "system", "points", "coplanar", "fn", "normalize", "witness".
const std::vector<std::string> &suite_names();

/// Default c_max for a suite when none is given.
Int default_c_max(std::string_view suite);

/// Smallest c_max the suite accepts.
Int minimum_c_max(std::string_view suite);

/// Throws std::invalid_argument for unknown suites or c_max below the minimum.
VerificationReport run_suite(std::string_view suite, const SuiteOptions &options);

// --- Random unimodular maps --------------------------------------------------

/// Uniform integer in [lo, hi] from the raw engine output; portable across
/// standard libraries, unlike std::uniform_int_distribution.
Int draw(std::mt19937_64 &rng, Int lo, Int hi);

/// Product of 6-12 elementary shears (coefficient in [-3, 3]), coordinate
/// swaps and sign flips, plus a translation in [-5, 5]^3.
AffineUnimodularMap random_unimodular_map(std::mt19937_64 &rng, int min_steps = 6,
                                          int max_steps = 12);

} // namespace whitetet
