#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "whitetet/harness.hpp"

namespace whitetet {

using Json = nlohmann::ordered_json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int counterexample = 1;
inline constexpr int usage = 2;
} // namespace exit_code

struct ClassificationReport {
    std::array<IntVec3, 4> vertices{};
    Int volume6 = 0;
    bool clean = false;
    bool empty = false;
    /// Present exactly when the tetrahedron is clean.
    std::optional<NormalizationResult> normalization;
    /// Interior points of P_{a,b,c}; filled only for empty tetrahedra.
    std::vector<IntVec3> interior_points;
    /// "c=1", "x=1", "y=1" or "x+y-z=1"; only for empty tetrahedra.
    std::optional<std::string> plane;
};

ClassificationReport classify(const Tetrahedron &t);

/// The first plane containing every interior point of P_{a,b,c} for an empty
/// form, checked in the order c=1, x=1, y=1, x+y-z=1.
std::string plane_tag(const CanonicalForm &cf);

// JSON encoders. All integers are range-checked against 2^53; a value
// outside that range throws std::out_of_range.
Json to_json(const ClassificationReport &report);
Json to_json(const NormalizationResult &result);
Json to_json(const VerificationReport &report);
Json to_json(const AffineUnimodularMap &map);

/// Parses vertices from 12 integers or from a file with one "x y z" per line
/// (blank lines and '#' comments ignored). Throws std::invalid_argument.
std::array<IntVec3, 4> parse_vertices(const std::vector<Int> &coordinates);
std::array<IntVec3, 4> read_vertex_file(const std::string &path);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace whitetet
