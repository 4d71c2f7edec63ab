#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "whitetet/geometry.hpp"
#include "whitetet/whitefn.hpp"

namespace whitetet {

class NormalizationError : public std::invalid_argument {
public:
    explicit NormalizationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Which input vertex goes to 0, e1, e2 and the apex. Must be a permutation
/// of {0, 1, 2, 3}.
struct RoleAssignment {
    std::size_t origin = 0;
    std::size_t first = 1;
    std::size_t second = 2;
    std::size_t apex = 3;

    bool operator==(const RoleAssignment &) const = default;
};

/// All 24 role assignments, in a fixed order.
std::vector<RoleAssignment> all_role_assignments();

struct NormalizationResult {
    AffineUnimodularMap map;
    CanonicalForm form;
    RoleAssignment roles;
};

/// Maps t onto T_{a,b,c}: translate the origin vertex to 0, send the face pair
/// to e1, e2 through a completed basis, flip z if the apex lies below, then
/// shear the apex into 0 <= a, b < c.
///
/// Throws NormalizationError("face pair not primitive") when the assigned
/// pair does not span an empty triangle.
NormalizationResult normalize(const Tetrahedron &t, const RoleAssignment &roles = {});

/// True when map sends the vertices of t onto {0, e1, e2, (a, b, c)}.
bool image_matches(const Tetrahedron &t, const AffineUnimodularMap &map, const CanonicalForm &form);

/// Normalization whose form is least in (c, a, b) order across all 24 role
/// assignments. Throws NormalizationError("not normalizable (non-clean)")
/// unless every face of t is an empty triangle.
NormalizationResult canonical_normalization(const Tetrahedron &t);

CanonicalForm canonical_form(const Tetrahedron &t);

bool equivalent(const Tetrahedron &lhs, const Tetrahedron &rhs);

} // namespace whitetet
