#include "whitetet/normalize.hpp"

#include <algorithm>
#include <optional>

namespace whitetet {
namespace {

bool is_permutation_of_four(const RoleAssignment &r)
{
    std::array<std::size_t, 4> idx{r.origin, r.first, r.second, r.apex};
    std::sort(idx.begin(), idx.end());
    return idx == std::array<std::size_t, 4>{0, 1, 2, 3};
}

} // namespace

std::vector<RoleAssignment> all_role_assignments()
{
    std::vector<RoleAssignment> out;
    out.reserve(24);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        out.push_back({perm[0], perm[1], perm[2], perm[3]});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NormalizationResult normalize(const Tetrahedron &t, const RoleAssignment &roles)
{
    if (!is_permutation_of_four(roles)) {
        throw std::invalid_argument("role assignment must be a permutation of the four vertices");
    }
    const IntVec3 &origin = t.vertex(roles.origin);
    const IntVec3 u = sub(t.vertex(roles.first), origin);
    const IntVec3 v = sub(t.vertex(roles.second), origin);
    if (!is_primitive_pair(u, v)) {
        throw NormalizationError("face pair not primitive");
    }

    // Columns (u, v, w) form a basis; its inverse sends u, v, w to e1, e2, e3.
    const IntVec3 w = extend_to_basis(u, v);
    const IntMatrix3 to_standard = inverse_unimodular(matrix_from_columns(u, v, w));
    AffineUnimodularMap map =
        compose(AffineUnimodularMap::linear(to_standard),
                AffineUnimodularMap::translation(scale(Int{-1}, origin)));

    IntVec3 apex = map(t.vertex(roles.apex));
    if (apex.z() < 0) {
        IntMatrix3 flip = IntMatrix3::Identity();
        flip(2, 2) = -1;
        map = compose(AffineUnimodularMap::linear(flip), map);
        apex = map(t.vertex(roles.apex));
    }

    const Int c = apex.z();
    const Int q1 = floor_div(apex.x(), c);
    const Int q2 = floor_div(apex.y(), c);
    IntMatrix3 shear = IntMatrix3::Identity();
    shear(0, 2) = checked_neg(q1);
    shear(1, 2) = checked_neg(q2);
    map = compose(AffineUnimodularMap::linear(shear), map);
    apex = map(t.vertex(roles.apex));

    return {map, CanonicalForm(apex.x(), apex.y(), c), roles};
}

bool image_matches(const Tetrahedron &t, const AffineUnimodularMap &map, const CanonicalForm &form)
{
    std::array<IntVec3, 4> expected{IntVec3::Zero(), IntVec3::UnitX(), IntVec3::UnitY(),
                                    IntVec3(form.a(), form.b(), form.c())};
    std::array<IntVec3, 4> image{};
    for (std::size_t i = 0; i < 4; ++i) {
        image[i] = map(t.vertex(i));
    }
    auto lex = [](const IntVec3 &p, const IntVec3 &q) {
        return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
    };
    std::sort(expected.begin(), expected.end(), lex);
    std::sort(image.begin(), image.end(), lex);
    return expected == image;
}

NormalizationResult canonical_normalization(const Tetrahedron &t)
{
    if (!faces_are_primitive(t)) {
        throw NormalizationError("not normalizable (non-clean)");
    }
    std::optional<NormalizationResult> best;
    for (const RoleAssignment &roles : all_role_assignments()) {
        NormalizationResult candidate = normalize(t, roles);
        if (!best || candidate.form < best->form) {
            best = std::move(candidate);
        }
    }
    return *best;
}

CanonicalForm canonical_form(const Tetrahedron &t)
{
    return canonical_normalization(t).form;
}

bool equivalent(const Tetrahedron &lhs, const Tetrahedron &rhs)
{
    return canonical_form(lhs) == canonical_form(rhs);
}

} // namespace whitetet
