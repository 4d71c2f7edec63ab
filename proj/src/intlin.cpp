#include "whitetet/intlin.hpp"

#include <numeric>

namespace whitetet {

Int gcd_vec(const IntVec3 &u)
{
    Int g = std::gcd(checked_abs(u.x()), checked_abs(u.y()));
    return std::gcd(g, checked_abs(u.z()));
}

ExtendedGcd2 extended_gcd(Int a, Int b)
{
    if (a == 0 && b == 0) {
        return {0, 0, 0};
    }
    if (a == 0) {
        return {checked_abs(b), 0, b > 0 ? 1 : -1};
    }

    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = checked_sub(old_r, checked_mul(q, r));
        std::swap(old_r, r);
        old_s = checked_sub(old_s, checked_mul(q, s));
        std::swap(old_s, s);
        old_t = checked_sub(old_t, checked_mul(q, t));
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }

    // Shift along the solution line so that 0 <= y < |a| / g.
    const Int g = old_r;
    const Int a_red = a / g;
    const Int b_red = b / g;
    const Int y = floor_mod(old_t, checked_abs(a_red));
    const Int k = checked_sub(old_t, y) / a_red;
    const Int x = checked_add(old_s, checked_mul(k, b_red));
    return {g, x, y};
}

ExtendedGcd3 extended_gcd3(Int a, Int b, Int c)
{
    const ExtendedGcd2 inner = extended_gcd(a, b);
    const ExtendedGcd2 outer = extended_gcd(inner.g, c);
    return {outer.g, checked_mul(inner.x, outer.x), checked_mul(inner.y, outer.x), outer.y};
}

IntVec3 extend_to_basis(const IntVec3 &u, const IntVec3 &v)
{
    const IntVec3 normal = cross(u, v);
    const Int g = gcd_vec(normal);
    if (g == 0) {
        throw BasisError("cannot extend to basis: vectors are collinear");
    }
    if (g != 1) {
        throw BasisError("cannot extend to basis: pair is not primitive (gcd of cross product is " +
                         std::to_string(g) + ")");
    }
    const ExtendedGcd3 e = extended_gcd3(normal.x(), normal.y(), normal.z());
    IntVec3 w(e.x, e.y, e.z);
    if (det3(u, v, w) == -1) {
        w = scale(Int{-1}, w);
    }
    return w;
}

Int quotient_order(const IntVec3 &v1, const IntVec3 &v2, const IntVec3 &v3)
{
    return checked_abs(det3(v1, v2, v3));
}

bool is_unimodular(const IntMatrix3 &m)
{
    const Int d = det3(m);
    return d == 1 || d == -1;
}

IntMatrix3 inverse_unimodular(const IntMatrix3 &m)
{
    const Int d = det3(m);
    if (d != 1 && d != -1) {
        throw std::invalid_argument("matrix is not unimodular (det = " + std::to_string(d) + ")");
    }
    IntMatrix3 adj = adjugate(m);
    if (d == -1) {
        adj = adj.unaryExpr([](Int e) { return checked_neg(e); });
    }
    return adj;
}

AffineUnimodularMap::AffineUnimodularMap(const IntMatrix3 &matrix, const IntVec3 &translation)
    : matrix_(matrix), translation_(translation)
{
    if (!is_unimodular(matrix_)) {
        throw std::invalid_argument("affine map matrix must have determinant +1 or -1");
    }
}

AffineUnimodularMap AffineUnimodularMap::identity()
{
    return {IntMatrix3::Identity(), IntVec3::Zero()};
}

AffineUnimodularMap AffineUnimodularMap::linear(const IntMatrix3 &matrix)
{
    return {matrix, IntVec3::Zero()};
}

AffineUnimodularMap AffineUnimodularMap::translation(const IntVec3 &offset)
{
    return {IntMatrix3::Identity(), offset};
}

IntVec3 AffineUnimodularMap::operator()(const IntVec3 &p) const
{
    return add(mul(matrix_, p), translation_);
}

IntVec3 apply_map(const AffineUnimodularMap &map, const IntVec3 &p)
{
    return map(p);
}

AffineUnimodularMap compose(const AffineUnimodularMap &outer, const AffineUnimodularMap &inner)
{
    // outer(inner(p)) = Mo (Mi p + ti) + to
    return {mul(outer.matrix(), inner.matrix()),
            add(mul(outer.matrix(), inner.translation()), outer.translation())};
}

AffineUnimodularMap invert(const AffineUnimodularMap &map)
{
    const IntMatrix3 inv = inverse_unimodular(map.matrix());
    return {inv, scale(Int{-1}, mul(inv, map.translation()))};
}

} // namespace whitetet
