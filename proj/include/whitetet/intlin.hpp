#pragma once

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "whitetet/checked.hpp"

namespace whitetet {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

/// Entry (i, j) is row i, column j. Maps act on column vectors: M * p.
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Int = std::int64_t;
using IntVec3 = Vec3<Int>;
using IntMatrix3 = Mat3<Int>;

inline IntVec3 make_vec(Int x, Int y, Int z)
{
    return IntVec3(x, y, z);
}

/// Rows are taken in order: r0 becomes row 0.
inline IntMatrix3 matrix_from_rows(const IntVec3 &r0, const IntVec3 &r1, const IntVec3 &r2)
{
    IntMatrix3 m;
    m.row(0) = r0.transpose();
    m.row(1) = r1.transpose();
    m.row(2) = r2.transpose();
    return m;
}

inline IntMatrix3 matrix_from_columns(const IntVec3 &c0, const IntVec3 &c1, const IntVec3 &c2)
{
    IntMatrix3 m;
    m.col(0) = c0;
    m.col(1) = c1;
    m.col(2) = c2;
    return m;
}

// ---------------------------------------------------------------------------
// Checked expression helpers. Eigen's own operators wrap silently on integer
// scalars, so anything that can grow goes through these instead.

template <std::integral Scalar>
Vec3<Scalar> add(const Vec3<Scalar> &u, const Vec3<Scalar> &v)
{
    return Vec3<Scalar>(checked_add(u.x(), v.x()), checked_add(u.y(), v.y()),
                        checked_add(u.z(), v.z()));
}

template <std::integral Scalar>
Vec3<Scalar> sub(const Vec3<Scalar> &u, const Vec3<Scalar> &v)
{
    return Vec3<Scalar>(checked_sub(u.x(), v.x()), checked_sub(u.y(), v.y()),
                        checked_sub(u.z(), v.z()));
}

template <std::integral Scalar>
Vec3<Scalar> scale(Scalar k, const Vec3<Scalar> &u)
{
    return Vec3<Scalar>(checked_mul(k, u.x()), checked_mul(k, u.y()), checked_mul(k, u.z()));
}

template <std::integral Scalar>
Scalar dot(const Vec3<Scalar> &u, const Vec3<Scalar> &v)
{
    Scalar s = checked_mul(u.x(), v.x());
    s = checked_add(s, checked_mul(u.y(), v.y()));
    return checked_add(s, checked_mul(u.z(), v.z()));
}

/// Satisfies det3(rows u, v, w) == dot(cross(u, v), w).
template <std::integral Scalar>
Vec3<Scalar> cross(const Vec3<Scalar> &u, const Vec3<Scalar> &v)
{
    return Vec3<Scalar>(checked_sub(checked_mul(u.y(), v.z()), checked_mul(u.z(), v.y())),
                        checked_sub(checked_mul(u.z(), v.x()), checked_mul(u.x(), v.z())),
                        checked_sub(checked_mul(u.x(), v.y()), checked_mul(u.y(), v.x())));
}

template <std::integral Scalar>
Scalar det3(const Mat3<Scalar> &m)
{
    // Triple product of the rows.
    return dot(cross(Vec3<Scalar>(m.row(0).transpose()), Vec3<Scalar>(m.row(1).transpose())),
               Vec3<Scalar>(m.row(2).transpose()));
}

template <std::integral Scalar>
Scalar det3(const Vec3<Scalar> &r0, const Vec3<Scalar> &r1, const Vec3<Scalar> &r2)
{
    return dot(cross(r0, r1), r2);
}

template <std::integral Scalar>
Vec3<Scalar> mul(const Mat3<Scalar> &m, const Vec3<Scalar> &p)
{
    Vec3<Scalar> out;
    for (int i = 0; i < 3; ++i) {
        out(i) = dot(Vec3<Scalar>(m.row(i).transpose()), p);
    }
    return out;
}

template <std::integral Scalar>
Mat3<Scalar> mul(const Mat3<Scalar> &lhs, const Mat3<Scalar> &rhs)
{
    Mat3<Scalar> out;
    for (int j = 0; j < 3; ++j) {
        out.col(j) = mul(lhs, Vec3<Scalar>(rhs.col(j)));
    }
    return out;
}

/// Transposed cofactor matrix: m * adjugate(m) == det3(m) * I.
template <std::integral Scalar>
Mat3<Scalar> adjugate(const Mat3<Scalar> &m)
{
    const Vec3<Scalar> r0 = m.row(0).transpose();
    const Vec3<Scalar> r1 = m.row(1).transpose();
    const Vec3<Scalar> r2 = m.row(2).transpose();
    Mat3<Scalar> adj;
    adj.col(0) = cross(r1, r2);
    adj.col(1) = cross(r2, r0);
    adj.col(2) = cross(r0, r1);
    return adj;
}

// ---------------------------------------------------------------------------
// Number theory

/// gcd of the three components, always >= 0; gcd_vec(0) == 0.
Int gcd_vec(const IntVec3 &u);

struct ExtendedGcd2 {
    Int g;
    Int x;
    Int y;
};

/// a*x + b*y == g == gcd(a, b) >= 0. When a != 0 the coefficient y is the
/// least nonnegative one, i.e. 0 <= y < |a| / g.
ExtendedGcd2 extended_gcd(Int a, Int b);

struct ExtendedGcd3 {
    Int g;
    Int x;
    Int y;
    Int z;
};

/// a*x + b*y + c*z == g == gcd(a, b, c) >= 0, computed as
/// extended_gcd(extended_gcd(a, b).g, c). All-zero input yields (0, 0, 0, 0).
ExtendedGcd3 extended_gcd3(Int a, Int b, Int c);

class BasisError : public std::invalid_argument {
public:
    explicit BasisError(const std::string &what) : std::invalid_argument(what) {}
};

/// Completes a primitive pair to a lattice basis: returns w with
/// det3(u, v, w) == +1. Throws BasisError for collinear or non-primitive pairs.
IntVec3 extend_to_basis(const IntVec3 &u, const IntVec3 &v);

/// |det| of the rows, which is the index of the sublattice they generate.
Int quotient_order(const IntVec3 &v1, const IntVec3 &v2, const IntVec3 &v3);

bool is_unimodular(const IntMatrix3 &m);

// ---------------------------------------------------------------------------

class AffineUnimodularMap {
public:
    /// Throws std::invalid_argument unless det3(matrix) is +1 or -1.
    AffineUnimodularMap(const IntMatrix3 &matrix, const IntVec3 &translation);

    static AffineUnimodularMap identity();
    static AffineUnimodularMap linear(const IntMatrix3 &matrix);
    static AffineUnimodularMap translation(const IntVec3 &offset);

    const IntMatrix3 &matrix() const { return matrix_; }
    const IntVec3 &translation() const { return translation_; }
    Int determinant() const { return det3(matrix_); }

    IntVec3 operator()(const IntVec3 &p) const;

    bool operator==(const AffineUnimodularMap &other) const
    {
        return matrix_ == other.matrix_ && translation_ == other.translation_;
    }

private:
    IntMatrix3 matrix_;
    IntVec3 translation_;
};

IntVec3 apply_map(const AffineUnimodularMap &map, const IntVec3 &p);

/// compose(outer, inner)(p) == outer(inner(p)).
AffineUnimodularMap compose(const AffineUnimodularMap &outer, const AffineUnimodularMap &inner);

AffineUnimodularMap invert(const AffineUnimodularMap &map);

/// Exact inverse of a unimodular matrix (adjugate times det, since det = +-1).
IntMatrix3 inverse_unimodular(const IntMatrix3 &m);

} // namespace whitetet
