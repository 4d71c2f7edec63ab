#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "whitetet/intlin.hpp"

namespace whitetet {

using LatticePoint = IntVec3;

/// A nondegenerate lattice tetrahedron. Vertex order is significant only for
/// callers that assign roles (see normalize.hpp); all predicates here are
/// order-independent.
class Tetrahedron {
public:
    /// Throws std::invalid_argument when the four points are coplanar.
    Tetrahedron(const LatticePoint &v0, const LatticePoint &v1, const LatticePoint &v2,
                const LatticePoint &v3);
    explicit Tetrahedron(const std::array<LatticePoint, 4> &vertices);

    const std::array<LatticePoint, 4> &vertices() const { return vertices_; }
    const LatticePoint &vertex(std::size_t i) const { return vertices_.at(i); }

    /// Signed det3(v1 - v0, v2 - v0, v3 - v0); never zero.
    Int signed_volume6() const;

private:
    std::array<LatticePoint, 4> vertices_;
};

/// T_{a,b,c}: vertices 0, e1, e2, (a, b, c).
Tetrahedron white_tetrahedron(Int a, Int b, Int c);

Tetrahedron map_tetrahedron(const AffineUnimodularMap &map, const Tetrahedron &t);

enum class PointLocation { Outside, Vertex, BoundaryNonVertex, Interior };

std::string_view to_string(PointLocation where);

struct LocatedPoint {
    LatticePoint point;
    PointLocation where;
};

/// det3(b - a, c - a, d - a).
Int orientation(const LatticePoint &a, const LatticePoint &b, const LatticePoint &c,
                const LatticePoint &d);

/// Six times the Euclidean volume, i.e. |det| of the edge vectors.
Int volume6(const Tetrahedron &t);

/// Exact location from the signs of the four barycentric determinants.
PointLocation locate(const Tetrahedron &t, const LatticePoint &p);

/// Every lattice point of the closed tetrahedron, in lexicographic (x, y, z)
/// order, found by scanning the bounding box of the vertices.
std::vector<LocatedPoint> lattice_points_in(const Tetrahedron &t);

bool is_empty_bruteforce(const Tetrahedron &t);
bool is_clean_bruteforce(const Tetrahedron &t);

// Triangles and parallelograms spanned by u, v at the origin. Each scan
// excludes the figure's own vertices; throws std::invalid_argument if u and v
// are linearly dependent.
bool triangle_is_empty_bruteforce(const IntVec3 &u, const IntVec3 &v);
bool parallelogram_is_empty_bruteforce(const IntVec3 &u, const IntVec3 &v);

/// gcd_vec(cross(u, v)) == 1.
bool is_primitive_pair(const IntVec3 &u, const IntVec3 &v);

/// True when all four faces are primitive pairs, i.e. empty triangles.
bool faces_are_primitive(const Tetrahedron &t);

/// Strict interior lattice points of the parallelepiped spanned by u, v, w at
/// the origin, by bounding-box scan and Cramer's rule; lexicographic order.
std::vector<LatticePoint> parallelepiped_interior_bruteforce(const IntVec3 &u, const IntVec3 &v,
                                                             const IntVec3 &w);

/// The c - 1 interior points of P_{a,b,c} (spanned by e1, e2, (a, b, c)) from
/// the closed form
///   <k(c-a)/c> e1 + <k(c-b)/c> e2 + (k/c)(a, b, c),   k = 1 .. c-1,
/// ordered by k. Requires 0 <= a, b < c and gcd(a, c) = gcd(b, c) = 1.
std::vector<LatticePoint> parallelepiped_interior_points(Int a, Int b, Int c);

} // namespace whitetet
