#include "whitetet/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace whitetet {
namespace {

struct Box {
    IntVec3 lo;
    IntVec3 hi;
};

template <typename Range>
Box bounding_box(const Range &points)
{
    Box box{*points.begin(), *points.begin()};
    for (const IntVec3 &p : points) {
        box.lo = box.lo.cwiseMin(p);
        box.hi = box.hi.cwiseMax(p);
    }
    return box;
}

// Visits the box in lexicographic (x, y, z) order.
template <typename Visit>
void scan_box(const Box &box, Visit &&visit)
{
    for (Int x = box.lo.x(); x <= box.hi.x(); ++x) {
        for (Int y = box.lo.y(); y <= box.hi.y(); ++y) {
            for (Int z = box.lo.z(); z <= box.hi.z(); ++z) {
                visit(IntVec3(x, y, z));
            }
        }
    }
}

int sign(Int v)
{
    return (v > 0) - (v < 0);
}

void require_independent(const IntVec3 &u, const IntVec3 &v)
{
    if (cross(u, v).isZero()) {
        throw std::invalid_argument("vectors are linearly dependent");
    }
}

// Coordinates (s, t) of p in the basis u, v of their plane, scaled by
// n.n where n = u x v. Returns false when p is off the plane.
bool plane_coordinates(const IntVec3 &u, const IntVec3 &v, const IntVec3 &p, Int &s_scaled,
                       Int &t_scaled, Int &norm2)
{
    const IntVec3 n = cross(u, v);
    if (dot(n, p) != 0) {
        return false;
    }
    norm2 = dot(n, n);
    s_scaled = dot(cross(p, v), n);
    t_scaled = dot(cross(u, p), n);
    return true;
}

} // namespace

Tetrahedron::Tetrahedron(const LatticePoint &v0, const LatticePoint &v1, const LatticePoint &v2,
                         const LatticePoint &v3)
    : vertices_{v0, v1, v2, v3}
{
    if (signed_volume6() == 0) {
        throw std::invalid_argument("degenerate tetrahedron: vertices are coplanar");
    }
}

Tetrahedron::Tetrahedron(const std::array<LatticePoint, 4> &vertices)
    : Tetrahedron(vertices[0], vertices[1], vertices[2], vertices[3])
{
}

Int Tetrahedron::signed_volume6() const
{
    return orientation(vertices_[0], vertices_[1], vertices_[2], vertices_[3]);
}

Tetrahedron white_tetrahedron(Int a, Int b, Int c)
{
    return {IntVec3::Zero(), IntVec3::UnitX(), IntVec3::UnitY(), IntVec3(a, b, c)};
}

Tetrahedron map_tetrahedron(const AffineUnimodularMap &map, const Tetrahedron &t)
{
    return {map(t.vertex(0)), map(t.vertex(1)), map(t.vertex(2)), map(t.vertex(3))};
}

std::string_view to_string(PointLocation where)
{
    switch (where) {
    case PointLocation::Outside: return "outside";
    case PointLocation::Vertex: return "vertex";
    case PointLocation::BoundaryNonVertex: return "boundary";
    case PointLocation::Interior: return "interior";
    }
    return "unknown";
}

Int orientation(const LatticePoint &a, const LatticePoint &b, const LatticePoint &c,
                const LatticePoint &d)
{
    return det3(sub(b, a), sub(c, a), sub(d, a));
}

Int volume6(const Tetrahedron &t)
{
    return checked_abs(t.signed_volume6());
}

PointLocation locate(const Tetrahedron &t, const LatticePoint &p)
{
    const auto &v = t.vertices();
    const int total = sign(t.signed_volume6());

    // Replacing vertex i by p gives the (scaled) i-th barycentric weight.
    const std::array<Int, 4> weights{orientation(p, v[1], v[2], v[3]),
                                     orientation(v[0], p, v[2], v[3]),
                                     orientation(v[0], v[1], p, v[3]),
                                     orientation(v[0], v[1], v[2], p)};
    int zeros = 0;
    for (Int w : weights) {
        const int s = sign(w) * total;
        if (s < 0) {
            return PointLocation::Outside;
        }
        zeros += (s == 0);
    }
    if (zeros == 3) {
        return PointLocation::Vertex;
    }
    return zeros > 0 ? PointLocation::BoundaryNonVertex : PointLocation::Interior;
}

std::vector<LocatedPoint> lattice_points_in(const Tetrahedron &t)
{
    std::vector<LocatedPoint> found;
    scan_box(bounding_box(t.vertices()), [&](const IntVec3 &p) {
        const PointLocation where = locate(t, p);
        if (where != PointLocation::Outside) {
            found.push_back({p, where});
        }
    });
    return found;
}

bool is_empty_bruteforce(const Tetrahedron &t)
{
    const auto points = lattice_points_in(t);
    return std::all_of(points.begin(), points.end(),
                       [](const LocatedPoint &lp) { return lp.where == PointLocation::Vertex; });
}

bool is_clean_bruteforce(const Tetrahedron &t)
{
    const auto points = lattice_points_in(t);
    return std::none_of(points.begin(), points.end(), [](const LocatedPoint &lp) {
        return lp.where == PointLocation::BoundaryNonVertex;
    });
}

bool triangle_is_empty_bruteforce(const IntVec3 &u, const IntVec3 &v)
{
    require_independent(u, v);
    const std::array<IntVec3, 3> corners{IntVec3::Zero(), u, v};
    bool empty = true;
    scan_box(bounding_box(corners), [&](const IntVec3 &p) {
        Int s = 0, t = 0, n2 = 0;
        if (!empty || !plane_coordinates(u, v, p, s, t, n2)) {
            return;
        }
        const bool inside = s >= 0 && t >= 0 && checked_add(s, t) <= n2;
        const bool corner = p.isZero() || p == u || p == v;
        if (inside && !corner) {
            empty = false;
        }
    });
    return empty;
}

bool parallelogram_is_empty_bruteforce(const IntVec3 &u, const IntVec3 &v)
{
    require_independent(u, v);
    const IntVec3 far = add(u, v);
    const std::array<IntVec3, 4> corners{IntVec3::Zero(), u, v, far};
    bool empty = true;
    scan_box(bounding_box(corners), [&](const IntVec3 &p) {
        Int s = 0, t = 0, n2 = 0;
        if (!empty || !plane_coordinates(u, v, p, s, t, n2)) {
            return;
        }
        const bool inside = s >= 0 && t >= 0 && s <= n2 && t <= n2;
        const bool corner = p.isZero() || p == u || p == v || p == far;
        if (inside && !corner) {
            empty = false;
        }
    });
    return empty;
}

bool is_primitive_pair(const IntVec3 &u, const IntVec3 &v)
{
    return gcd_vec(cross(u, v)) == 1;
}

bool faces_are_primitive(const Tetrahedron &t)
{
    const auto &v = t.vertices();
    // Each face is identified by the vertex it omits.
    for (std::size_t omit = 0; omit < 4; ++omit) {
        std::array<std::size_t, 3> idx{};
        std::size_t n = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i != omit) {
                idx[n++] = i;
            }
        }
        if (!is_primitive_pair(sub(v[idx[1]], v[idx[0]]), sub(v[idx[2]], v[idx[0]]))) {
            return false;
        }
    }
    return true;
}

std::vector<LatticePoint> parallelepiped_interior_bruteforce(const IntVec3 &u, const IntVec3 &v,
                                                             const IntVec3 &w)
{
    const Int det = det3(u, v, w);
    if (det == 0) {
        throw std::invalid_argument("parallelepiped is degenerate");
    }
    const std::array<IntVec3, 8> corners{IntVec3::Zero(), u,          v,          w,
                                         add(u, v),       add(u, w),  add(v, w),
                                         add(add(u, v), w)};
    const int s = sign(det);
    const Int vol = checked_abs(det);

    std::vector<LatticePoint> found;
    scan_box(bounding_box(corners), [&](const IntVec3 &p) {
        // Cramer's rule: p = (alpha u + beta v + gamma w), each scaled by det.
        const std::array<Int, 3> coords{det3(p, v, w), det3(u, p, w), det3(u, v, p)};
        const bool interior = std::all_of(coords.begin(), coords.end(), [&](Int q) {
            const Int scaled = s > 0 ? q : checked_neg(q);
            return scaled > 0 && scaled < vol;
        });
        if (interior) {
            found.push_back(p);
        }
    });
    return found;
}

std::vector<LatticePoint> parallelepiped_interior_points(Int a, Int b, Int c)
{
    if (c < 1 || a < 0 || b < 0 || a >= c || b >= c) {
        throw std::invalid_argument("parallelepiped_interior_points requires 0 <= a, b < c");
    }
    if (std::gcd(a, c) != 1 || std::gcd(b, c) != 1) {
        throw std::invalid_argument(
            "parallelepiped_interior_points requires gcd(a, c) = gcd(b, c) = 1");
    }

    // Everything over the common denominator c; the numerators must divide.
    auto coordinate = [c](Int k, Int n) {
        const Int frac_num = floor_mod(checked_mul(k, checked_sub(c, n)), c);
        const Int total = checked_add(frac_num, checked_mul(k, n));
        if (total % c != 0) {
            throw std::logic_error("interior point coordinate is not integral");
        }
        return total / c;
    };

    std::vector<LatticePoint> points;
    points.reserve(static_cast<std::size_t>(c - 1));
    for (Int k = 1; k < c; ++k) {
        points.emplace_back(coordinate(k, a), coordinate(k, b), k);
    }
    return points;
}

} // namespace whitetet
