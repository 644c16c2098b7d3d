#pragma once

#include <vector>

#include "fanocascade/errors.hpp"
#include "fanocascade/vec.hpp"

namespace fano {

/// A convex lattice polygon. The vertex list is always counterclockwise,
/// contains no collinear triples, and starts at the lexicographically
/// smallest vertex, so equal polygons have equal vertex lists.
struct LatticePolygon {
    std::vector<Vec> vertices;

    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
        return a.vertices == b.vertices;
    }
    friend bool operator!=(const LatticePolygon& a, const LatticePolygon& b) {
        return !(a == b);
    }
    friend bool operator<(const LatticePolygon& a, const LatticePolygon& b) {
        return a.vertices < b.vertices;
    }
};

/// A convex polygon with rational vertices, in the same canonical order as
/// LatticePolygon. Degenerate cases (a point or a segment) keep the one or
/// two extreme points; they arise as section polyhedra of small divisors.
struct RationalPolygon {
    std::vector<QVec> vertices;

    friend bool operator==(const RationalPolygon& a, const RationalPolygon& b) {
        return a.vertices == b.vertices;
    }
    friend bool operator!=(const RationalPolygon& a, const RationalPolygon& b) {
        return !(a == b);
    }
};

/// Convex hull in canonical order. Throws DegenerateInput when the points
/// span less than the whole plane.
LatticePolygon convex_hull(const std::vector<Vec>& points);

/// Convex hull of rational points. Degenerate inputs yield a point or a
/// segment instead of throwing, since dimension drops are meaningful for
/// section polyhedra.
RationalPolygon convex_hull_rational(const std::vector<QVec>& points);

/// One edge of a polygon walked counterclockwise: endpoints a -> b, the
/// primitive direction f with b - a = length * f, the primitive inner normal
/// with <normal, a> = -height, and the lattice length.
struct EdgeData {
    Vec a;
    Vec b;
    Vec direction;
    Vec normal;
    Int length;
    Int height;
};

/// Edge walk of a polygon with the origin strictly inside (all heights
/// positive). Throws OriginNotInterior otherwise.
std::vector<EdgeData> edge_data(const LatticePolygon& p);

bool origin_strictly_interior(const LatticePolygon& p);

/// Fano polygon: every vertex primitive and the origin strictly interior.
bool is_fano(const LatticePolygon& p);

/// Twice the euclidean area, always positive for a genuine polygon.
Rat normalized_area(const LatticePolygon& p);
Rat normalized_area(const RationalPolygon& p);

/// Number of lattice points on the boundary.
Int boundary_lattice_points(const LatticePolygon& p);

/// The dual polygon {u : <u, v> >= -1 for all v in p}. Its vertices are the
/// solutions along consecutive edges of p and are rational in general.
/// Throws OriginNotInterior when the dual would be unbounded.
RationalPolygon dual_polygon(const LatticePolygon& p);

/// Dual of a rational polygon with the origin strictly inside; applying it
/// twice returns the original polygon.
RationalPolygon dual_polygon(const RationalPolygon& p);

/// Degree of the toric surface of the spanning fan: twice the area of the
/// dual polygon.
Rat degree(const LatticePolygon& p);

/// Image of a polygon under the linear map with matrix rows (a b; c d).
LatticePolygon apply_linear(const LatticePolygon& p, const Int& a, const Int& b, const Int& c,
                            const Int& d);

/// Canonical representative of the orbit of a Fano polygon under lattice
/// automorphisms (determinant +1 or -1). Two Fano polygons are equivalent
/// exactly when their normal forms are equal. Throws NotFano.
LatticePolygon normal_form(const LatticePolygon& p);

}  // namespace fano
