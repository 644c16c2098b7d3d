#include "fanocascade/polygon.hpp"

#include <algorithm>
#include <set>

namespace fano {

namespace {

/// Rotate a counterclockwise vertex list so it starts at the smallest vertex.
template <typename V>
std::vector<V> canonical_rotation(std::vector<V> verts) {
    auto smallest = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), smallest, verts.end());
    return verts;
}

template <typename V, typename CrossFn>
std::vector<V> hull_chain(std::vector<V> pts, CrossFn cross_fn) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) return pts;
    std::vector<V> lower;
    for (const V& p : pts) {
        while (lower.size() >= 2 &&
               cross_fn(lower[lower.size() - 1] - lower[lower.size() - 2],
                        p - lower[lower.size() - 2]) <= 0) {
            lower.pop_back();
        }
        lower.push_back(p);
    }
    std::vector<V> upper;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        const V& p = *it;
        while (upper.size() >= 2 &&
               cross_fn(upper[upper.size() - 1] - upper[upper.size() - 2],
                        p - upper[upper.size() - 2]) <= 0) {
            upper.pop_back();
        }
        upper.push_back(p);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace

LatticePolygon convex_hull(const std::vector<Vec>& points) {
    auto hull = hull_chain(points, [](const Vec& a, const Vec& b) { return cross(a, b); });
    if (hull.size() < 3) {
        throw DegenerateInput("convex_hull: points span less than the whole plane");
    }
    return LatticePolygon{canonical_rotation(std::move(hull))};
}

RationalPolygon convex_hull_rational(const std::vector<QVec>& points) {
    auto hull = hull_chain(points, [](const QVec& a, const QVec& b) { return qcross(a, b); });
    if (hull.empty()) {
        throw DegenerateInput("convex_hull_rational: no points given");
    }
    return RationalPolygon{canonical_rotation(std::move(hull))};
}

std::vector<EdgeData> edge_data(const LatticePolygon& p) {
    std::vector<EdgeData> edges;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& a = p.vertices[i];
        const Vec& b = p.vertices[(i + 1) % n];
        Vec d = b - a;
        Int len = content(d);
        Vec f{d.x / len, d.y / len};
        Vec normal = rot90(f);
        Int height = -dot(normal, a);
        if (height <= 0) {
            throw OriginNotInterior("edge_data: origin is not strictly inside the polygon");
        }
        edges.push_back(EdgeData{a, b, f, normal, len, height});
    }
    return edges;
}

bool origin_strictly_interior(const LatticePolygon& p) {
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(p.vertices[i], p.vertices[(i + 1) % n]) <= 0) return false;
    }
    return true;
}

bool is_fano(const LatticePolygon& p) {
    if (!origin_strictly_interior(p)) return false;
    for (const Vec& v : p.vertices) {
        if (!is_primitive(v)) return false;
    }
    return true;
}

Rat normalized_area(const LatticePolygon& p) {
    Int total = 0;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += cross(p.vertices[i], p.vertices[(i + 1) % n]);
    }
    return Rat(total);
}

Rat normalized_area(const RationalPolygon& p) {
    Rat total = 0;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += qcross(p.vertices[i], p.vertices[(i + 1) % n]);
    }
    return total;
}

Int boundary_lattice_points(const LatticePolygon& p) {
    Int total = 0;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += content(p.vertices[(i + 1) % n] - p.vertices[i]);
    }
    return total;
}

RationalPolygon dual_polygon(const LatticePolygon& p) {
    std::vector<QVec> duals;
    std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& a = p.vertices[i];
        const Vec& b = p.vertices[(i + 1) % n];
        Int det = cross(a, b);
        if (det <= 0) {
            throw OriginNotInterior("dual_polygon: origin is not strictly inside the polygon");
        }
        // The unique u with <u, a> = <u, b> = -1.
        duals.emplace_back(Rat(a.y - b.y) / det, Rat(b.x - a.x) / det);
    }
    return RationalPolygon{canonical_rotation(std::move(duals))};
}

RationalPolygon dual_polygon(const RationalPolygon& p) {
    std::vector<QVec> duals;
    std::size_t n = p.vertices.size();
    if (n < 3) {
        throw OriginNotInterior("dual_polygon: a degenerate polygon has an unbounded dual");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const QVec& a = p.vertices[i];
        const QVec& b = p.vertices[(i + 1) % n];
        Rat det = qcross(a, b);
        if (det <= 0) {
            throw OriginNotInterior("dual_polygon: origin is not strictly inside the polygon");
        }
        duals.emplace_back((a.y - b.y) / det, (b.x - a.x) / det);
    }
    return RationalPolygon{canonical_rotation(std::move(duals))};
}

Rat degree(const LatticePolygon& p) { return normalized_area(dual_polygon(p)); }

LatticePolygon apply_linear(const LatticePolygon& p, const Int& a, const Int& b, const Int& c,
                            const Int& d) {
    std::vector<Vec> imgs;
    imgs.reserve(p.vertices.size());
    for (const Vec& v : p.vertices) {
        imgs.emplace_back(a * v.x + b * v.y, c * v.x + d * v.y);
    }
    return convex_hull(imgs);
}

namespace {

std::vector<Int> flatten(const LatticePolygon& p) {
    std::vector<Int> flat;
    flat.reserve(2 * p.vertices.size());
    for (const Vec& v : p.vertices) {
        flat.push_back(v.x);
        flat.push_back(v.y);
    }
    return flat;
}

/// Smallest image of q among the maps sending one fixed edge to a horizontal
/// segment at its height below the axis, sheared into the fundamental domain.
void consider_candidates(const LatticePolygon& q, std::vector<Int>& best,
                         LatticePolygon& best_poly, bool& have_best) {
    for (const EdgeData& e : edge_data(q)) {
        // Rows (alpha beta; n) with determinant one map the edge direction to
        // (1, 0) and the edge itself onto the line y = -height.
        Int alpha, beta;
        ext_gcd(e.direction.x, e.direction.y, alpha, beta);
        Int x0 = alpha * e.a.x + beta * e.a.y;
        Int s = floor_div(x0, e.height);
        Int r0 = alpha + s * e.normal.x;
        Int r1 = beta + s * e.normal.y;
        LatticePolygon cand = apply_linear(q, r0, r1, e.normal.x, e.normal.y);
        std::vector<Int> flat = flatten(cand);
        if (!have_best || flat < best) {
            best = std::move(flat);
            best_poly = std::move(cand);
            have_best = true;
        }
    }
}

}  // namespace

LatticePolygon normal_form(const LatticePolygon& p) {
    if (!is_fano(p)) {
        throw NotFano("normal_form: input is not a Fano polygon");
    }
    std::vector<Int> best;
    LatticePolygon best_poly;
    bool have_best = false;
    consider_candidates(p, best, best_poly, have_best);
    LatticePolygon mirrored = apply_linear(p, -1, 0, 0, 1);
    consider_candidates(mirrored, best, best_poly, have_best);
    return best_poly;
}

}  // namespace fano
