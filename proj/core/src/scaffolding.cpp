#include "fanocascade/scaffolding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fanocascade/errors.hpp"

namespace fano {

int Shape::dim() const {
    int total = 0;
    for (int n : factor_dims) {
        if (n < 1) throw std::invalid_argument("Shape: factor dimensions must be positive");
        total += n;
    }
    return total;
}

int Shape::ray_count() const { return dim() + static_cast<int>(factor_dims.size()); }

std::vector<Int> multidegree(const Shape& shape, const NefDivisor& d) {
    if (d.coeffs.size() != static_cast<std::size_t>(shape.ray_count())) {
        throw std::invalid_argument("multidegree: divisor has " + std::to_string(d.coeffs.size()) +
                                    " coefficients, shape has " +
                                    std::to_string(shape.ray_count()) + " rays");
    }
    std::vector<Int> degs;
    std::size_t at = 0;
    for (int n : shape.factor_dims) {
        Int sum = 0;
        for (int j = 0; j <= n; ++j) sum += d.coeffs[at + j];
        degs.push_back(sum);
        at += n + 1;
    }
    return degs;
}

namespace {

/// Vertices of {x_j >= -c_j, sum x <= c_last} in Z^n, the section simplex of
/// a nef divisor on P^n.
std::vector<std::vector<Int>> simplex_vertices(const std::vector<Int>& c) {
    std::size_t n = c.size() - 1;
    std::vector<Int> base(n);
    for (std::size_t j = 0; j < n; ++j) base[j] = -c[j];
    std::vector<std::vector<Int>> verts{base};
    Int deg = c[n];
    for (std::size_t j = 0; j < n; ++j) deg += c[j];
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> v = base;
        v[j] += deg;
        verts.push_back(v);
    }
    return verts;
}

}  // namespace

std::vector<std::vector<Int>> section_vertices(const Shape& shape, const NefDivisor& d) {
    std::vector<Int> degs = multidegree(shape, d);
    for (std::size_t f = 0; f < degs.size(); ++f) {
        if (degs[f] < 0) {
            throw NotNef("polyhedron_of_sections: negative degree " + degs[f].get_str() +
                         " on factor " + std::to_string(f));
        }
    }
    std::vector<std::vector<Int>> verts{{}};
    std::size_t at = 0;
    for (int n : shape.factor_dims) {
        std::vector<Int> c(d.coeffs.begin() + at, d.coeffs.begin() + at + n + 1);
        std::vector<std::vector<Int>> factor = simplex_vertices(c);
        std::vector<std::vector<Int>> next;
        for (const auto& v : verts) {
            for (const auto& w : factor) {
                std::vector<Int> joined = v;
                joined.insert(joined.end(), w.begin(), w.end());
                next.push_back(joined);
            }
        }
        verts = std::move(next);
        at += n + 1;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

RationalPolygon polyhedron_of_sections(const Shape& shape, const NefDivisor& d) {
    auto verts = section_vertices(shape, d);
    std::vector<QVec> pts;
    for (const auto& v : verts) {
        if (v.size() == 1) {
            pts.emplace_back(Rat(v[0]), Rat(0));
        } else if (v.size() == 2) {
            pts.emplace_back(Rat(v[0]), Rat(v[1]));
        } else {
            throw std::invalid_argument("polyhedron_of_sections: shape dimension must be 1 or 2");
        }
    }
    return convex_hull_rational(pts);
}

namespace {

struct StrutGeometry {
    std::vector<Vec> vertices;  // of the translated polytope, may be 1 or 2 points
};

std::string vec_str(const Vec& v) {
    return "(" + v.x.get_str() + ", " + v.y.get_str() + ")";
}

/// Point containment in the convex hull of up to two dimensional point sets.
bool hull_contains(const std::vector<Vec>& pts, const Vec& p) {
    if (pts.empty()) return false;
    if (pts.size() == 1) return pts[0] == p;
    // Try to find two extreme points; if all are collinear, test the segment.
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i) {
        if (cross(pts[i] - pts[0], pts[1] - pts[0]) != 0) collinear = false;
    }
    if (pts.size() == 2 || collinear) {
        // p must lie on the segment between the lexicographic extremes.
        Vec lo = *std::min_element(pts.begin(), pts.end());
        Vec hi = *std::max_element(pts.begin(), pts.end());
        if (cross(hi - lo, p - lo) != 0) return false;
        return !(p < lo) && !(hi < p);
    }
    LatticePolygon hull = convex_hull(pts);
    std::size_t n = hull.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec a = hull.vertices[i];
        Vec b = hull.vertices[(i + 1) % n];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Vec> strut_vertices(const Scaffolding& s, std::size_t strut_index) {
    const Strut& strut = s.struts.at(strut_index);
    int u = s.splitting_u;
    if (strut.chi.size() != static_cast<std::size_t>(u)) {
        throw std::invalid_argument("strut_vertices: chi length does not match the splitting");
    }
    if (s.shape.dim() + u != 2) {
        throw std::invalid_argument("strut_vertices: splitting and shape dimensions must sum to 2");
    }
    auto sections = section_vertices(s.shape, strut.divisor);
    std::vector<Vec> out;
    for (const auto& sec : sections) {
        std::vector<Int> coords(strut.chi);
        coords.insert(coords.end(), sec.begin(), sec.end());
        out.emplace_back(coords[0], coords[1]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ValidationResult validate_scaffolding(const LatticePolygon& p, const Scaffolding& s) {
    int u = s.splitting_u;
    if (u < 0 || u > 2) return {false, "splitting must be between 0 and 2"};
    if (s.shape.factor_dims.empty()) return {false, "shape has no factors"};
    if (s.shape.dim() + u != 2) {
        return {false, "shape dimension " + std::to_string(s.shape.dim()) + " plus splitting " +
                           std::to_string(u) + " must equal 2"};
    }
    if (s.struts.empty()) return {false, "scaffolding has no struts"};
    std::set<std::vector<Int>> unelim_chis;
    std::size_t expected_rays = static_cast<std::size_t>(s.shape.ray_count());
    for (std::size_t i = 0; i < s.struts.size(); ++i) {
        const Strut& strut = s.struts[i];
        if (strut.chi.size() != static_cast<std::size_t>(u)) {
            return {false, "strut " + std::to_string(i) + " has a chi of length " +
                               std::to_string(strut.chi.size()) + ", expected " +
                               std::to_string(u)};
        }
        if (strut.divisor.coeffs.size() != expected_rays) {
            return {false, "strut " + std::to_string(i) + " lists " +
                               std::to_string(strut.divisor.coeffs.size()) +
                               " ray coefficients, expected " + std::to_string(expected_rays)};
        }
        if (strut.uneliminated) {
            for (const Int& c : strut.divisor.coeffs) {
                if (c != 0) {
                    return {false,
                            "uneliminated strut " + std::to_string(i) + " has a nonzero divisor"};
                }
            }
            int ones = 0;
            bool basis = true;
            for (const Int& x : strut.chi) {
                if (x == 1) {
                    ++ones;
                } else if (x != 0) {
                    basis = false;
                }
            }
            if (!basis || ones != 1) {
                return {false, "uneliminated strut " + std::to_string(i) +
                                   " must have a standard basis vector as chi"};
            }
            if (!unelim_chis.insert(strut.chi).second) {
                return {false, "two uneliminated struts share the same chi"};
            }
        }
        for (const Int& deg : multidegree(s.shape, strut.divisor)) {
            if (deg < 0) {
                return {false, "strut " + std::to_string(i) + " is not nef (degree " +
                                   deg.get_str() + ")"};
            }
        }
    }
    if (unelim_chis.size() != static_cast<std::size_t>(u)) {
        return {false, "expected " + std::to_string(u) + " uneliminated struts, found " +
                           std::to_string(unelim_chis.size())};
    }

    std::vector<std::vector<Vec>> polytopes;
    std::vector<Vec> all_points;
    for (std::size_t i = 0; i < s.struts.size(); ++i) {
        polytopes.push_back(strut_vertices(s, i));
        all_points.insert(all_points.end(), polytopes.back().begin(), polytopes.back().end());
    }
    LatticePolygon hull;
    try {
        hull = convex_hull(all_points);
    } catch (const DegenerateInput&) {
        return {false, "the struts span less than the whole plane"};
    }
    if (hull != convex_hull(p.vertices)) {
        return {false, "the hull of the struts is not the polygon"};
    }
    for (const Vec& v : p.vertices) {
        int covering = 0;
        for (const auto& poly : polytopes) {
            if (hull_contains(poly, v)) ++covering;
        }
        if (covering != 1) {
            return {false, "vertex " + vec_str(v) + " lies in " + std::to_string(covering) +
                               " struts instead of exactly one"};
        }
    }
    return {true, ""};
}

GitData laurent_invert(const LatticePolygon& p, const Scaffolding& s) {
    ValidationResult check = validate_scaffolding(p, s);
    if (!check.ok) {
        throw InvalidScaffolding("laurent_invert: " + check.message);
    }
    std::vector<std::size_t> eliminated;
    std::vector<std::size_t> uneliminated;
    for (std::size_t i = 0; i < s.struts.size(); ++i) {
        (s.struts[i].uneliminated ? uneliminated : eliminated).push_back(i);
    }
    std::size_t r = eliminated.size();
    std::size_t rays = static_cast<std::size_t>(s.shape.ray_count());
    std::size_t cols = r + uneliminated.size() + rays;

    GitData out;
    out.weights.assign(r, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < r; ++i) {
        const Strut& strut = s.struts[eliminated[i]];
        out.weights[i][i] = 1;
        for (std::size_t j = 0; j < uneliminated.size(); ++j) {
            // The basis vector contributed by the uneliminated strut j.
            const std::vector<Int>& basis = s.struts[uneliminated[j]].chi;
            Int coefficient = 0;
            for (std::size_t t = 0; t < basis.size(); ++t) {
                coefficient += basis[t] * strut.chi[t];
            }
            out.weights[i][r + j] = -coefficient;
        }
        for (std::size_t j = 0; j < rays; ++j) {
            out.weights[i][r + uneliminated.size() + j] = strut.divisor.coeffs[j];
        }
    }
    for (std::size_t i = 1; i <= r; ++i) out.labels.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= uneliminated.size() + rays; ++i) {
        out.labels.push_back("x" + std::to_string(i));
    }
    out.omega.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r + uneliminated.size(); ++j) {
            out.omega[i] += out.weights[i][j];
        }
    }
    std::size_t at = r + uneliminated.size();
    for (int n : s.shape.factor_dims) {
        std::vector<Int> deg(r, 0);
        for (int j = 0; j <= n; ++j) {
            for (std::size_t i = 0; i < r; ++i) deg[i] += out.weights[i][at + j];
        }
        out.equation_degrees.push_back(deg);
        at += n + 1;
    }
    return out;
}

namespace {

std::vector<std::vector<Int>> matrix_columns(const IntMat& m) {
    std::vector<std::vector<Int>> cols;
    if (m.empty()) return cols;
    for (std::size_t j = 0; j < m[0].size(); ++j) {
        std::vector<Int> col;
        for (const auto& row : m) col.push_back(row[j]);
        cols.push_back(col);
    }
    return cols;
}

std::vector<Int> apply_matrix(const IntMat& u, const std::vector<Int>& v) {
    std::vector<Int> out(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += u[i][j] * v[j];
    }
    return out;
}

void ordered_tuples(std::size_t n, std::size_t r, std::vector<std::size_t>& current,
                    std::vector<char>& used, const std::function<bool()>& visit, bool& done) {
    if (done) return;
    if (current.size() == r) {
        if (visit()) done = true;
        return;
    }
    for (std::size_t j = 0; j < n && !done; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        current.push_back(j);
        ordered_tuples(n, r, current, used, visit, done);
        current.pop_back();
        used[j] = 0;
    }
}

}  // namespace

bool git_equivalent(const GitData& a, const GitData& b) {
    std::size_t r = a.weights.size();
    if (b.weights.size() != r) return false;
    if (r == 0) return true;
    if (a.weights[0].size() != b.weights[0].size()) return false;
    auto cols_a = matrix_columns(a.weights);
    auto cols_b = matrix_columns(b.weights);
    std::multiset<std::vector<Int>> target(cols_b.begin(), cols_b.end());

    std::vector<std::size_t> current;
    std::vector<char> used(cols_b.size(), 0);
    bool done = false;
    auto visit = [&]() {
        // Candidate U maps the identity block columns of a to the chosen
        // columns of b, so U's columns are exactly the chosen ones.
        IntMat u(r, std::vector<Int>(r));
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < r; ++i) u[i][j] = cols_b[current[j]][i];
        }
        Int det = determinant(u);
        if (det != 1 && det != -1) return false;
        if (apply_matrix(u, a.omega) != b.omega) return false;
        std::multiset<std::vector<Int>> mapped;
        for (const auto& col : cols_a) mapped.insert(apply_matrix(u, col));
        return mapped == target;
    };
    ordered_tuples(cols_b.size(), r, current, used, visit, done);
    return done;
}

Scaffolding anti_canonical_scaffolding(const LatticePolygon& p, const Shape& shape) {
    if (shape.dim() != 2) {
        throw std::invalid_argument("anti_canonical_scaffolding: shape must be two dimensional");
    }
    // Rays of the shape as vectors in the plane, factor blocks side by side.
    std::vector<Vec> rays;
    std::size_t at = 0;
    for (int n : shape.factor_dims) {
        for (int j = 0; j < n; ++j) {
            Vec e{0, 0};
            (at + j == 0 ? e.x : e.y) = 1;
            rays.push_back(e);
        }
        Vec last{0, 0};
        for (int j = 0; j < n; ++j) (at + j == 0 ? last.x : last.y) = -1;
        rays.push_back(last);
        at += n;
    }
    NefDivisor d;
    for (const Vec& ray : rays) {
        Int support = 0;
        bool first = true;
        for (const Vec& v : p.vertices) {
            Int value = dot(ray, v);
            if (first || value < support) support = value;
            first = false;
        }
        d.coeffs.push_back(-support);
    }
    Scaffolding s;
    s.shape = shape;
    s.splitting_u = 0;
    s.struts.push_back(Strut{d, {}, false});
    std::vector<Vec> verts;
    try {
        verts = strut_vertices(s, 0);
    } catch (const NotNef&) {
        throw NoSuchDivisor("anti_canonical_scaffolding: the support divisor is not nef");
    }
    LatticePolygon hull = convex_hull(verts);
    if (hull != p) {
        throw NoSuchDivisor(
            "anti_canonical_scaffolding: the polygon is not a section polytope of this shape");
    }
    return s;
}

}  // namespace fano
