#include "fanocascade/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fanocascade/errors.hpp"
#include "fanocascade/matrix.hpp"

namespace fano {

namespace {

/// Coordinate of x - h u0 along f, where x has height h; exact by
/// construction since x - h u0 is a multiple of f.
Int along_factor(const Vec& x, const Int& h, const Vec& u0, const Vec& f) {
    Vec rest = x - h * u0;
    if (f.x != 0) return rest.x / f.x;
    return rest.y / f.y;
}

}  // namespace

LatticePolygon mutate(const LatticePolygon& p, const MutationMove& m) {
    if (!is_fano(p)) throw NotFano("mutate: input is not a Fano polygon");
    if (is_zero(m.weight) || !is_primitive(m.weight)) {
        throw InvalidMove("mutate: weight must be primitive");
    }
    if (m.width < 0) throw InvalidMove("mutate: width must be nonnegative");
    if (m.width == 0) return convex_hull(p.vertices);
    if (is_zero(m.factor_dir) || !is_primitive(m.factor_dir) ||
        dot(m.weight, m.factor_dir) != 0) {
        throw InvalidMove("mutate: factor direction must be primitive and orthogonal to the weight");
    }
    Int a, b;
    ext_gcd(m.weight.x, m.weight.y, a, b);
    Vec u0{a, b};  // dot(weight, u0) = 1

    // Validity: the bottom slice must decompose, and by concavity of slice
    // widths that single check covers every negative height. The minimal
    // slice is spanned by vertices, so its endpoints are exact here.
    Int hmin;
    bool have_hmin = false;
    for (const Vec& v : p.vertices) {
        Int h = dot(m.weight, v);
        if (!have_hmin || h < hmin) {
            hmin = h;
            have_hmin = true;
        }
    }
    Int bottom_lo, bottom_hi;
    bool have_bottom = false;
    for (const Vec& v : p.vertices) {
        if (dot(m.weight, v) != hmin) continue;
        Int t = along_factor(v, hmin, u0, m.factor_dir);
        if (!have_bottom) {
            bottom_lo = bottom_hi = t;
            have_bottom = true;
        } else {
            bottom_lo = std::min(bottom_lo, t);
            bottom_hi = std::max(bottom_hi, t);
        }
    }
    if (bottom_hi - bottom_lo < -hmin * m.width) {
        throw InvalidMove("mutate: the bottom slice of height " + hmin.get_str() +
                          " is too short for width " + m.width.get_str());
    }

    // Every slice keeps its low end (against the factor direction) and moves
    // its high end by height * width factor steps, so a vertex survives when
    // -f exits the polygon there and contributes its sheared image when +f
    // exits. A direction exits unless it lies in the cone of the two edges.
    std::size_t n = p.vertices.size();
    auto exits = [&](std::size_t i, const Vec& g) {
        const Vec& v = p.vertices[i];
        Vec d1 = p.vertices[(i + n - 1) % n] - v;
        Vec d2 = p.vertices[(i + 1) % n] - v;
        Int det = cross(d1, d2);
        Int alpha = cross(g, d2);
        Int beta = cross(d1, g);
        if (det < 0) {
            alpha = -alpha;
            beta = -beta;
        }
        return alpha < 0 || beta < 0;
    };
    std::vector<Vec> points;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& v = p.vertices[i];
        Int h = dot(m.weight, v);
        if (exits(i, -m.factor_dir)) points.push_back(v);
        if (exits(i, m.factor_dir)) {
            points.push_back(v + (h * m.width) * m.factor_dir);
        }
    }
    LatticePolygon result = convex_hull(points);
    if (!is_fano(result)) {
        throw InternalMismatch("mutate: the mutated polygon is not Fano");
    }
    return result;
}

std::vector<MutationMove> mutation_moves(const LatticePolygon& p) {
    if (!is_fano(p)) throw NotFano("mutation_moves: input is not a Fano polygon");
    std::vector<MutationMove> moves;
    for (const EdgeData& e : edge_data(p)) {
        Int cells = e.length / e.height;
        for (Int c = 1; c <= cells; ++c) {
            moves.push_back(MutationMove{e.normal, e.direction, c});
        }
    }
    return moves;
}

std::vector<LatticePolygon> mutation_neighbors(const LatticePolygon& p) {
    std::set<LatticePolygon> seen;
    for (const MutationMove& m : mutation_moves(p)) {
        seen.insert(normal_form(mutate(p, m)));
    }
    return {seen.begin(), seen.end()};
}

namespace {

/// Accumulates generator rows; returns true when the basis changed.
bool add_generator(IntMat& basis, const Vec& w) {
    IntMat candidate = basis;
    candidate.push_back({w.x, w.y});
    IntMat reduced = hermite_basis(candidate);
    if (reduced == basis) return false;
    basis = std::move(reduced);
    return true;
}

bool is_full_lattice(const IntMat& basis) {
    return basis.size() == 2 && basis[0][0] == 1 && basis[0][1] == 0 && basis[1][0] == 0 &&
           basis[1][1] == 1;
}

}  // namespace

FundamentalGroupResult fundamental_group_invariant(const LatticePolygon& p, long search_bound) {
    if (search_bound < 1) {
        throw std::invalid_argument("fundamental_group_invariant: bound must be positive");
    }
    LatticePolygon start = convex_hull(p.vertices);
    std::set<LatticePolygon> visited{normal_form(start)};
    std::deque<LatticePolygon> frontier{start};
    IntMat basis;
    long processed = 0;
    bool stabilized = false;
    bool out_of_budget = false;

    while (!frontier.empty() && !stabilized && !out_of_budget) {
        std::deque<LatticePolygon> next;
        bool changed = false;
        while (!frontier.empty()) {
            LatticePolygon q = frontier.front();
            frontier.pop_front();
            ++processed;
            for (const MutationMove& m : mutation_moves(q)) {
                if (add_generator(basis, m.weight)) changed = true;
            }
            if (is_full_lattice(basis)) {
                stabilized = true;
                break;
            }
            for (const MutationMove& m : mutation_moves(q)) {
                LatticePolygon image = mutate(q, m);
                LatticePolygon key = normal_form(image);
                if (visited.count(key)) continue;
                if (static_cast<long>(visited.size()) >= search_bound) {
                    out_of_budget = true;
                    continue;
                }
                visited.insert(key);
                next.push_back(image);
            }
        }
        if (stabilized) break;
        if (!changed && processed > 0) {
            // A full level added no generator; the lattice has settled.
            stabilized = true;
            break;
        }
        if (next.empty()) {
            stabilized = true;  // the whole mutation class was finite and explored
            break;
        }
        frontier = std::move(next);
    }

    if (basis.size() < 2) {
        throw std::runtime_error(
            "fundamental_group_invariant: the weight lattice has rank below two; raise the "
            "search bound");
    }
    FundamentalGroupResult result;
    result.stabilized = stabilized;
    result.polygons_visited = processed;
    for (const Int& d : smith_invariant_factors(basis)) {
        if (d > 1) result.group.invariant_factors.push_back(d);
    }
    return result;
}

}  // namespace fano
