#pragma once

#include <string>
#include <vector>

#include "fanocascade/matrix.hpp"
#include "fanocascade/polygon.hpp"

namespace fano {

/// A product of projective spaces, recorded by the dimension of each factor.
/// The rays of factor P^n are e_1, ..., e_n, -(e_1 + ... + e_n), in that
/// order, and divisors list one coefficient per ray, factor by factor.
struct Shape {
    std::vector<int> factor_dims;

    int dim() const;
    int ray_count() const;

    friend bool operator==(const Shape& a, const Shape& b) {
        return a.factor_dims == b.factor_dims;
    }
};

struct NefDivisor {
    std::vector<Int> coeffs;
};

/// Degree of the divisor on each factor: the sum of its coefficients there.
std::vector<Int> multidegree(const Shape& shape, const NefDivisor& d);

/// Polytope of sections of the divisor inside the cocharacter lattice of the
/// shape's torus. One-dimensional results are embedded on the first axis.
/// Throws NotNef when some multidegree is negative.
RationalPolygon polyhedron_of_sections(const Shape& shape, const NefDivisor& d);

/// Integral vertices of the section polytope. Internal building block shared
/// by validation and inversion; same errors as polyhedron_of_sections.
std::vector<std::vector<Int>> section_vertices(const Shape& shape, const NefDivisor& d);

/// One strut of a scaffolding: a nef divisor together with the translation
/// chi in the uneliminated sublattice. Uneliminated struts mark coordinates
/// kept as honest torus directions: zero divisor, chi a basis vector.
struct Strut {
    NefDivisor divisor;
    std::vector<Int> chi;
    bool uneliminated{false};
};

struct Scaffolding {
    Shape shape;
    int splitting_u{0};
    std::vector<Strut> struts;
};

/// Vertices of the translated section polytope of one strut inside the rank
/// two ambient lattice, chi coordinates first.
std::vector<Vec> strut_vertices(const Scaffolding& s, std::size_t strut_index);

struct ValidationResult {
    bool ok{false};
    std::string message;
};

/// A scaffolding is valid for p when the translated strut polytopes have
/// convex hull exactly p and every vertex of p lies in exactly one of them.
/// Structural defects (sizes, missing uneliminated basis) are reported the
/// same way, never thrown.
ValidationResult validate_scaffolding(const LatticePolygon& p, const Scaffolding& s);

/// The torus-quotient presentation produced by inverting a scaffolding: a
/// weight matrix whose rows correspond to the eliminated struts, with the
/// column blocks [identity | uneliminated | rays], the stability class omega
/// (the sum of the first rows+uneliminated columns), the per factor equation
/// multidegrees, and display labels.
struct GitData {
    IntMat weights;
    std::vector<std::string> labels;
    std::vector<Int> omega;
    std::vector<std::vector<Int>> equation_degrees;
};

/// Throws InvalidScaffolding (with the validation message) when the
/// scaffolding does not fit the polygon.
GitData laurent_invert(const LatticePolygon& p, const Scaffolding& s);

/// Whether two presentations agree up to a unimodular change of the row
/// space and a permutation of columns, matching omega as well.
bool git_equivalent(const GitData& a, const GitData& b);

/// The unique single strut scaffolding of p on the given two-dimensional
/// shape, when p is a translated section polytope of that shape. Throws
/// NoSuchDivisor otherwise.
Scaffolding anti_canonical_scaffolding(const LatticePolygon& p, const Shape& shape);

}  // namespace fano
