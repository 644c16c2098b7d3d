#pragma once

#include <set>
#include <string>
#include <vector>

#include "fanocascade/matrix.hpp"

namespace fano {

/// The orthogonal complement setup for a degree k - l + 4 + 4/k surface:
/// the lattice Z^(l+1) with the bilinear form diag(k, -1, ..., -1) and the
/// distinguished class omega = (-(k+2)/k, 1, ..., 1) (rational; only its
/// orthogonal complement is used, which is integral). Roots are the integer
/// vectors orthogonal to omega of self-pairing -2.
struct PolarizedLattice {
    long k;
    long l;

    PolarizedLattice(long k_in, long l_in);

    /// diag(k, -1, ..., -1) pairing of two integer vectors of length l+1.
    Int pairing(const std::vector<Int>& a, const std::vector<Int>& b) const;
};

using Root = std::vector<Int>;
using RootSet = std::set<Root>;

/// All roots: vectors (a, b_1..b_l) with sum(b) = -(k+2) a and
/// sum(b^2) = k a^2 + 2. Throws DegenerateLattice when (k+2)^2 - l k <= 0,
/// where the search space is unbounded.
RootSet enumerate_roots(const PolarizedLattice& lat);

/// Lexicographically positive roots.
std::vector<Root> positive_roots(const RootSet& roots);

/// Indecomposable positive roots, sorted. Their number equals the rank of
/// the span of all roots.
std::vector<Root> simple_roots(const RootSet& roots);

/// Cartan matrix of the simple roots with respect to the negated pairing,
/// so diagonal entries are 2. Throws UnrecognizedDiagram if an off-diagonal
/// entry is not 0 or -1.
IntMat cartan_matrix(const std::vector<Root>& simple, const PolarizedLattice& lat);

/// One irreducible factor of a simply laced root system.
struct DynkinFactor {
    char series;  // 'A', 'D' or 'E'
    long rank;

    friend bool operator==(const DynkinFactor& a, const DynkinFactor& b) {
        return a.series == b.series && a.rank == b.rank;
    }
    friend bool operator<(const DynkinFactor& a, const DynkinFactor& b) {
        if (a.series != b.series) return a.series > b.series;  // E before D before A
        return a.rank > b.rank;
    }
};

struct CartanType {
    std::vector<DynkinFactor> factors;  // sorted

    std::string to_string() const;

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.factors == b.factors;
    }
};

CartanType make_cartan_type(const std::string& text);

/// Reads the Dynkin diagram off a Cartan matrix. Throws UnrecognizedDiagram
/// when a component is not one of the simply laced types.
CartanType classify(const IntMat& cartan);

/// Order of the quotient of the weight lattice of the root span by the root
/// lattice, computed two independent ways: as |det| of the Cartan matrix and
/// as the discriminant group order of the Gram matrix of a basis of the
/// lattice generated by all roots (via Smith normal form). Throws
/// InternalMismatch when the two disagree.
Int index_of_connectedness(const PolarizedLattice& lat);

/// One displayed row of a root table: the root a e_0 - sum_i b_i e_i together
/// with its permutation and sign orbit.
struct OrbitRow {
    Int a;
    std::vector<Int> b;  // length l, in any order; the orbit permutes it
};

/// The stored table rows for the given parameters.
std::vector<OrbitRow> orbit_table_rows(long k, long l);

/// Whether the sign and permutation orbits of the stored rows reproduce
/// enumerate_roots exactly.
bool verify_orbit_table(long k, long l);

}  // namespace fano
