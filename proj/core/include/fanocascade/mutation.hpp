#pragma once

#include <vector>

#include "fanocascade/polygon.hpp"

namespace fano {

/// A mutation datum: a primitive weight w in the dual lattice and the factor
/// segment from the origin to width * factor_dir, where factor_dir is a
/// primitive direction annihilated by w. Width zero is the identity.
struct MutationMove {
    Vec weight;
    Vec factor_dir;
    Int width{0};

    friend bool operator==(const MutationMove& a, const MutationMove& b) {
        return a.weight == b.weight && a.factor_dir == b.factor_dir && a.width == b.width;
    }
};

/// Mutation of a Fano polygon: slices at negative height h lose |h| * width
/// copies of the factor direction from their far end, slices at positive
/// height gain them. Defined exactly when the bottom slice is long enough;
/// throws InvalidMove otherwise, NotFano for bad polygons.
LatticePolygon mutate(const LatticePolygon& p, const MutationMove& m);

/// Every valid mutation with positive width: one family per edge whose
/// lattice length is at least its height, with widths 1 up to their ratio.
/// The weight is the edge's primitive inner normal and the factor direction
/// the counterclockwise edge direction.
std::vector<MutationMove> mutation_moves(const LatticePolygon& p);

/// Normal forms of all one step mutations, sorted without repeats.
std::vector<LatticePolygon> mutation_neighbors(const LatticePolygon& p);

/// A finite abelian group as invariant factors d_1 | d_2 | ..., each at
/// least 2; the empty list is the trivial group.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.invariant_factors == b.invariant_factors;
    }
};

struct FundamentalGroupResult {
    FiniteAbelianGroup group;
    bool stabilized{false};
    long polygons_visited{0};
};

/// The quotient of the dual lattice by the sublattice generated by the
/// weights of every mutation discovered in a breadth first walk of the
/// mutation graph (deduplicated by normal form, visiting at most
/// search_bound polygons). `stabilized` reports whether the walk either
/// exhausted the class, saw a full level without new generators, or reached
/// the full dual lattice.
FundamentalGroupResult fundamental_group_invariant(const LatticePolygon& p,
                                                   long search_bound = 500);

}  // namespace fano
