#pragma once

#include <vector>

#include "fanocascade/polygon.hpp"

namespace fano {

/// A cyclic quotient surface singularity 1/index (1, weight), with weight
/// normalized to the smaller of the two equivalent values c, c^{-1} mod
/// index. The smooth point is index 1, weight 0.
struct QuotientSingularity {
    Int index{1};
    Int weight{0};

    friend bool operator==(const QuotientSingularity& a, const QuotientSingularity& b) {
        return a.index == b.index && a.weight == b.weight;
    }
    friend bool operator!=(const QuotientSingularity& a, const QuotientSingularity& b) {
        return !(a == b);
    }
    friend bool operator<(const QuotientSingularity& a, const QuotientSingularity& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.weight < b.weight;
    }
};

/// Builds 1/index (a, b) and normalizes it to the form 1/index (1, c).
/// Requires a and b coprime to index.
QuotientSingularity make_singularity(const Int& index, const Int& a, const Int& b);

enum class SingularityType { Smooth, T, R, Neither };

/// The data of the classification: with s = 1 + weight, k = gcd(s, index),
/// c = s / k and r = index / k, the singularity admits a smoothing with
/// Milnor number zero exactly when r divides k, and has no such smoothing
/// component at all when k < r.
struct SingularityClass {
    SingularityType type;
    Int k;
    Int c;
    Int r;
};

SingularityClass classify_singularity(const QuotientSingularity& s);

/// Singularity of the affine toric surface of the cone spanned by u and v.
/// The rays are primitivized; throws DependentRays when they are collinear.
QuotientSingularity cone_singularity(const Vec& u, const Vec& v);

/// One width-times-height cell of an edge cone decomposition. The segment
/// from a to b spans the cell's cone together with the origin.
struct EdgeCone {
    int edge;
    int slot;
    Vec a;
    Vec b;
};

/// Decomposition of every edge cone of a Fano polygon: per edge of height r
/// and lattice length len, floor(len / r) cells of width r packed from the
/// counterclockwise first vertex, and a residual cone of width len mod r at
/// the far end when the division is not exact.
struct EdgeDecomposition {
    std::vector<EdgeCone> t_cones;
    std::vector<EdgeCone> residual_cones;
};

EdgeDecomposition decompose_edges(const LatticePolygon& p);

/// Singularity content: the number of zero-Milnor-number cells together with
/// the basket of residual singularities (sorted, with multiplicity).
struct SingularityContent {
    Int t_cone_count{0};
    std::vector<QuotientSingularity> basket;

    friend bool operator==(const SingularityContent& a, const SingularityContent& b) {
        return a.t_cone_count == b.t_cone_count && a.basket == b.basket;
    }
    friend bool operator!=(const SingularityContent& a, const SingularityContent& b) {
        return !(a == b);
    }
};

/// Throws NotFano for non-Fano input and InternalMismatch if a residual cone
/// fails to be of class R, which would mean the decomposition is wrong.
SingularityContent singularity_content(const LatticePolygon& p);

}  // namespace fano
