#include "fanocascade/singularity.hpp"

#include <algorithm>

#include "fanocascade/errors.hpp"

namespace fano {

QuotientSingularity make_singularity(const Int& index, const Int& a, const Int& b) {
    if (index < 1) {
        throw std::invalid_argument("make_singularity: index must be positive");
    }
    if (index == 1) return {Int(1), Int(0)};
    if (int_gcd(a, index) != 1 || int_gcd(b, index) != 1) {
        throw std::invalid_argument("make_singularity: weights must be coprime to the index");
    }
    Int c = pos_mod(mod_inverse(a, index) * b, index);
    Int cinv = mod_inverse(c, index);
    return {index, std::min(c, cinv)};
}

SingularityClass classify_singularity(const QuotientSingularity& s) {
    if (s.index == 1) {
        return {SingularityType::Smooth, Int(1), Int(1), Int(1)};
    }
    Int sum = 1 + s.weight;
    Int k = int_gcd(sum, s.index);
    Int c = sum / k;
    Int r = s.index / k;
    SingularityType type;
    if (k % r == 0) {
        type = SingularityType::T;
    } else if (k < r) {
        type = SingularityType::R;
    } else {
        type = SingularityType::Neither;
    }
    return {type, k, c, r};
}

QuotientSingularity cone_singularity(const Vec& u_in, const Vec& v_in) {
    if (cross(u_in, v_in) == 0) {
        throw DependentRays("cone_singularity: rays are linearly dependent");
    }
    Vec u = primitive(u_in);
    Vec v = primitive(v_in);
    if (cross(u, v) < 0) std::swap(u, v);
    Int index = cross(u, v);
    if (index == 1) return {Int(1), Int(0)};
    // Complete u to a basis (u, u') of determinant one; in that basis v has
    // coordinates (p, index) and the cone is 1/index (1, index - p).
    Int alpha, beta;
    ext_gcd(u.x, u.y, alpha, beta);
    Vec uprime{-beta, alpha};
    Int p = pos_mod(cross(v, uprime), index);
    return make_singularity(index, Int(1), index - p);
}

EdgeDecomposition decompose_edges(const LatticePolygon& p) {
    if (!is_fano(p)) {
        throw NotFano("decompose_edges: input is not a Fano polygon");
    }
    EdgeDecomposition out;
    auto edges = edge_data(p);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeData& e = edges[i];
        Int cells = e.length / e.height;
        Int rem = e.length % e.height;
        Vec start = e.a;
        Int slot = 0;
        for (Int j = 0; j < cells; ++j) {
            Vec next = start + e.height * e.direction;
            out.t_cones.push_back(EdgeCone{static_cast<int>(i), static_cast<int>(slot.get_si()),
                                           start, next});
            start = next;
            ++slot;
        }
        if (rem > 0) {
            out.residual_cones.push_back(
                EdgeCone{static_cast<int>(i), static_cast<int>(slot.get_si()), start, e.b});
        }
    }
    return out;
}

SingularityContent singularity_content(const LatticePolygon& p) {
    EdgeDecomposition dec = decompose_edges(p);
    SingularityContent content;
    content.t_cone_count = static_cast<long>(dec.t_cones.size());
    for (const EdgeCone& cone : dec.t_cones) {
        auto cls = classify_singularity(cone_singularity(cone.a, cone.b));
        if (cls.type != SingularityType::T && cls.type != SingularityType::Smooth) {
            throw InternalMismatch("singularity_content: a packed cell is not of class T");
        }
    }
    for (const EdgeCone& cone : dec.residual_cones) {
        QuotientSingularity s = cone_singularity(cone.a, cone.b);
        if (classify_singularity(s).type != SingularityType::R) {
            throw InternalMismatch("singularity_content: a residual cone is not of class R");
        }
        content.basket.push_back(s);
    }
    std::sort(content.basket.begin(), content.basket.end());
    return content;
}

}  // namespace fano
