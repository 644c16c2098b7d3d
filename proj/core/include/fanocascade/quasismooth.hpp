#pragma once

#include <string>
#include <vector>

namespace fano {

/// Whether some monomial in variables of the given weights has total weight
/// exactly d. Negative d has none; d = 0 has the constant monomial.
bool has_monomial(const std::vector<long>& weights, long d);

/// Outcome of a quasismoothness test. When ok is false, witness holds the
/// indices of a coordinate stratum on which every general member is singular.
struct QuasismoothReport {
    bool ok{false};
    std::vector<int> witness;
    std::string detail;
};

/// Quasismoothness of the general hypersurface of degree d in the weighted
/// projective space with the given weights, decided combinatorially: either
/// the hypersurface is a linear cone (d equals some weight), or for every
/// nonempty index set I the general member must have a monomial in the
/// variables of I alone, or enough monomials of the form (one variable
/// outside) * (monomial in I) to span the conormal directions.
/// Requires at least two weights, all positive, and d positive.
QuasismoothReport is_quasismooth_hypersurface(const std::vector<long>& weights, long d);

/// Quasismoothness of the general codimension two complete intersection of
/// bidegrees (d1, d2). Throws LinearCone when d1 or d2 equals a weight, since
/// that case reduces to a hypersurface in fewer variables.
QuasismoothReport is_quasismooth_ci2(const std::vector<long>& weights, long d1, long d2);

}  // namespace fano
