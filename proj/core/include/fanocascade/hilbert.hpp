#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fanocascade/numeric.hpp"

namespace fano {

/// Sparse integer polynomial, exponent -> coefficient, with no zero entries.
using Poly = std::map<long, Int>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Int& s);

/// 1 + t^step + t^(2 step) + ... with `terms` summands.
Poly geometric_sum(long step, long terms);

/// 1 - t^a.
Poly one_minus_power(long a);

/// Divides by 1 - t^a; returns false when the division is not exact.
bool poly_divide_one_minus_power(const Poly& num, long a, Poly& quotient);

bool poly_is_palindromic(const Poly& p);
bool poly_has_negative_coefficient(const Poly& p);
std::string poly_to_string(const Poly& p, const std::string& var = "t");

/// A rational function numerator / prod_a (1 - t^a), the standard display
/// form of the Hilbert series of a graded ring.
struct HilbertFraction {
    Poly numerator;
    std::multiset<long> denominator_orders;
};

/// Cancels denominator factors 1 - t^a that divide the numerator exactly,
/// scanning the orders from largest to smallest so the result is
/// deterministic.
HilbertFraction reduce(HilbertFraction f);

/// Power series coefficients 0..order of the fraction, computed exactly.
std::vector<Int> series_expand(const HilbertFraction& f, long order);

/// Equality as rational functions, by cross multiplication.
bool fractions_equal(const HilbertFraction& f, const HilbertFraction& g);

/// Hilbert series of the anticanonical ring of the weighted projective plane
/// with weights (1, 1, k), regraded so the anticanonical class has degree
/// one: numerator over (1-t)^2 (1-t^k).
HilbertFraction anticanonical_hilbert_p11k(long k);

/// Series of the surface obtained from the weight (1, 1, k) plane by l blow
/// ups: each blow up subtracts t (1 - t^k) / (1 - t) from the numerator of
/// anticanonical_hilbert_p11k(k). Throws DegreeNonPositive when l k >=
/// (k+2)^2, since the degree (k+2)^2/k - l would not stay positive.
HilbertFraction cascade_hilbert(long k, long l);

/// Hilbert series of a weighted complete intersection: product of
/// (1 - t^d) over the equation degrees, over the product of (1 - t^a) over
/// the ambient weights.
HilbertFraction ci_hilbert(const std::vector<long>& weights, const std::vector<long>& degrees);

}  // namespace fano
