#include "fanocascade/quasismooth.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanocascade/errors.hpp"

namespace fano {

namespace {

void validate_weights(const std::vector<long>& weights) {
    if (weights.size() < 2) {
        throw std::invalid_argument("quasismooth: need at least two weights");
    }
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("quasismooth: weights must be positive");
    }
}

std::vector<int> subset_indices(unsigned mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) out.push_back(i);
    }
    return out;
}

std::vector<long> subset_weights(const std::vector<long>& weights, unsigned mask) {
    std::vector<long> out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (mask & (1u << i)) out.push_back(weights[i]);
    }
    return out;
}

/// Variables e whose removal degree d - a_e is realized by a monomial in the
/// subset variables; these index monomials x_e * (monomial in the subset).
unsigned tail_mask(const std::vector<long>& weights, const std::vector<long>& sub, long d) {
    unsigned out = 0;
    for (std::size_t e = 0; e < weights.size(); ++e) {
        if (has_monomial(sub, d - weights[e])) out |= 1u << e;
    }
    return out;
}

int popcount(unsigned x) { return __builtin_popcount(x); }

/// Search for an injective choice witnessing the two-equation tangent space
/// condition: distinct e^1_0, ..., e^1_{k-1} in mask1, distinct e^2_0, ...,
/// e^2_{k-1} in mask2, with at least k+1 distinct values in the union.
bool exhaustive_pair_choice(unsigned mask1, unsigned mask2, int k, int n) {
    std::vector<unsigned> picks1;
    std::vector<unsigned> picks2;
    unsigned full = n >= 32 ? ~0u : (1u << n) - 1;
    for (unsigned s = 0; s <= full; ++s) {
        if ((s & mask1) == s && popcount(s) == k) picks1.push_back(s);
        if ((s & mask2) == s && popcount(s) == k) picks2.push_back(s);
    }
    for (unsigned s1 : picks1) {
        for (unsigned s2 : picks2) {
            if (popcount(s1 | s2) >= k + 1) return true;
        }
    }
    return false;
}

}  // namespace

bool has_monomial(const std::vector<long>& weights, long d) {
    if (d < 0) return false;
    if (d == 0) return true;
    std::vector<char> reachable(static_cast<std::size_t>(d) + 1, 0);
    reachable[0] = 1;
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("has_monomial: weights must be positive");
        for (long i = w; i <= d; ++i) {
            if (reachable[i - w]) reachable[i] = 1;
        }
    }
    return reachable[d] != 0;
}

QuasismoothReport is_quasismooth_hypersurface(const std::vector<long>& weights, long d) {
    validate_weights(weights);
    if (d <= 0) throw std::invalid_argument("quasismooth: degree must be positive");
    int n = static_cast<int>(weights.size());
    if (n > 20) throw std::invalid_argument("quasismooth: too many weights");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == d) {
            return {true, {static_cast<int>(i)}, "degree equals a weight: a linear cone"};
        }
    }
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        std::vector<long> sub = subset_weights(weights, mask);
        if (has_monomial(sub, d)) continue;
        unsigned tails = tail_mask(weights, sub, d);
        if (popcount(tails) >= popcount(mask)) continue;
        return {false, subset_indices(mask, n),
                "no monomial of degree " + std::to_string(d) +
                    " on the stratum and too few tangent monomials"};
    }
    return {true, {}, ""};
}

QuasismoothReport is_quasismooth_ci2(const std::vector<long>& weights, long d1, long d2) {
    validate_weights(weights);
    if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("quasismooth: degrees must be positive");
    int n = static_cast<int>(weights.size());
    if (n > 20) throw std::invalid_argument("quasismooth: too many weights");
    for (long w : weights) {
        if (w == d1 || w == d2) {
            throw LinearCone("is_quasismooth_ci2: degree " + std::to_string(w == d1 ? d1 : d2) +
                             " equals a weight, reduce to a hypersurface first");
        }
    }
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        std::vector<long> sub = subset_weights(weights, mask);
        int k = popcount(mask);
        bool pure1 = has_monomial(sub, d1);
        bool pure2 = has_monomial(sub, d2);
        if (pure1 && pure2) continue;
        unsigned tails1 = tail_mask(weights, sub, d1);
        unsigned tails2 = tail_mask(weights, sub, d2);
        if (pure1 && popcount(tails2) >= k - 1) continue;
        if (pure2 && popcount(tails1) >= k - 1) continue;
        if (exhaustive_pair_choice(tails1, tails2, k, n)) continue;
        return {false, subset_indices(mask, n),
                "the stratum fails every tangent space condition for bidegree (" +
                    std::to_string(d1) + ", " + std::to_string(d2) + ")"};
    }
    return {true, {}, ""};
}

}  // namespace fano
