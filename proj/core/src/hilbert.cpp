#include "fanocascade/hilbert.hpp"

#include <algorithm>

#include "fanocascade/errors.hpp"

namespace fano {

namespace {

void add_term(Poly& p, long e, const Int& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) add_term(out, e, c);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) add_term(out, e, -c);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) add_term(out, ea + eb, ca * cb);
    }
    return out;
}

Poly poly_scale(const Poly& a, const Int& s) {
    Poly out;
    if (s == 0) return out;
    for (const auto& [e, c] : a) out.emplace(e, c * s);
    return out;
}

Poly geometric_sum(long step, long terms) {
    Poly out;
    for (long i = 0; i < terms; ++i) out.emplace(i * step, 1);
    return out;
}

Poly one_minus_power(long a) {
    Poly out;
    out.emplace(0, 1);
    add_term(out, a, Int(-1));
    return out;
}

bool poly_divide_one_minus_power(const Poly& num, long a, Poly& quotient) {
    if (a <= 0) throw std::invalid_argument("poly_divide_one_minus_power: order must be positive");
    quotient.clear();
    if (num.empty()) return true;
    long max_e = num.rbegin()->first;
    Poly rem = num;
    while (!rem.empty()) {
        auto [e, c] = *rem.begin();
        if (e > max_e) return false;
        add_term(quotient, e, c);
        rem.erase(rem.begin());
        add_term(rem, e + a, c);
    }
    return true;
}

bool poly_is_palindromic(const Poly& p) {
    if (p.empty()) return true;
    long lo = p.begin()->first;
    long hi = p.rbegin()->first;
    for (const auto& [e, c] : p) {
        auto it = p.find(lo + hi - e);
        if (it == p.end() || it->second != c) return false;
    }
    return true;
}

bool poly_has_negative_coefficient(const Poly& p) {
    return std::any_of(p.begin(), p.end(), [](const auto& term) { return term.second < 0; });
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        Int ac = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool need_coeff = (ac != 1) || e == 0;
        if (need_coeff) out += ac.get_str();
        if (e != 0) {
            if (need_coeff) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

HilbertFraction reduce(HilbertFraction f) {
    std::vector<long> orders(f.denominator_orders.rbegin(), f.denominator_orders.rend());
    for (long a : orders) {
        Poly quotient;
        if (poly_divide_one_minus_power(f.numerator, a, quotient)) {
            f.numerator = std::move(quotient);
            f.denominator_orders.erase(f.denominator_orders.find(a));
        }
    }
    return f;
}

std::vector<Int> series_expand(const HilbertFraction& f, long order) {
    if (order < 0) throw std::invalid_argument("series_expand: negative order");
    std::vector<Int> coeffs(order + 1, 0);
    for (const auto& [e, c] : f.numerator) {
        if (e < 0) throw std::invalid_argument("series_expand: negative exponent in numerator");
        if (e <= order) coeffs[e] += c;
    }
    for (long a : f.denominator_orders) {
        for (long i = a; i <= order; ++i) coeffs[i] += coeffs[i - a];
    }
    return coeffs;
}

bool fractions_equal(const HilbertFraction& f, const HilbertFraction& g) {
    Poly lhs = f.numerator;
    for (long a : g.denominator_orders) lhs = poly_mul(lhs, one_minus_power(a));
    Poly rhs = g.numerator;
    for (long a : f.denominator_orders) rhs = poly_mul(rhs, one_minus_power(a));
    return lhs == rhs;
}

HilbertFraction anticanonical_hilbert_p11k(long k) {
    if (k < 1) throw std::invalid_argument("anticanonical_hilbert_p11k: k must be positive");
    // (1-s^(k+2))^2 (1-s^(k(k+2))) / ((1-s)^2 (1-s^k)) is a polynomial in s;
    // only the exponents divisible by k+2 survive the anticanonical grading.
    Poly a = geometric_sum(1, k + 2);
    Poly c = geometric_sum(k, k + 2);
    Poly full = poly_mul(poly_mul(a, a), c);
    Poly numerator;
    for (const auto& [e, coeff] : full) {
        if (e % (k + 2) == 0) numerator.emplace(e / (k + 2), coeff);
    }
    HilbertFraction out;
    out.numerator = std::move(numerator);
    out.denominator_orders = {1, 1, k};
    return out;
}

HilbertFraction cascade_hilbert(long k, long l) {
    if (k < 1 || l < 0) throw std::invalid_argument("cascade_hilbert: bad parameters");
    if (l * k >= (k + 2) * (k + 2)) {
        throw DegreeNonPositive("cascade_hilbert: " + std::to_string(l) +
                                " blow ups drop the degree of the weight (1,1," +
                                std::to_string(k) + ") plane to or below zero");
    }
    HilbertFraction out = anticanonical_hilbert_p11k(k);
    // One blow up contributes -t/(1-t)^3, which over the common denominator
    // (1-t)^2 (1-t^k) is -(t + t^2 + ... + t^k).
    Poly drop = poly_mul(geometric_sum(1, k), Poly{{1, Int(1)}});
    out.numerator = poly_sub(out.numerator, poly_scale(drop, Int(l)));
    return out;
}

HilbertFraction ci_hilbert(const std::vector<long>& weights, const std::vector<long>& degrees) {
    if (weights.empty()) throw std::invalid_argument("ci_hilbert: no weights");
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("ci_hilbert: weights must be positive");
    }
    HilbertFraction out;
    out.numerator = Poly{{0, Int(1)}};
    for (long d : degrees) {
        if (d <= 0) throw std::invalid_argument("ci_hilbert: degrees must be positive");
        out.numerator = poly_mul(out.numerator, one_minus_power(d));
    }
    for (long w : weights) out.denominator_orders.insert(w);
    return out;
}

}  // namespace fano
