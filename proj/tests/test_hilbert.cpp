#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/errors.hpp"
#include "fanocascade/hilbert.hpp"

using namespace fano;

namespace {

Poly poly_from(std::initializer_list<std::pair<long, long>> terms) {
    Poly p;
    for (const auto& [e, c] : terms) {
        if (c != 0) p[e] = Int(c);
    }
    return p;
}

} // namespace

TEST_CASE("anticanonical numerators of the weighted planes", "[hilbert]") {
    HilbertFraction f1 = anticanonical_hilbert_p11k(1);
    REQUIRE(f1.numerator == poly_from({{0, 1}, {1, 7}, {2, 1}}));
    REQUIRE(f1.denominator_orders == std::multiset<long>{1, 1, 1});

    HilbertFraction f2 = anticanonical_hilbert_p11k(2);
    REQUIRE(f2.numerator == poly_from({{0, 1}, {1, 7}, {2, 7}, {3, 1}}));
    REQUIRE(f2.denominator_orders == std::multiset<long>{1, 1, 2});

    HilbertFraction f3 = anticanonical_hilbert_p11k(3);
    REQUIRE(f3.numerator == poly_from({{0, 1}, {1, 7}, {2, 9}, {3, 7}, {4, 1}}));
    REQUIRE(f3.denominator_orders == std::multiset<long>{1, 1, 3});
}

TEST_CASE("anticanonical series of the plane counts cubics", "[hilbert]") {
    // h^0(P^2, -n K) = (3n + 1)(3n + 2) / 2.
    std::vector<Int> coeffs = series_expand(anticanonical_hilbert_p11k(1), 4);
    std::vector<Int> expected = {Int(1), Int(10), Int(28), Int(55), Int(91)};
    REQUIRE(coeffs == expected);
}

TEST_CASE("each blow up subtracts a geometric block from the numerator", "[hilbert]") {
    HilbertFraction f = cascade_hilbert(3, 6);
    REQUIRE(f.numerator == poly_from({{0, 1}, {1, 1}, {2, 3}, {3, 1}, {4, 1}}));
    REQUIRE(f.denominator_orders == std::multiset<long>{1, 1, 3});

    // No blow ups at all returns the weighted plane series.
    REQUIRE(cascade_hilbert(2, 0).numerator == anticanonical_hilbert_p11k(2).numerator);

    // Eight blow ups of the plane: 1 + 7t + t^2 minus 8t.
    REQUIRE(cascade_hilbert(1, 8).numerator == poly_from({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("cascade series stops at degree zero", "[hilbert]") {
    REQUIRE_THROWS_AS(cascade_hilbert(5, 10), DegreeNonPositive);
    REQUIRE_THROWS_AS(cascade_hilbert(1, 9), DegreeNonPositive);
    REQUIRE_NOTHROW(cascade_hilbert(1, 8));
}

TEST_CASE("negative cascade numerator coefficients appear at high blow up count",
          "[hilbert]") {
    REQUIRE(poly_has_negative_coefficient(cascade_hilbert(1, 8).numerator));
    REQUIRE(cascade_hilbert(3, 8).numerator ==
            poly_from({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    REQUIRE_FALSE(poly_has_negative_coefficient(cascade_hilbert(3, 7).numerator));
    REQUIRE(poly_is_palindromic(cascade_hilbert(3, 8).numerator));
}

TEST_CASE("hypersurface series of degree six in weights (1, 1, 2, 3)", "[hilbert]") {
    HilbertFraction f = ci_hilbert({1, 1, 2, 3}, {6});
    std::vector<Int> coeffs = series_expand(f, 3);
    std::vector<Int> expected = {Int(1), Int(2), Int(4), Int(7)};
    REQUIRE(coeffs == expected);
}

TEST_CASE("fraction equality is by cross multiplication", "[hilbert]") {
    HilbertFraction f{one_minus_power(2), {1, 1, 1}};
    HilbertFraction g{poly_from({{0, 1}, {1, 1}}), {1, 1}};
    REQUIRE(fractions_equal(f, g));

    HilbertFraction h{poly_from({{0, 1}, {1, 2}}), {1, 1}};
    REQUIRE_FALSE(fractions_equal(f, h));
}

TEST_CASE("reduce cancels exact denominator factors from the top", "[hilbert]") {
    HilbertFraction f{poly_mul(one_minus_power(1), one_minus_power(2)), {1, 2, 3}};
    HilbertFraction r = reduce(f);
    REQUIRE(r.numerator == poly_from({{0, 1}}));
    REQUIRE(r.denominator_orders == std::multiset<long>{3});
}

TEST_CASE("series expansion matches the geometric sum", "[hilbert]") {
    HilbertFraction f{poly_from({{0, 1}}), {2}};
    std::vector<Int> coeffs = series_expand(f, 5);
    std::vector<Int> expected = {Int(1), Int(0), Int(1), Int(0), Int(1), Int(0)};
    REQUIRE(coeffs == expected);
}

TEST_CASE("polynomial helpers", "[hilbert]") {
    REQUIRE(poly_is_palindromic(poly_from({{0, 1}, {1, 7}, {2, 1}})));
    REQUIRE_FALSE(poly_is_palindromic(poly_from({{0, 1}, {1, 7}, {2, 2}})));
    REQUIRE(poly_has_negative_coefficient(poly_from({{0, 1}, {1, -1}})));
    REQUIRE_FALSE(poly_has_negative_coefficient(poly_from({{0, 1}, {1, 1}})));
    REQUIRE(poly_to_string(poly_from({{0, 1}, {1, 1}, {2, 3}, {3, 1}, {4, 1}})) ==
            "1 + t + 3*t^2 + t^3 + t^4");
    REQUIRE(poly_to_string(poly_from({{0, 1}, {1, -1}, {2, 1}})) == "1 - t + t^2");

    Poly quotient;
    REQUIRE(poly_divide_one_minus_power(poly_from({{0, 1}, {2, -1}}), 1, quotient));
    REQUIRE(quotient == poly_from({{0, 1}, {1, 1}}));
    REQUIRE_FALSE(poly_divide_one_minus_power(poly_from({{0, 1}, {1, 1}}), 2, quotient));
}

TEST_CASE("geometric sum and scaling", "[hilbert]") {
    REQUIRE(geometric_sum(3, 3) == poly_from({{0, 1}, {3, 1}, {6, 1}}));
    REQUIRE(poly_scale(geometric_sum(1, 2), Int(-2)) == poly_from({{0, -2}, {1, -2}}));
    REQUIRE(poly_add(one_minus_power(1), poly_from({{1, 1}})) == poly_from({{0, 1}}));
    REQUIRE(poly_sub(one_minus_power(2), one_minus_power(2)).empty());
}
