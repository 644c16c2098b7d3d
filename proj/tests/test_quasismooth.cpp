#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/errors.hpp"
#include "fanocascade/quasismooth.hpp"

using namespace fano;

TEST_CASE("monomial existence in weighted variables", "[quasismooth]") {
    REQUIRE(has_monomial({1, 1, 2}, 5));
    REQUIRE(has_monomial({2, 3}, 12));
    REQUIRE_FALSE(has_monomial({2, 4}, 7));
    REQUIRE_FALSE(has_monomial({3}, 5));
    REQUIRE(has_monomial({3}, 0));
    REQUIRE_FALSE(has_monomial({3}, -2));
}

TEST_CASE("smooth plane curves and surfaces are quasismooth", "[quasismooth]") {
    REQUIRE(is_quasismooth_hypersurface({1, 1, 1}, 3).ok);
    REQUIRE(is_quasismooth_hypersurface({1, 1, 1, 1}, 4).ok);
}

TEST_CASE("degree six in weights (1, 1, 2, 3) is quasismooth", "[quasismooth]") {
    // z^3 and w^2 cover the singular coordinate points.
    QuasismoothReport r = is_quasismooth_hypersurface({1, 1, 2, 3}, 6);
    REQUIRE(r.ok);
    REQUIRE(r.witness.empty());
}

TEST_CASE("degree eight in weights (1, 1, 3, 4) fails at the weight three point",
          "[quasismooth]") {
    QuasismoothReport r = is_quasismooth_hypersurface({1, 1, 3, 4}, 8);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witness == std::vector<int>{2});
}

TEST_CASE("pair family hypersurfaces are quasismooth", "[quasismooth]") {
    REQUIRE(is_quasismooth_hypersurface({1, 1, 3, 5}, 8).ok);
    REQUIRE(is_quasismooth_hypersurface({1, 1, 3, 6}, 9).ok);
    REQUIRE(is_quasismooth_hypersurface({1, 1, 5, 5}, 10).ok);
    REQUIRE(is_quasismooth_hypersurface({1, 1, 5, 6}, 11).ok);
    REQUIRE(is_quasismooth_hypersurface({1, 1, 6, 6}, 12).ok);
}

TEST_CASE("hypersurfaces of degree 2m + 2 in weights (1, 1, m, m + 1)",
          "[quasismooth]") {
    // The m = 2 member is the quasismooth sextic in (1, 1, 2, 3); from m = 3
    // on the weight m point is a genuine obstruction.
    REQUIRE(is_quasismooth_hypersurface({1, 1, 2, 3}, 6).ok);
    for (long m = 3; m <= 6; ++m) {
        QuasismoothReport r = is_quasismooth_hypersurface({1, 1, m, m + 1}, 2 * m + 2);
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.witness == std::vector<int>{2});
    }
}

TEST_CASE("codimension two intersections in weights (1, 1, m, m, 2m - 1)",
          "[quasismooth]") {
    for (long m = 2; m <= 6; ++m) {
        long k = 2 * m - 1;
        REQUIRE(is_quasismooth_ci2({1, 1, m, m, k}, k + 1, k + 1).ok);
    }
}

TEST_CASE("the (2, 6) intersection in weights (1, 1, 1, 3, 3) is not quasismooth",
          "[quasismooth]") {
    // The quadric contains no weight three variable, so the Jacobian drops
    // rank along the weight three stratum.
    QuasismoothReport r = is_quasismooth_ci2({1, 1, 1, 3, 3}, 2, 6);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.witness == std::vector<int>{3, 4});
}

TEST_CASE("linear cones are flagged rather than analyzed", "[quasismooth]") {
    REQUIRE_THROWS_AS(is_quasismooth_ci2({1, 1, 1, 1, 2}, 2, 3), LinearCone);
    QuasismoothReport r = is_quasismooth_hypersurface({1, 1, 2}, 2);
    REQUIRE(r.ok);
    REQUIRE(r.detail.find("linear cone") != std::string::npos);
}

TEST_CASE("input validation", "[quasismooth]") {
    REQUIRE_THROWS_AS(is_quasismooth_hypersurface({1}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(is_quasismooth_hypersurface({1, 0, 2}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(is_quasismooth_hypersurface({1, 1, 2}, -1), std::invalid_argument);
}
