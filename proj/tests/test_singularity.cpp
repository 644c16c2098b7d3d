#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/catalog.hpp"
#include "fanocascade/errors.hpp"
#include "fanocascade/singularity.hpp"

using namespace fano;

TEST_CASE("make_singularity normalizes the weight pair", "[singularity]") {
    // 1/5 (2, 3) = 1/5 (1, 4) after scaling by the inverse of 2.
    QuotientSingularity s = make_singularity(Int(5), Int(2), Int(3));
    REQUIRE(s.index == Int(5));
    REQUIRE(s.weight == Int(4));

    // 1/6 (5, 5) = 1/6 (1, 1).
    QuotientSingularity t = make_singularity(Int(6), Int(5), Int(5));
    REQUIRE(t == make_singularity(Int(6), Int(1), Int(1)));

    // The weight is the smaller of c and its inverse mod the index.
    QuotientSingularity u = make_singularity(Int(7), Int(1), Int(5));
    REQUIRE(u.weight == Int(3));
}

TEST_CASE("make_singularity rejects weights sharing a factor with the index",
          "[singularity]") {
    REQUIRE_THROWS_AS(make_singularity(Int(4), Int(2), Int(1)), std::invalid_argument);
}

TEST_CASE("classification of cyclic quotient singularities", "[singularity]") {
    REQUIRE(classify_singularity({Int(1), Int(0)}).type == SingularityType::Smooth);

    // 1/4 (1, 1): s = 2, k = 2, r = 2, r | k.
    SingularityClass c4 = classify_singularity(make_singularity(Int(4), Int(1), Int(1)));
    REQUIRE(c4.type == SingularityType::T);
    REQUIRE(c4.k == Int(2));
    REQUIRE(c4.r == Int(2));

    // 1/6 (1, 5) is the A_5 du Val point, a degenerate T-singularity.
    REQUIRE(classify_singularity(make_singularity(Int(6), Int(1), Int(5))).type ==
            SingularityType::T);

    // 1/9 (1, 2): s = 3, k = 3, r = 3.
    REQUIRE(classify_singularity(make_singularity(Int(9), Int(1), Int(2))).type ==
            SingularityType::T);

    // 1/k (1, 1) is rigid for every k >= 3.
    for (long k = 3; k <= 10; ++k) {
        if (k == 4) continue;
        SingularityClass ck = classify_singularity(make_singularity(Int(k), Int(1), Int(1)));
        REQUIRE(ck.type == SingularityType::R);
    }
}

TEST_CASE("cone_singularity reads off the quotient data", "[singularity]") {
    REQUIRE(cone_singularity(Vec(1, 0), Vec(0, 1)) ==
            QuotientSingularity{Int(1), Int(0)});
    REQUIRE(cone_singularity(Vec(0, 1), Vec(5, -1)) ==
            make_singularity(Int(5), Int(1), Int(1)));
    // Rays are primitivized first.
    REQUIRE(cone_singularity(Vec(0, 2), Vec(5, -1)) ==
            cone_singularity(Vec(0, 1), Vec(5, -1)));
    REQUIRE_THROWS_AS(cone_singularity(Vec(1, 1), Vec(2, 2)), DependentRays);
}

TEST_CASE("edge decomposition splits long edges into unit cells", "[singularity]") {
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    EdgeDecomposition d = decompose_edges(sq);
    REQUIRE(d.t_cones.size() == 8);
    REQUIRE(d.residual_cones.empty());
}

TEST_CASE("singularity content of simple model polygons", "[singularity]") {
    LatticePolygon p2 = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    SingularityContent smooth = singularity_content(p2);
    REQUIRE(smooth.t_cone_count == Int(3));
    REQUIRE(smooth.basket.empty());

    SingularityContent b5 = singularity_content(polygon_B(5));
    REQUIRE(b5.t_cone_count == Int(7));
    REQUIRE(b5.basket == std::vector<QuotientSingularity>{make_singularity(Int(5), Int(1), Int(1))});
}

TEST_CASE("index four cones join the T-count, not the basket", "[singularity]") {
    // 1/4 (1, 1) admits a zero-Milnor-number smoothing, so the residual
    // basket of this triangle is empty.
    SingularityContent c = singularity_content(polygon_B(4));
    REQUIRE(c.basket.empty());
}

TEST_CASE("content of the degree twelve box with two sixth-index points",
          "[singularity]") {
    LatticePolygon p =
        convex_hull({Vec(-1, 1), Vec(1, 1), Vec(5, -1), Vec(-5, -1)});
    SingularityContent c = singularity_content(p);
    REQUIRE(c.t_cone_count == Int(12));
    std::vector<QuotientSingularity> expected = {
        make_singularity(Int(6), Int(1), Int(1)),
        make_singularity(Int(6), Int(1), Int(1)),
    };
    REQUIRE(c.basket == expected);
}

TEST_CASE("singularity content rejects non-Fano polygons", "[singularity]") {
    LatticePolygon coarse = convex_hull({Vec(2, 0), Vec(0, 1), Vec(-1, -1)});
    REQUIRE_THROWS_AS(singularity_content(coarse), NotFano);
}
