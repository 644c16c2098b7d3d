#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/errors.hpp"
#include "fanocascade/polygon.hpp"

using namespace fano;

TEST_CASE("convex hull canonicalizes vertex order", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(0, 1), Vec(1, 0), Vec(-1, -1), Vec(0, 0)});
    std::vector<Vec> expected = {Vec(-1, -1), Vec(1, 0), Vec(0, 1)};
    REQUIRE(p.vertices == expected);
}

TEST_CASE("convex hull drops points interior to an edge", "[polygon]") {
    LatticePolygon p =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1), Vec(0, 1)});
    std::vector<Vec> expected = {Vec(-1, -1), Vec(1, -1), Vec(1, 1), Vec(-1, 1)};
    REQUIRE(p.vertices == expected);
}

TEST_CASE("convex hull rejects degenerate input", "[polygon]") {
    REQUIRE_THROWS_AS(convex_hull({Vec(0, 0), Vec(1, 1), Vec(2, 2)}), DegenerateInput);
    REQUIRE_THROWS_AS(convex_hull({Vec(3, -1)}), DegenerateInput);
}

TEST_CASE("dual of the anticanonical triangle of the plane", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    RationalPolygon d = dual_polygon(p);
    std::vector<QVec> expected = {QVec(-1, -1), QVec(2, -1), QVec(-1, 2)};
    REQUIRE(d.vertices == expected);
}

TEST_CASE("dual of the dual recovers the polygon", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    RationalPolygon dd = dual_polygon(dual_polygon(p));
    REQUIRE(dd.vertices.size() == p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        REQUIRE(dd.vertices[i] == QVec(p.vertices[i]));
    }
}

TEST_CASE("dual polygon requires the origin strictly inside", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(0, 1), Vec(1, 0), Vec(1, 1)});
    REQUIRE_THROWS_AS(dual_polygon(p), OriginNotInterior);
}

TEST_CASE("degree is twice the area of the dual", "[polygon]") {
    LatticePolygon p2 = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    REQUIRE(degree(p2) == Rat(9));

    // Weighted plane with weights (1, 1, 3): degree (3 + 2)^2 / 3.
    LatticePolygon p113 = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -3)});
    REQUIRE(degree(p113) == Rat(25) / 3);
}

TEST_CASE("normalized area and boundary points of the unit square", "[polygon]") {
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    REQUIRE(normalized_area(sq) == Rat(8));
    REQUIRE(boundary_lattice_points(sq) == Int(8));
    // The dual is the diamond with vertices (+-1, 0), (0, +-1).
    REQUIRE(degree(sq) == Rat(4));
}

TEST_CASE("fano test rejects non-primitive vertices and boundary origin", "[polygon]") {
    LatticePolygon good = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    REQUIRE(is_fano(good));

    LatticePolygon coarse = convex_hull({Vec(2, 0), Vec(0, 1), Vec(-1, -1)});
    REQUIRE_FALSE(is_fano(coarse));

    LatticePolygon diamond =
        convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(0, -1)});
    REQUIRE(is_fano(diamond));

    LatticePolygon touching = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, 0)});
    REQUIRE_FALSE(is_fano(touching));

    LatticePolygon outside = convex_hull({Vec(1, 1), Vec(2, 1), Vec(1, 2)});
    REQUIRE_FALSE(is_fano(outside));
}

TEST_CASE("edge data walks the boundary counterclockwise", "[polygon]") {
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    std::vector<EdgeData> edges = edge_data(sq);
    REQUIRE(edges.size() == 4);
    REQUIRE(edges[0].a == Vec(-1, -1));
    REQUIRE(edges[0].b == Vec(1, -1));
    REQUIRE(edges[0].direction == Vec(1, 0));
    REQUIRE(edges[0].normal == Vec(0, 1));
    for (const EdgeData& e : edges) {
        REQUIRE(e.height == Int(1));
        REQUIRE(e.length == Int(2));
        REQUIRE(e.b - e.a == e.length * e.direction);
        REQUIRE(dot(e.normal, e.a) == -e.height);
    }
}

TEST_CASE("edge data needs the origin strictly inside", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(0, 1), Vec(1, 0), Vec(1, 1)});
    REQUIRE_THROWS_AS(edge_data(p), OriginNotInterior);
    REQUIRE_FALSE(origin_strictly_interior(p));
}

TEST_CASE("normal form is invariant under unimodular maps", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -4)});
    LatticePolygon sheared = apply_linear(p, Int(1), Int(1), Int(0), Int(1));
    LatticePolygon flipped = apply_linear(p, Int(0), Int(1), Int(1), Int(0));
    REQUIRE(normal_form(sheared) == normal_form(p));
    REQUIRE(normal_form(flipped) == normal_form(p));
    REQUIRE(normal_form(p) == normal_form(normal_form(p)));
}

TEST_CASE("apply_linear rejects singular maps", "[polygon]") {
    LatticePolygon p = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    REQUIRE_THROWS_AS(apply_linear(p, Int(1), Int(1), Int(1), Int(1)),
                      DegenerateInput);
}

TEST_CASE("polygons order lexicographically by vertex list", "[polygon]") {
    LatticePolygon a = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)});
    LatticePolygon b = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -2)});
    REQUIRE(a != b);
    REQUIRE((a < b || b < a));
}
