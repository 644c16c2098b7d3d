#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/catalog.hpp"
#include "fanocascade/quiver.hpp"
#include "fanocascade/singularity.hpp"

using namespace fano;

namespace {

LatticePolygon p2() { return convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)}); }

bool all_arrows_zero(const Quiver& q) {
    for (const auto& row : q.arrows) {
        for (const Int& a : row) {
            if (a != 0) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("the plane gives the three cycle with triple arrows", "[quiver]") {
    Quiver q = quiver(p2());
    REQUIRE(q.nodes.size() == 3);
    Int total(0);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Int& a = q.arrows[i][j];
            REQUIRE((a == 0 || a == 3));
            if (a != 0) {
                REQUIRE(q.arrows[j][i] == 0);
            }
            total += a;
        }
    }
    REQUIRE(total == Int(9));
}

TEST_CASE("one node per zero Milnor number cell", "[quiver]") {
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    Quiver q = quiver(sq);
    REQUIRE(q.nodes.size() == 8);
    REQUIRE(Int(q.nodes.size()) == singularity_content(sq).t_cone_count);
    REQUIRE(q.arrows.size() == q.nodes.size());
}

TEST_CASE("reduction forgets one node per height one edge", "[quiver]") {
    // Every edge of the plane triangle is a single smooth cell, so the
    // reduction empties the quiver.
    REQUIRE(reduced_quiver(p2()).nodes.empty());

    // The long rectangle has two length six edges of height one and two
    // residual side cones. Each long edge loses one smooth cell and keeps
    // five; the surviving normals are the parallel pair (0, 1), (0, -1),
    // so no arrows remain.
    LatticePolygon rect =
        convex_hull({Vec(3, 1), Vec(-3, 1), Vec(3, -1), Vec(-3, -1)});
    REQUIRE(quiver(rect).nodes.size() == 12);
    Quiver rr = reduced_quiver(rect);
    REQUIRE(rr.nodes.size() == 10);
    REQUIRE(all_arrows_zero(rr));
    for (const QuiverNode& n : rr.nodes) {
        REQUIRE(n.edge_height == 1);
        REQUIRE(n.normal.x == 0);
    }

    // The trapezoid keeps both height two cells, one of the two top cells,
    // and five of the six bottom cells.
    LatticePolygon tall =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(3, -1), Vec(-3, -1)});
    Quiver r = reduced_quiver(tall);
    REQUIRE(r.nodes.size() == 8);
    long high = 0;
    for (const QuiverNode& n : r.nodes) {
        if (n.edge_height == 2) ++high;
    }
    REQUIRE(high == 2);
}

TEST_CASE("representative search finds isolated node quivers", "[quiver]") {
    LatticePolygon p = *family_record("X:3:4").polygon;
    auto isolated_pair = [](const Quiver& q) {
        return q.nodes.size() == 2 && all_arrows_zero(q);
    };
    std::optional<LatticePolygon> rep = find_representative_with_quiver(p, isolated_pair);
    REQUIRE(rep.has_value());
    REQUIRE(isolated_pair(reduced_quiver(*rep)));
    REQUIRE(degree(*rep) == degree(p));

    auto impossible = [](const Quiver& q) { return q.nodes.size() == 99; };
    REQUIRE_FALSE(find_representative_with_quiver(p, impossible, 30).has_value());
}
