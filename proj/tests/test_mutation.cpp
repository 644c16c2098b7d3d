#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fanocascade/catalog.hpp"
#include "fanocascade/errors.hpp"
#include "fanocascade/mutation.hpp"
#include "fanocascade/singularity.hpp"

using namespace fano;

namespace {

LatticePolygon p2() { return convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -1)}); }

bool contains(const std::vector<LatticePolygon>& list, const LatticePolygon& p) {
    return std::find(list.begin(), list.end(), p) != list.end();
}

} // namespace

TEST_CASE("the plane mutates to the weight (1, 1, 4) plane", "[mutation]") {
    // All three edge mutations give the same class, so the deduplicated
    // neighbor list is a single polygon.
    std::vector<LatticePolygon> nbrs = mutation_neighbors(p2());
    LatticePolygon p114 = convex_hull({Vec(1, 0), Vec(0, 1), Vec(-1, -4)});
    REQUIRE(nbrs.size() == 1);
    REQUIRE(nbrs[0] == normal_form(p114));
}

TEST_CASE("mutation moves enumerate edges no shorter than their height",
          "[mutation]") {
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    std::vector<MutationMove> moves = mutation_moves(sq);
    // Four edges, each of height one and length two: widths one and two.
    REQUIRE(moves.size() == 8);
    for (const MutationMove& m : moves) {
        REQUIRE(m.width >= 1);
        REQUIRE(dot(m.weight, m.factor_dir) == Int(0));
        LatticePolygon q = mutate(sq, m);
        REQUIRE(degree(q) == degree(sq));
    }
}

TEST_CASE("width zero is the identity and overlong widths are invalid",
          "[mutation]") {
    MutationMove id{Vec(0, 1), Vec(1, 0), Int(0)};
    LatticePolygon sq =
        convex_hull({Vec(1, 1), Vec(-1, 1), Vec(1, -1), Vec(-1, -1)});
    REQUIRE(mutate(sq, id) == sq);

    MutationMove overlong{Vec(0, 1), Vec(1, 0), Int(3)};
    REQUIRE_THROWS_AS(mutate(sq, overlong), InvalidMove);
}

TEST_CASE("mutation is reversible", "[mutation]") {
    for (const std::string& id : {"X:5:2", "X:6:8", "B:7"}) {
        FamilyRecord rec = family_record(id);
        LatticePolygon p = *rec.polygon;
        for (const MutationMove& m : mutation_moves(p)) {
            LatticePolygon q = mutate(p, m);
            std::vector<LatticePolygon> back = mutation_neighbors(q);
            REQUIRE(contains(back, normal_form(p)));
        }
    }
}

TEST_CASE("mutation preserves degree and singularity content", "[mutation]") {
    LatticePolygon p = *family_record("X:6:5").polygon;
    SingularityContent c = singularity_content(p);
    for (const MutationMove& m : mutation_moves(p)) {
        LatticePolygon q = mutate(p, m);
        REQUIRE(degree(q) == degree(p));
        REQUIRE(singularity_content(q) == c);
    }
}

TEST_CASE("the plane's weight vectors span an index three sublattice",
          "[mutation]") {
    // Normals of the triangle are (-1,-1), (2,-1), (-1,2) and every weight
    // vector in the class keeps x congruent to y mod 3, so the accumulated
    // lattice never grows past index three.
    FundamentalGroupResult r = fundamental_group_invariant(p2());
    REQUIRE(r.group == FiniteAbelianGroup{{Int(3)}});
    REQUIRE(r.stabilized);
}

TEST_CASE("contracted families have two torsion", "[mutation]") {
    FundamentalGroupResult r = fundamental_group_invariant(polygon_B(5));
    REQUIRE(r.group == FiniteAbelianGroup{{Int(2)}});
    REQUIRE(r.stabilized);
}

TEST_CASE("pair triangles are mutation equivalent to their normal forms",
          "[mutation]") {
    LatticePolygon flat = convex_hull({Vec(-6, -1), Vec(0, 1), Vec(6, -1)});
    REQUIRE(normal_form(polygon_pair(6, 6)) == normal_form(flat));
}
