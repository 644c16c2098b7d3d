#include <catch2/catch_amalgamated.hpp>

#include "fanocascade/errors.hpp"
#include "fanocascade/roots.hpp"

using namespace fano;

TEST_CASE("root counts for the k = 3 column", "[roots]") {
    const long expected[] = {2, 6, 12, 22, 42, 84, 240};
    for (long l = 2; l <= 8; ++l) {
        PolarizedLattice lat(3, l);
        REQUIRE(enumerate_roots(lat).size() == static_cast<std::size_t>(expected[l - 2]));
    }
}

TEST_CASE("roots satisfy the defining equations", "[roots]") {
    PolarizedLattice lat(4, 6);
    RootSet roots = enumerate_roots(lat);
    REQUIRE(!roots.empty());
    for (const Root& r : roots) {
        REQUIRE(lat.pairing(r, r) == Int(-2));
        Int tail_sum(0);
        for (std::size_t i = 1; i < r.size(); ++i) tail_sum += r[i];
        REQUIRE(tail_sum == Int(-(4 + 2)) * r[0]);
    }
}

TEST_CASE("root enumeration requires a negative definite complement", "[roots]") {
    REQUIRE_THROWS_AS(enumerate_roots(PolarizedLattice(3, 9)), DegenerateLattice);
    REQUIRE_NOTHROW(enumerate_roots(PolarizedLattice(3, 8)));
}

TEST_CASE("classification of the small root systems", "[roots]") {
    PolarizedLattice a1(5, 2);
    RootSet r1 = enumerate_roots(a1);
    REQUIRE(classify(cartan_matrix(simple_roots(r1), a1)) == make_cartan_type("A1"));

    PolarizedLattice mixed(3, 5);
    RootSet r2 = enumerate_roots(mixed);
    REQUIRE(classify(cartan_matrix(simple_roots(r2), mixed)) == make_cartan_type("A4xA1"));

    PolarizedLattice e8(3, 8);
    RootSet r3 = enumerate_roots(e8);
    REQUIRE(r3.size() == 240);
    std::vector<Root> simple = simple_roots(r3);
    REQUIRE(simple.size() == 8);
    REQUIRE(classify(cartan_matrix(simple, e8)) == make_cartan_type("E8"));
}

TEST_CASE("simple root count equals the rank of the root span", "[roots]") {
    PolarizedLattice lat(6, 8);
    RootSet roots = enumerate_roots(lat);
    std::vector<Root> simple = simple_roots(roots);
    REQUIRE(simple.size() == 8);
    REQUIRE(positive_roots(roots).size() * 2 == roots.size());
}

TEST_CASE("cartan type formatting and parsing round trip", "[roots]") {
    CartanType t = make_cartan_type("D7xA2xA1");
    REQUIRE(t.to_string() == "D7xA2xA1");
    REQUIRE(make_cartan_type(t.to_string()) == t);
    REQUIRE(make_cartan_type("trivial").factors.empty());
    REQUIRE(make_cartan_type("trivial").to_string() == "trivial");
}

TEST_CASE("classify rejects a cyclic diagram", "[roots]") {
    IntMat cyc = {
        {Int(2), Int(-1), Int(-1)},
        {Int(-1), Int(2), Int(-1)},
        {Int(-1), Int(-1), Int(2)},
    };
    REQUIRE_THROWS_AS(classify(cyc), UnrecognizedDiagram);
}

TEST_CASE("index of connectedness cross checks", "[roots]") {
    // A_{l-1} systems: determinant l.
    REQUIRE(index_of_connectedness(PolarizedLattice(5, 4)) == Int(4));
    // l = k + 3: determinant k + 4.
    REQUIRE(index_of_connectedness(PolarizedLattice(3, 6)) == Int(7));
    REQUIRE(index_of_connectedness(PolarizedLattice(6, 9)) == Int(10));
    // l = k + 4: determinant 4.
    REQUIRE(index_of_connectedness(PolarizedLattice(3, 7)) == Int(4));
    // E8 is unimodular.
    REQUIRE(index_of_connectedness(PolarizedLattice(3, 8)) == Int(1));
    // l = k + 2: determinant 2 (k + 2).
    REQUIRE(index_of_connectedness(PolarizedLattice(3, 5)) == Int(10));
}

TEST_CASE("orbit tables regenerate the full root sets", "[roots]") {
    for (long k = 3; k <= 6; ++k) {
        for (long l = 2; l <= k + 4; ++l) {
            INFO("k = " << k << ", l = " << l);
            REQUIRE(verify_orbit_table(k, l));
        }
    }
    REQUIRE(verify_orbit_table(3, 8));
}

TEST_CASE("root sets are symmetric under negation", "[roots]") {
    PolarizedLattice lat(7, 9);
    RootSet roots = enumerate_roots(lat);
    for (const Root& r : roots) {
        Root neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        REQUIRE(roots.count(neg) == 1);
    }
}
