#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fanocascade/catalog.hpp"
#include "fanocascade/errors.hpp"

using namespace fano;

TEST_CASE("the id list covers every family once", "[catalog]") {
    std::vector<std::string> ids = all_family_ids();
    REQUIRE(ids.size() == 106);
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    REQUIRE(std::count(ids.begin(), ids.end(), "X:3:8") == 1);
    for (const std::string& id : ids) {
        REQUIRE_NOTHROW(family_record(id));
    }
    REQUIRE_THROWS_AS(family_record("X:11:0"), UnknownId);
    REQUIRE_THROWS_AS(family_record("nonsense"), UnknownId);
}

TEST_CASE("weighted plane records", "[catalog]") {
    FamilyRecord rec = family_record("X:5:0");
    REQUIRE(rec.degree == Rat(49) / 5);
    REQUIRE(rec.fano_index == 7);
    REQUIRE(rec.toric);
    REQUIRE(rec.polygon.has_value());
    REQUIRE(rec.model.has_value());
    REQUIRE(rec.model->weights == IntMat{{Int(1), Int(1), Int(5)}});
    REQUIRE(rec.equations.empty());
}

TEST_CASE("scroll blow up records", "[catalog]") {
    FamilyRecord rec = family_record("X:5:7");
    REQUIRE(rec.degree == Rat(14) / 5);
    REQUIRE(rec.fano_index == 1);
    REQUIRE_FALSE(rec.toric);
    REQUIRE(rec.model->weights.size() == 2);
    REQUIRE(rec.scaffolding.has_value());

    FamilyRecord early = family_record("X:5:2");
    REQUIRE(early.toric);
    REQUIRE(early.equations == std::vector<std::string>{"y1*y2^2 - x2*x3"});
}

TEST_CASE("degrees follow the blow up formula", "[catalog]") {
    for (const std::string& id : all_family_ids()) {
        FamilyRecord rec = family_record(id);
        if (rec.id[0] != 'X') continue;
        Rat expected((rec.k - rec.l + 4) * rec.k + 4);
        expected /= rec.k;
        REQUIRE(rec.degree == expected);
    }
}

TEST_CASE("contraction records", "[catalog]") {
    FamilyRecord rec = family_record("B:5");
    REQUIRE(rec.degree == Rat(24) / 5);
    REQUIRE(rec.fano_index == 2);
    REQUIRE(rec.model->weights == IntMat{{Int(1), Int(1), Int(1), Int(5)}});
    REQUIRE(rec.equations == std::vector<std::string>{"x1^6 - x3*y"});
    REQUIRE(rec.quasismooth.has_value());
    REQUIRE(*rec.quasismooth);
}

TEST_CASE("pair records", "[catalog]") {
    FamilyRecord rec = family_record("pair:6:6");
    REQUIRE(rec.k == 6);
    REQUIRE(rec.k2 == 6);
    REQUIRE(rec.degree == Rat(4) / 3);
    REQUIRE(rec.content.basket.size() == 2);
    REQUIRE(*rec.quasismooth);
}

TEST_CASE("the extra degree one third family has no polygon", "[catalog]") {
    FamilyRecord rec = family_record("X:3:8");
    REQUIRE_FALSE(rec.polygon.has_value());
    REQUIRE(rec.degree == Rat(1) / 3);
    REQUIRE(rec.model->weights == IntMat{{Int(1), Int(2), Int(3), Int(5)}});
    bool noted = false;
    for (const std::string& n : rec.notes) {
        noted = noted || n.find("no toric degeneration") != std::string::npos;
    }
    REQUIRE(noted);
    REQUIRE_THROWS_AS(polygon_X(3, 8), OutOfRange);
}

TEST_CASE("codimension notes on the odd rank two models", "[catalog]") {
    FamilyRecord rec = family_record("X:3:5");
    bool noted = false;
    for (const std::string& n : rec.notes) {
        noted = noted || n.find("codimension four") != std::string::npos;
    }
    REQUIRE(noted);

    FamilyRecord pf = family_record("X:5:8");
    REQUIRE(pf.pfaffian_degree_rows ==
            std::vector<std::vector<long>>{{1, 1, 3, 3}, {1, 3, 3}, {3, 3}, {5}});
}

TEST_CASE("index four records keep an empty computed basket", "[catalog]") {
    for (const std::string& id : {"X:4:3", "X:4:8", "B:4"}) {
        FamilyRecord rec = family_record(id);
        REQUIRE(rec.content.basket.empty());
        bool noted = false;
        for (const std::string& n : rec.notes) {
            noted = noted || n.find("admits a smoothing") != std::string::npos;
        }
        REQUIRE(noted);
    }
}

TEST_CASE("cascade sizes are uniform from index four on", "[catalog]") {
    for (long k = 4; k <= 10; ++k) {
        REQUIRE(cascade_size(k) == k + 6);
        long counted = 0;
        for (const std::string& id : all_family_ids()) {
            FamilyRecord rec = family_record(id);
            if (rec.k == k && rec.k2 == 0) ++counted;
        }
        REQUIRE(counted == k + 6);
    }
    REQUIRE_THROWS_AS(cascade_size(3), OutOfRange);
}

TEST_CASE("polygon builders respect their parameter ranges", "[catalog]") {
    REQUIRE(polygon_X(5, 0).vertices.size() == 3);
    REQUIRE(polygon_X(5, 3).vertices.size() == 4);
    REQUIRE_THROWS_AS(polygon_X(5, 10), OutOfRange);
    REQUIRE(polygon_B(5) == convex_hull({Vec(1, 0), Vec(-1, -1), Vec(-1, 5)}));
    REQUIRE(polygon_pair(3, 5) == convex_hull({Vec(1, 0), Vec(-1, -3), Vec(-1, 5)}));
}

TEST_CASE("reference tables match their golden files", "[catalog]") {
    std::vector<TableReport> reports = regenerate_tables(FANOCASCADE_GOLDEN_DIR);
    REQUIRE(!reports.empty());
    for (const TableReport& r : reports) {
        INFO(r.table);
        REQUIRE(r.matched);
        if (r.table == "hilbert_models.txt" || r.table == "index_table.txt") {
            REQUIRE(!r.discrepancies.empty());
        } else {
            REQUIRE(r.discrepancies.empty());
        }
    }
}
