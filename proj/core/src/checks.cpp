#include "fanocascade/checks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fanocascade/catalog.hpp"
#include "fanocascade/errors.hpp"
#include "fanocascade/hilbert.hpp"
#include "fanocascade/mutation.hpp"
#include "fanocascade/polygon.hpp"
#include "fanocascade/quasismooth.hpp"
#include "fanocascade/quiver.hpp"
#include "fanocascade/roots.hpp"
#include "fanocascade/scaffolding.hpp"
#include "fanocascade/singularity.hpp"

namespace fano {

namespace {

/// Collects failures and informational notes for one check; failures first
/// in the final detail text.
struct Log {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string line) { failures.push_back(std::move(line)); }
    void note(std::string line) { notes.push_back(std::move(line)); }

    CheckResult result(std::string name) const {
        CheckResult out;
        out.name = std::move(name);
        out.pass = failures.empty();
        for (const std::string& f : failures) out.detail += "FAIL " + f + "\n";
        for (const std::string& n : notes) out.detail += n + "\n";
        if (!out.detail.empty()) out.detail.pop_back();
        return out;
    }
};

std::string kl(long k, long l) {
    return "k=" + std::to_string(k) + " l=" + std::to_string(l);
}

std::string matrix_text(const IntMat& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j) out += ",";
            out += m[i][j].get_str();
        }
    }
    return out + "]";
}

std::string ints_text(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

long expected_root_count(long k, long l) {
    if (l <= k + 1) return l * (l - 1);
    if (l == k + 2) return (k + 2) * (k + 1) + 2;
    if (l == k + 3) return (k + 4) * (k + 3);
    return 2 * (k + 4) * (k + 3);
}

std::string expected_type(long k, long l) {
    if (l <= k + 1) return "A" + std::to_string(l - 1);
    if (l == k + 2) return "A" + std::to_string(k + 1) + "xA1";
    if (l == k + 3) return "A" + std::to_string(k + 3);
    return "D" + std::to_string(k + 4);
}

CheckResult criterion_root_counts() {
    Log log;
    long checked = 0;
    for (long k = 3; k <= 10; ++k) {
        for (long l = 2; l <= k + 4; ++l) {
            long got = static_cast<long>(enumerate_roots(PolarizedLattice(k, l)).size());
            long want = expected_root_count(k, l);
            ++checked;
            if (got != want) {
                log.fail(kl(k, l) + ": " + std::to_string(got) + " roots, expected " +
                         std::to_string(want));
            }
        }
    }
    long e8 = static_cast<long>(enumerate_roots(PolarizedLattice(3, 8)).size());
    ++checked;
    if (e8 != 240) log.fail("k=3 l=8: " + std::to_string(e8) + " roots, expected 240");
    log.note(std::to_string(checked) + " root counts checked");
    return log.result("1 root counts");
}

/// Cartan matrix of the E8 diagram: branch node 0, then legs 1 | 2-3 and
/// 4-5-6-7.
IntMat e8_cartan() {
    IntMat m(8, std::vector<Int>(8, 0));
    for (int i = 0; i < 8; ++i) m[i][i] = 2;
    const int edges[7][2] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (const auto& e : edges) {
        m[e[0]][e[1]] = -1;
        m[e[1]][e[0]] = -1;
    }
    return m;
}

bool permutation_similar(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i) {
            for (std::size_t j = 0; ok && j < n; ++j) {
                if (a[perm[i]][perm[j]] != b[i][j]) ok = false;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CheckResult criterion_root_types() {
    Log log;
    for (long k = 3; k <= 10; ++k) {
        for (long l = 2; l <= k + 4; ++l) {
            PolarizedLattice lat(k, l);
            CartanType type = classify(cartan_matrix(simple_roots(enumerate_roots(lat)), lat));
            std::string want = expected_type(k, l);
            if (type.to_string() != want) {
                log.fail(kl(k, l) + ": type " + type.to_string() + ", expected " + want);
            }
        }
    }
    PolarizedLattice lat(3, 8);
    IntMat cartan = cartan_matrix(simple_roots(enumerate_roots(lat)), lat);
    CartanType type = classify(cartan);
    if (type.to_string() != "E8") log.fail("k=3 l=8: type " + type.to_string() + ", expected E8");
    if (permutation_similar(cartan, e8_cartan())) {
        log.note("the k=3 l=8 Cartan matrix is a simultaneous permutation of the E8 one");
    } else {
        log.fail("the k=3 l=8 Cartan matrix " + matrix_text(cartan) +
                 " is not a simultaneous row and column permutation of the E8 Cartan matrix");
    }
    return log.result("2 root system types");
}

CheckResult criterion_index() {
    Log log;
    long consistent = 0;
    auto computed_index = [&](long k, long l) -> std::optional<Int> {
        try {
            Int idx = index_of_connectedness(PolarizedLattice(k, l));
            ++consistent;
            return idx;
        } catch (const InternalMismatch& e) {
            log.fail(kl(k, l) + ": " + e.what());
            return std::nullopt;
        }
    };
    for (long k = 3; k <= 10; ++k) {
        for (long l = 2; l <= k + 4; ++l) {
            std::optional<Int> idx = computed_index(k, l);
            if (!idx) continue;
            if (l == k + 3 && *idx != k + 4) {
                log.fail(kl(k, l) + ": index " + idx->get_str() + ", expected " +
                         std::to_string(k + 4));
            } else if (l == k + 4 && *idx != 4) {
                log.fail(kl(k, l) + ": index " + idx->get_str() + ", expected 4");
            } else if (l == k + 2) {
                Int reference = 2 * (k + 1);
                log.note(kl(k, l) + ": computed index " + idx->get_str() +
                         ", reference value " + reference.get_str() +
                         (*idx == reference ? " (agrees)" : " (differs; logged, not asserted)"));
            }
        }
    }
    std::optional<Int> e8 = computed_index(3, 8);
    if (e8 && *e8 != 1) log.fail("k=3 l=8: index " + e8->get_str() + ", expected 1");
    log.note(std::to_string(consistent) +
             " cases with Cartan determinant equal to the Smith discriminant");
    return log.result("3 index of connectedness");
}

/// Closed form numerator of the anti-canonical series of the weight (1,1,k)
/// plane over (1-t)^2 (1-t^k): coefficient k+4 in every interior degree
/// except k+5 in the two middle ones (k even) or k+6 in the single middle
/// one (k odd).
Poly closed_p11k(long k) {
    Poly p;
    p[0] = 1;
    p[k + 1] += 1;
    if (k % 2 == 0) {
        long m = k / 2;
        for (long i = 1; i <= m - 1; ++i) p[i] += k + 4;
        p[m] += k + 5;
        p[m + 1] += k + 5;
        for (long i = m + 2; i <= k; ++i) p[i] += k + 4;
    } else {
        long m = (k + 1) / 2;
        for (long i = 1; i <= m - 1; ++i) p[i] += k + 4;
        p[m] += k + 6;
        for (long i = m + 1; i <= k; ++i) p[i] += k + 4;
    }
    return p;
}

CheckResult criterion_hilbert() {
    Log log;
    for (long k = 1; k <= 12; ++k) {
        HilbertFraction f = anticanonical_hilbert_p11k(k);
        Poly closed = closed_p11k(k);
        std::multiset<long> orders{1, 1, k};
        if (f.numerator != closed || f.denominator_orders != orders) {
            log.fail("k=" + std::to_string(k) + ": procedural numerator " +
                     poly_to_string(f.numerator) + " differs from the closed form " +
                     poly_to_string(closed));
        }
    }
    for (long m = 1; m <= 6; ++m) {
        long ke = 2 * m;
        long ko = 2 * m - 1;
        struct Identity {
            std::string label;
            HilbertFraction lhs;
            HilbertFraction rhs;
        };
        const Identity identities[] = {
            {"X(2," + std::to_string(m + 1) + ") in P(1,1,1,1," + std::to_string(m) + ")",
             cascade_hilbert(ke, ke + 2), ci_hilbert({1, 1, 1, 1, m}, {2, m + 1})},
            {"X(" + std::to_string(m + 2) + ") in P(1,1,1," + std::to_string(m) + ")",
             cascade_hilbert(ke, ke + 3), ci_hilbert({1, 1, 1, m}, {m + 2})},
            {"X(" + std::to_string(ke + 2) + ") in P(1,1," + std::to_string(m) + "," +
                 std::to_string(m + 1) + ")",
             cascade_hilbert(ke, ke + 4), ci_hilbert({1, 1, m, m + 1}, {ke + 2})},
            {"X(" + std::to_string(ko + 1) + "," + std::to_string(ko + 1) + ") in P(1,1," +
                 std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(ko) + ")",
             cascade_hilbert(ko, ko + 4), ci_hilbert({1, 1, m, m, ko}, {ko + 1, ko + 1})},
        };
        for (const Identity& id : identities) {
            if (!fractions_equal(id.lhs, id.rhs)) {
                log.fail("m=" + std::to_string(m) + ": series of " + id.label +
                         " differs from the blow up series");
            }
        }
    }
    long series = 0;
    for (long k = 1; k <= 12; ++k) {
        for (long l = 0; l * k < (k + 2) * (k + 2); ++l) {
            Poly num = cascade_hilbert(k, l).numerator;
            ++series;
            if (!poly_is_palindromic(num)) {
                log.fail(kl(k, l) + ": numerator " + poly_to_string(num) + " is not palindromic");
            }
            if (poly_has_negative_coefficient(num)) {
                log.fail(kl(k, l) + ": numerator " + poly_to_string(num) +
                         " has a negative coefficient");
            }
        }
    }
    log.note(std::to_string(series) + " cascade numerators checked over (1-t)^2 (1-t^k)");
    return log.result("4 hilbert series identities");
}

CheckResult criterion_laurent() {
    Log log;
    auto computed = [](const FamilyRecord& rec) {
        return laurent_invert(*rec.polygon, *rec.scaffolding);
    };
    for (long k = 3; k <= 8; ++k) {
        for (long l = 1; l <= k + 1; ++l) {
            FamilyRecord rec = family_record("X:" + std::to_string(k) + ":" + std::to_string(l));
            GitData got = computed(rec);
            if (got.weights != rec.model->weights || got.omega != rec.model->omega ||
                got.equation_degrees != rec.model->equation_degrees) {
                log.fail(rec.id + ": computed weight data " + matrix_text(got.weights) +
                         " omega " + ints_text(got.omega) + " is not the stored " +
                         matrix_text(rec.model->weights) + " omega " + ints_text(rec.model->omega));
            }
        }
    }
    auto expect_equivalent = [&](const std::string& id) {
        FamilyRecord rec = family_record(id);
        GitData got = computed(rec);
        if (!git_equivalent(got, *rec.model)) {
            log.fail(id + ": computed weight data " + matrix_text(got.weights) +
                     " is not equivalent to the stored " + matrix_text(rec.model->weights));
        }
    };
    for (long m = 2; m <= 5; ++m) {
        long k = 2 * m - 1;
        expect_equivalent("X:" + std::to_string(k) + ":" + std::to_string(k + 2));
        expect_equivalent("X:" + std::to_string(k) + ":" + std::to_string(k + 3));
        expect_equivalent("X:" + std::to_string(k) + ":" + std::to_string(k + 4));
    }
    for (long k = 4; k <= 10; k += 2) {
        expect_equivalent("X:" + std::to_string(k) + ":" + std::to_string(k + 3));
        expect_equivalent("X:" + std::to_string(k) + ":" + std::to_string(k + 4));
    }
    expect_equivalent("pair:6:6");
    LatticePolygon rectangle = convex_hull({{3, 1}, {3, -1}, {-3, 1}, {-3, -1}});
    GitData rect = laurent_invert(rectangle, anti_canonical_scaffolding(rectangle, Shape{{1, 1}}));
    GitData stored;
    stored.weights = {{1, 1, 1, 3, 3}};
    stored.labels = {"x1", "x2", "x3", "y1", "y2"};
    stored.omega = {1};
    stored.equation_degrees = {{2}, {6}};
    if (!git_equivalent(rect, stored)) {
        log.fail("rectangle model: computed weight data " + matrix_text(rect.weights) +
                 " is not equivalent to (1,1,1,3,3)");
    }
    log.note("fibration weight matrices reproduced verbatim for k=3..8, l=1..k+1");
    return log.result("5 laurent inversion models");
}

CheckResult criterion_quasismooth() {
    Log log;
    auto expect = [&](const std::string& label, const QuasismoothReport& report, bool want) {
        if (report.ok == want) return;
        std::string line = label + ": computed " +
                           std::string(report.ok ? "quasismooth" : "not quasismooth") +
                           ", expected " + std::string(want ? "quasismooth" : "not quasismooth");
        if (!report.detail.empty()) line += " (" + report.detail + ")";
        log.fail(line);
    };
    for (long m = 2; m <= 6; ++m) {
        long k = 2 * m - 1;
        expect("X(" + std::to_string(k + 1) + "," + std::to_string(k + 1) + ") in P(1,1," +
                   std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(k) + ")",
               is_quasismooth_ci2({1, 1, m, m, k}, k + 1, k + 1), true);
    }
    for (long m = 2; m <= 6; ++m) {
        long k = 2 * m;
        expect("X(" + std::to_string(k + 2) + ") in P(1,1," + std::to_string(m) + "," +
                   std::to_string(m + 1) + ")",
               is_quasismooth_hypersurface({1, 1, m, m + 1}, k + 2), false);
    }
    expect("X(12) in P(1,1,6,6)", is_quasismooth_hypersurface({1, 1, 6, 6}, 12), true);
    expect("X(2,6) in P(1,1,1,3,3)", is_quasismooth_ci2({1, 1, 1, 3, 3}, 2, 6), true);
    const long pair_weights[4][2] = {{3, 5}, {3, 6}, {5, 5}, {5, 6}};
    for (const auto& w : pair_weights) {
        expect("X(" + std::to_string(w[0] + w[1]) + ") in P(1,1," + std::to_string(w[0]) + "," +
                   std::to_string(w[1]) + ")",
               is_quasismooth_hypersurface({1, 1, w[0], w[1]}, w[0] + w[1]), true);
    }
    return log.result("6 quasismoothness verdicts");
}

CheckResult criterion_catalog() {
    Log log;
    long polygons = 0;
    for (const std::string& id : all_family_ids()) {
        FamilyRecord rec = family_record(id);
        if (!rec.polygon) {
            log.note(id + ": no polygon stored, skipped");
            continue;
        }
        ++polygons;
        if (!is_fano(*rec.polygon)) {
            log.fail(id + ": stored polygon is not Fano");
            continue;
        }
        Rat expected_degree = rec.degree;
        if (rec.k2 == 0 && rec.id[0] == 'X') {
            Rat formula((rec.k - rec.l + 4) * rec.k + 4);
            formula /= rec.k;
            if (expected_degree != formula) {
                log.fail(id + ": stored degree does not match the blow up formula");
            }
        }
        if (degree(*rec.polygon) != expected_degree) {
            log.fail(id + ": polygon degree " + degree(*rec.polygon).get_str() +
                     " differs from the family degree " + expected_degree.get_str());
        }
        std::vector<QuotientSingularity> want;
        want.push_back(make_singularity(Int(rec.k), Int(1), Int(1)));
        if (rec.k2 != 0) want.push_back(make_singularity(Int(rec.k2), Int(1), Int(1)));
        std::sort(want.begin(), want.end());
        SingularityContent content = singularity_content(*rec.polygon);
        if (content.basket != want) {
            std::string got = "{";
            for (std::size_t i = 0; i < content.basket.size(); ++i) {
                if (i) got += ", ";
                got += "1/" + content.basket[i].index.get_str() + "(1," +
                       content.basket[i].weight.get_str() + ")";
            }
            got += "}";
            log.fail(id + ": residual basket " + got + ", expected one 1/" +
                     std::to_string(rec.k) + "(1,1)" +
                     (rec.k2 != 0 ? " and one 1/" + std::to_string(rec.k2) + "(1,1)" : ""));
        }
    }
    for (long k = 4; k <= 10; ++k) {
        long families = 0;
        for (const std::string& id : all_family_ids()) {
            FamilyRecord rec = family_record(id);
            if (rec.k == k && rec.k2 == 0) ++families;
        }
        if (cascade_size(k) != k + 6) {
            log.fail("k=" + std::to_string(k) + ": cascade size " +
                     std::to_string(cascade_size(k)) + ", expected " + std::to_string(k + 6));
        }
        if (families != k + 6) {
            log.fail("k=" + std::to_string(k) + ": " + std::to_string(families) +
                     " catalog families, expected " + std::to_string(k + 6));
        }
    }
    log.note(std::to_string(polygons) + " catalog polygons checked");
    return log.result("7 catalog polygon invariants");
}

bool quiver_is_isolated(const Quiver& q, long nodes) {
    if (static_cast<long>(q.nodes.size()) != nodes) return false;
    for (const auto& row : q.arrows) {
        for (const Int& a : row) {
            if (a != 0) return false;
        }
    }
    return true;
}

CheckResult criterion_mutation() {
    Log log;
    LatticePolygon start = convex_hull({{-1, 1}, {1, 1}, {5, -1}, {-5, -1}});
    std::vector<LatticePolygon> neighbors = mutation_neighbors(start);
    LatticePolygon triangle = normal_form(convex_hull({{-6, -1}, {0, 1}, {6, -1}}));
    LatticePolygon rectangle = normal_form(convex_hull({{3, 1}, {3, -1}, {-3, 1}, {-3, -1}}));
    if (std::find(neighbors.begin(), neighbors.end(), triangle) == neighbors.end()) {
        log.fail("the triangle representative is not a one step mutation of the seed polygon");
    }
    if (std::find(neighbors.begin(), neighbors.end(), rectangle) == neighbors.end()) {
        log.fail("the rectangle representative is not a one step mutation of the seed polygon");
    }
    for (long k : {3, 5, 6, 7}) {
        FundamentalGroupResult x = fundamental_group_invariant(polygon_X(k, k));
        if (!x.stabilized) {
            log.fail("X:" + std::to_string(k) + ":" + std::to_string(k) +
                     ": group walk did not stabilize");
        } else if (!x.group.invariant_factors.empty()) {
            log.fail("X:" + std::to_string(k) + ":" + std::to_string(k) +
                     ": nontrivial group invariant");
        }
        FundamentalGroupResult b = fundamental_group_invariant(polygon_B(k));
        if (!b.stabilized) {
            log.fail("B:" + std::to_string(k) + ": group walk did not stabilize");
        } else if (b.group.invariant_factors != std::vector<Int>{2}) {
            log.fail("B:" + std::to_string(k) + ": group invariant is not Z/2");
        }
    }
    LatticePolygon plane = convex_hull({{1, 0}, {0, 1}, {-1, -1}});
    Quiver q = quiver(plane);
    bool triple_cycle = q.nodes.size() == 3;
    if (triple_cycle) {
        for (std::size_t i = 0; triple_cycle && i < 3; ++i) {
            Int out_arrows = 0;
            Int in_arrows = 0;
            for (std::size_t j = 0; j < 3; ++j) {
                if (q.arrows[i][j] != 0 && q.arrows[i][j] != 3) triple_cycle = false;
                out_arrows += q.arrows[i][j];
                in_arrows += q.arrows[j][i];
            }
            if (out_arrows != 3 || in_arrows != 3) triple_cycle = false;
        }
    }
    if (!triple_cycle) {
        log.fail("the quiver of the plane triangle is not a three cycle of triple arrows");
    }
    if (!reduced_quiver(plane).nodes.empty()) {
        log.fail("the reduced quiver of the plane triangle is not empty");
    }
    for (long k : {3, 5}) {
        for (long l = 2; l <= k + 1; ++l) {
            long want = l - 2;
            auto found = find_representative_with_quiver(
                polygon_X(k, l), [&](const Quiver& r) { return quiver_is_isolated(r, want); });
            if (!found) {
                log.fail(kl(k, l) + ": no representative with " + std::to_string(want) +
                         " isolated reduced nodes within the default bound");
            }
        }
        const long targets[3][2] = {{k + 2, k + 1}, {k + 3, k + 3}, {k + 4, k + 5}};
        for (const auto& t : targets) {
            long want = t[1];
            auto found = find_representative_with_quiver(
                polygon_X(k, t[0]), [&](const Quiver& r) {
                    return static_cast<long>(r.nodes.size()) == want;
                });
            if (!found) {
                log.fail(kl(k, t[0]) + ": no representative with " + std::to_string(want) +
                         " reduced nodes within the default bound");
            }
        }
    }
    return log.result("8 mutation and quiver structures");
}

long rand_in(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Scaffolding random_scaffolding(std::mt19937& rng) {
    Scaffolding s;
    switch (rand_in(rng, 0, 2)) {
        case 0:
            s.shape = Shape{{1}};
            s.splitting_u = 1;
            break;
        case 1:
            s.shape = Shape{{2}};
            s.splitting_u = 0;
            break;
        default:
            s.shape = Shape{{1, 1}};
            s.splitting_u = 0;
            break;
    }
    int rays = s.shape.ray_count();
    if (s.splitting_u == 1) {
        Strut point;
        point.divisor.coeffs.assign(rays, Int(0));
        point.chi = {Int(1)};
        point.uneliminated = true;
        s.struts.push_back(point);
    }
    long eliminated = rand_in(rng, s.splitting_u == 1 ? 1 : 2, 3);
    for (long i = 0; i < eliminated; ++i) {
        Strut strut;
        for (int r = 0; r < rays; ++r) strut.divisor.coeffs.emplace_back(rand_in(rng, 0, 3));
        if (s.splitting_u == 1) strut.chi = {Int(rand_in(rng, -3, 3))};
        s.struts.push_back(strut);
    }
    return s;
}

CheckResult criterion_properties() {
    Log log;
    long moves_checked = 0;
    for (const std::string& id : all_family_ids()) {
        FamilyRecord rec = family_record(id);
        if (!rec.polygon) continue;
        const LatticePolygon& p = *rec.polygon;
        Rat deg = degree(p);
        SingularityContent content = singularity_content(p);
        for (const MutationMove& move : mutation_moves(p)) {
            LatticePolygon q = mutate(p, move);
            ++moves_checked;
            if (degree(q) != deg) {
                log.fail(id + ": a mutation changed the degree");
            } else if (singularity_content(q) != content) {
                log.fail(id + ": a mutation changed the singularity content");
            }
        }
        RationalPolygon twice = dual_polygon(dual_polygon(p));
        RationalPolygon original;
        original.vertices.assign(p.vertices.begin(), p.vertices.end());
        if (twice != original) log.fail(id + ": dual of the dual differs from the polygon");
    }
    log.note(std::to_string(moves_checked) + " mutations checked for invariance");

    auto roots_closed = [&](long k, long l) {
        PolarizedLattice lat(k, l);
        RootSet roots = enumerate_roots(lat);
        for (const Root& x : roots) {
            Root neg(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
            if (!roots.count(neg)) return false;
        }
        for (const Root& x : roots) {
            for (const Root& m : roots) {
                Int scale = lat.pairing(x, m);
                Root image(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) image[i] = x[i] + scale * m[i];
                if (!roots.count(image)) return false;
            }
        }
        return true;
    };
    for (long k = 3; k <= 10; ++k) {
        for (long l = 2; l <= k + 4; ++l) {
            if (!roots_closed(k, l)) {
                log.fail(kl(k, l) + ": root set is not closed under negation and reflections");
            }
        }
    }
    if (!roots_closed(3, 8)) {
        log.fail("k=3 l=8: root set is not closed under negation and reflections");
    }
    log.note("root sets closed under negation and reflections on the whole grid");

    std::mt19937 rng(20260813u);
    long built = 0;
    long attempts = 0;
    while (built < 200 && attempts < 40000) {
        ++attempts;
        Scaffolding s = random_scaffolding(rng);
        LatticePolygon p;
        try {
            std::vector<Vec> points;
            for (std::size_t i = 0; i < s.struts.size(); ++i) {
                for (const Vec& v : strut_vertices(s, i)) points.push_back(v);
            }
            p = convex_hull(points);
        } catch (const DegenerateInput&) {
            continue;
        }
        if (!validate_scaffolding(p, s).ok) continue;
        ++built;
        GitData g;
        try {
            g = laurent_invert(p, s);
        } catch (const std::exception& e) {
            log.fail("random scaffolding " + std::to_string(built) + ": inversion failed: " +
                     e.what());
            continue;
        }
        std::size_t r = 0;
        for (const Strut& strut : s.struts) {
            if (!strut.uneliminated) ++r;
        }
        std::size_t cols = r + static_cast<std::size_t>(s.splitting_u) +
                           static_cast<std::size_t>(s.shape.ray_count());
        bool ok = g.weights.size() == r && g.omega.size() == r && g.labels.size() == cols;
        for (std::size_t i = 0; ok && i < r; ++i) {
            if (g.weights[i].size() != cols) ok = false;
            for (std::size_t j = 0; ok && j < r; ++j) {
                if (g.weights[i][j] != (i == j ? 1 : 0)) ok = false;
            }
            if (!ok) break;
            Int head = 0;
            for (std::size_t j = 0; j < r + static_cast<std::size_t>(s.splitting_u); ++j) {
                head += g.weights[i][j];
            }
            if (head != g.omega[i]) ok = false;
            Int total = 0;
            for (std::size_t j = 0; j < cols; ++j) total += g.weights[i][j];
            Int equations = 0;
            for (const auto& eq : g.equation_degrees) equations += eq[i];
            if (total - equations != g.omega[i]) ok = false;
        }
        if (ok && g.equation_degrees.size() != s.shape.factor_dims.size()) ok = false;
        if (ok && !git_equivalent(g, g)) ok = false;
        if (!ok) {
            log.fail("random scaffolding " + std::to_string(built) +
                     ": weight data invariants violated for " + matrix_text(g.weights));
        }
    }
    if (built < 200) {
        log.fail("only " + std::to_string(built) +
                 " of 200 random scaffoldings validated within the attempt budget");
    } else {
        log.note("200 random scaffoldings validated and inverted (" + std::to_string(attempts) +
                 " attempts)");
    }
    return log.result("9 property suites");
}

}  // namespace

CheckResult run_criterion(int number) {
    switch (number) {
        case 1: return criterion_root_counts();
        case 2: return criterion_root_types();
        case 3: return criterion_index();
        case 4: return criterion_hilbert();
        case 5: return criterion_laurent();
        case 6: return criterion_quasismooth();
        case 7: return criterion_catalog();
        case 8: return criterion_mutation();
        case 9: return criterion_properties();
        default: break;
    }
    throw OutOfRange("run_criterion: checks are numbered 1 through 9");
}

std::vector<CheckResult> run_all_criteria() {
    std::vector<CheckResult> out;
    for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i));
    return out;
}

}  // namespace fano
