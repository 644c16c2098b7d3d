#include "fanocascade/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fanocascade/errors.hpp"
#include "fanocascade/hilbert.hpp"
#include "fanocascade/quasismooth.hpp"
#include "fanocascade/roots.hpp"

namespace fano {

namespace {

Vec vec(long x, long y) { return Vec{Int(x), Int(y)}; }

/// Exact n/d with the fraction brought to lowest terms.
Rat make_rat(long n, long d) {
    Rat value{Int(n)};
    value /= Int(d);
    return value;
}

std::string power(const std::string& base, long e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

/// Scaffolding on the shape P^1 whose struts are a point at (1, 0), the unit
/// vertical segment through the origin column, and the vertical segment from
/// (-1, k - l) to (-1, k). Its hull is polygon_X(k, l) for l <= k + 1.
Scaffolding scroll_scaffolding(long k, long l) {
    Scaffolding s;
    s.shape.factor_dims = {1};
    s.splitting_u = 1;
    Strut point;
    point.uneliminated = true;
    point.chi = {Int(1)};
    point.divisor.coeffs = {Int(0), Int(0)};
    Strut fibre;
    fibre.chi = {Int(0)};
    fibre.divisor.coeffs = {Int(1), Int(0)};
    Strut section;
    section.chi = {Int(-1)};
    section.divisor.coeffs = {Int(l - k), Int(k)};
    s.struts = {point, fibre, section};
    return s;
}

/// Scaffolding on P^1 with the point strut at (1, 0) and one eliminated strut
/// spanning the segment from (-1, -below) to (-1, above).
Scaffolding segment_scaffolding(long below, long above) {
    Scaffolding s;
    s.shape.factor_dims = {1};
    s.splitting_u = 1;
    Strut point;
    point.uneliminated = true;
    point.chi = {Int(1)};
    point.divisor.coeffs = {Int(0), Int(0)};
    Strut segment;
    segment.chi = {Int(-1)};
    segment.divisor.coeffs = {Int(below), Int(above)};
    s.struts = {point, segment};
    return s;
}

/// Two eliminated struts on P^1 x P^1 with nothing uneliminated; each
/// coefficient list reads (left, right, down, up).
Scaffolding two_strut_scaffolding(const std::vector<long>& c1, const std::vector<long>& c2) {
    Scaffolding s;
    s.shape.factor_dims = {1, 1};
    s.splitting_u = 0;
    Strut a;
    Strut b;
    for (long c : c1) a.divisor.coeffs.push_back(Int(c));
    for (long c : c2) b.divisor.coeffs.push_back(Int(c));
    s.struts = {a, b};
    return s;
}

GitData make_git(const std::vector<std::vector<long>>& rows, std::vector<std::string> labels,
                 const std::vector<long>& omega, const std::vector<std::vector<long>>& eq) {
    GitData g;
    for (const auto& row : rows) {
        std::vector<Int> converted;
        for (long entry : row) converted.push_back(Int(entry));
        g.weights.push_back(std::move(converted));
    }
    g.labels = std::move(labels);
    for (long entry : omega) g.omega.push_back(Int(entry));
    for (const auto& degrees : eq) {
        std::vector<Int> converted;
        for (long entry : degrees) converted.push_back(Int(entry));
        g.equation_degrees.push_back(std::move(converted));
    }
    return g;
}

void annotate_hypersurface(FamilyRecord& rec, const std::vector<long>& weights, long d) {
    QuasismoothReport report = is_quasismooth_hypersurface(weights, d);
    rec.quasismooth = report.ok;
    if (!report.ok) {
        rec.notes.push_back("general member of the stored model is not quasismooth: " +
                            report.detail);
    }
}

void annotate_ci2(FamilyRecord& rec, const std::vector<long>& weights, long d1, long d2) {
    try {
        QuasismoothReport report = is_quasismooth_ci2(weights, d1, d2);
        rec.quasismooth = report.ok;
        if (!report.ok) {
            rec.notes.push_back("general member of the stored model is not quasismooth: " +
                                report.detail);
        }
    } catch (const LinearCone& e) {
        rec.notes.push_back(std::string("quasismoothness left undecided: ") + e.what());
    }
}

FamilyRecord build_X38() {
    FamilyRecord rec;
    rec.id = "X:3:8";
    rec.k = 3;
    rec.l = 8;
    rec.degree = make_rat(1, 3);
    rec.fano_index = 1;
    rec.toric = false;
    rec.content.t_cone_count = 10;
    rec.content.basket = {QuotientSingularity{Int(3), Int(1)}};
    rec.model = make_git({{1, 2, 3, 5}}, {"x1", "x2", "x3", "x4"}, {1}, {{10}});
    annotate_hypersurface(rec, {1, 2, 3, 5}, 10);
    rec.notes.push_back("no toric degeneration is recorded for this family");
    return rec;
}

FamilyRecord build_X(long k, long l) {
    FamilyRecord rec;
    rec.id = "X:" + std::to_string(k) + ":" + std::to_string(l);
    rec.k = k;
    rec.l = l;
    rec.degree = make_rat((k - l + 4) * k + 4, k);
    rec.fano_index = (l == 0) ? k + 2 : 1;
    rec.toric = (l <= 2);
    rec.polygon = polygon_X(k, l);
    rec.content = singularity_content(*rec.polygon);

    // Closed forms below use m = k/2 for even k and m = (k+1)/2 for odd k.
    long m = (k % 2 == 0) ? k / 2 : (k + 1) / 2;

    if (l == 0) {
        rec.model = make_git({{1, 1, k}}, {"x1", "x2", "y"}, {1}, {});
    } else if (l <= k + 1) {
        rec.scaffolding = scroll_scaffolding(k, l);
        rec.model = make_git({{1, 0, 0, 1, 0}, {0, 1, 1, l - k, k}},
                             {"y1", "y2", "x1", "x2", "x3"}, {1, 2}, {{1, l}});
        rec.equations = {"y1*" + power("y2", l) + " - x2*x3"};
    } else if (l == k + 2) {
        if (k % 2 == 0) {
            rec.scaffolding = anti_canonical_scaffolding(*rec.polygon, Shape{{1, 1}});
            rec.model = make_git({{1, 1, 1, 1, m}}, {"x1", "x2", "x3", "x4", "y"}, {1},
                                 {{2}, {m + 1}});
            rec.equations = {"x2*x3 - x1^2", "x4*y - " + power("x1", m + 1)};
            annotate_ci2(rec, {1, 1, 1, 1, m}, 2, m + 1);
            if (k == 4) {
                rec.notes.push_back(
                    "the degree two equation eliminates the weight two variable, leaving a "
                    "cubic surface");
            }
        } else {
            rec.scaffolding = two_strut_scaffolding({1, m - 1, 0, m}, {0, m, 1, m - 1});
            rec.model = make_git({{1, 1, 0, 0, m - 1, m}, {0, 0, 1, 1, m, m - 1}},
                                 {"x1", "x2", "y1", "y2", "z1", "z2"}, {1, 1},
                                 {{m, m}, {m, m}});
            rec.equations = {power("x1", m) + "*" + power("y1", m) + " - x2*z1",
                             power("x1", m) + "*" + power("y1", m) + " - y2*z2"};
            if (k == 3) {
                rec.notes.push_back(
                    "the general member also embeds in codimension four; the stored rank two "
                    "model has codimension two");
            }
        }
    } else if (l == k + 3) {
        if (k % 2 == 0) {
            rec.scaffolding = anti_canonical_scaffolding(*rec.polygon, Shape{{2}});
            rec.model = make_git({{1, 1, 1, m}}, {"x1", "x2", "x3", "y"}, {1}, {{m + 2}});
            rec.equations = {"x2*x3*y - " + power("x1", m + 2)};
            annotate_hypersurface(rec, {1, 1, 1, m}, m + 2);
        } else {
            rec.scaffolding = two_strut_scaffolding({1, m - 1, 0, m}, {1, m, 1, m - 1});
            rec.model = make_git({{1, 1, 0, 1, m - 1, m}, {0, 0, 1, 1, m, m - 1}},
                                 {"x1", "x2", "y1", "y2", "z1", "z2"}, {1, 1},
                                 {{m, m}, {m + 1, m}});
            rec.equations = {power("x1", m) + "*" + power("y1", m) + " - x2*z1",
                             power("x1", m + 1) + "*" + power("y1", m) + " - y2*z2"};
            rec.pfaffian_degree_rows = {{1, 1, m, m}, {1, m, m}, {m, m}, {k}};
            rec.notes.push_back(
                "a five by five antisymmetric matrix with the stored degree rows presents the "
                "general member in codimension three");
        }
    } else {
        if (k % 2 == 0) {
            rec.scaffolding = anti_canonical_scaffolding(*rec.polygon, Shape{{2}});
            rec.model = make_git({{1, 1, m, m + 1}}, {"x1", "x2", "y", "z"}, {1}, {{k + 2}});
            rec.equations = {"x2*y*z - " + power("x1", k + 2)};
            annotate_hypersurface(rec, {1, 1, m, m + 1}, k + 2);
        } else {
            rec.scaffolding = anti_canonical_scaffolding(*rec.polygon, Shape{{1, 1}});
            rec.model = make_git({{1, 1, m, m, k}}, {"x1", "x2", "y1", "y2", "z"}, {1},
                                 {{k + 1}, {k + 1}});
            rec.equations = {"x2*z - " + power("x1", k + 1), "y1*y2 - " + power("x1", k + 1)};
            annotate_ci2(rec, {1, 1, m, m, k}, k + 1, k + 1);
        }
    }
    if (k == 4) {
        rec.notes.push_back(
            "1/4(1,1) admits a smoothing, so the basket of the degeneration is empty");
    }
    return rec;
}

FamilyRecord build_B(long k) {
    FamilyRecord rec;
    rec.id = "B:" + std::to_string(k);
    rec.k = k;
    rec.degree = make_rat(4 * k + 4, k);
    rec.fano_index = 2;
    rec.toric = false;
    rec.polygon = polygon_B(k);
    rec.content = singularity_content(*rec.polygon);
    rec.scaffolding = segment_scaffolding(1, k);
    rec.model = make_git({{1, 1, 1, k}}, {"x1", "x2", "x3", "y"}, {2}, {{k + 1}});
    rec.equations = {power("x1", k + 1) + " - x3*y"};
    annotate_hypersurface(rec, {1, 1, 1, k}, k + 1);
    if (k == 4) {
        rec.notes.push_back(
            "1/4(1,1) admits a smoothing, so the basket of the degeneration is empty");
    }
    return rec;
}

FamilyRecord build_pair(long k1, long k2) {
    FamilyRecord rec;
    rec.id = "pair:" + std::to_string(k1) + ":" + std::to_string(k2);
    rec.k = k1;
    rec.k2 = k2;
    rec.degree = make_rat(4 * (k1 + k2), k1 * k2);
    rec.fano_index = 2;
    rec.toric = false;
    rec.polygon = polygon_pair(k1, k2);
    rec.content = singularity_content(*rec.polygon);
    rec.scaffolding = segment_scaffolding(k1, k2);
    rec.model = make_git({{1, k1, k2, 1}}, {"x1", "y1", "y2", "x2"}, {2}, {{k1 + k2}});
    rec.equations = {"y1*y2 - " + power("x1", k1) + "*" + power("x2", k2)};
    annotate_hypersurface(rec, {1, 1, k1, k2}, k1 + k2);
    return rec;
}

const std::vector<std::pair<long, long>>& pair_parameters() {
    static const std::vector<std::pair<long, long>> pairs = {
        {3, 5}, {3, 6}, {5, 5}, {5, 6}, {6, 6}};
    return pairs;
}

bool parse_long(const std::string& text, long& out) {
    if (text.empty()) return false;
    std::size_t consumed = 0;
    try {
        out = std::stol(text, &consumed);
    } catch (const std::exception&) {
        return false;
    }
    return consumed == text.size();
}

std::vector<std::string> split_id(const std::string& id) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : id) {
        if (c == ':') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::string int_str(const Int& n) { return n.get_str(); }

std::string content_str(const SingularityContent& content) {
    std::string out = int_str(content.t_cone_count) + " T-cones, basket {";
    bool first = true;
    for (const auto& s : content.basket) {
        if (!first) out += ", ";
        first = false;
        out += "1/" + int_str(s.index) + "(1," + int_str(s.weight) + ")";
    }
    out += "}";
    return out;
}

std::string matrix_str(const IntMat& mat) {
    std::string out = "[";
    for (std::size_t i = 0; i < mat.size(); ++i) {
        if (i > 0) out += ";";
        for (std::size_t j = 0; j < mat[i].size(); ++j) {
            if (j > 0) out += ",";
            out += int_str(mat[i][j]);
        }
    }
    out += "]";
    return out;
}

std::string tuple_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += int_str(v[i]);
    }
    out += ")";
    return out;
}

std::string equations_str(const std::vector<std::vector<Int>>& eq) {
    std::string out;
    for (std::size_t i = 0; i < eq.size(); ++i) {
        if (i > 0) out += " + ";
        out += "O" + tuple_str(eq[i]);
    }
    return out.empty() ? "-" : out;
}

std::string model_verdict(const GitData& computed, const GitData& stored) {
    if (computed.weights == stored.weights && computed.omega == stored.omega) return "VERBATIM";
    if (git_equivalent(computed, stored)) return "GIT_EQUIV";
    return "MISMATCH";
}

using TableBody = std::pair<std::string, std::vector<std::string>>;

TableBody build_cascade_table() {
    std::ostringstream out;
    out << "family | degree | fano_index | toric\n";
    std::vector<std::string> ids;
    for (long l = 0; l <= 9; ++l) ids.push_back("X:5:" + std::to_string(l));
    ids.push_back("B:5");
    for (const auto& id : ids) {
        FamilyRecord rec = family_record(id);
        out << rec.id << " | " << rec.degree.get_str() << " | " << rec.fano_index << " | "
            << (rec.toric ? "yes" : "no") << "\n";
    }
    return {out.str(), {}};
}

HilbertFraction stored_fraction(const std::vector<std::pair<long, long>>& terms,
                                const std::multiset<long>& orders) {
    Poly numerator;
    for (const auto& [exponent, coefficient] : terms) {
        numerator[exponent] += Int(coefficient);
        if (numerator[exponent] == 0) numerator.erase(exponent);
    }
    return HilbertFraction{numerator, orders};
}

TableBody build_hilbert_table() {
    std::ostringstream out;
    std::vector<std::string> discrepancies;
    out << "model | m | k | l | verdict\n";
    auto emit = [&](const std::string& name, long m, long k, long l, bool matched) {
        std::ostringstream row;
        row << name << " | " << m << " | " << k << " | " << l << " | "
            << (matched ? "MATCH" : "MISMATCH");
        out << row.str() << "\n";
        if (!matched) discrepancies.push_back(row.str());
    };
    for (long m = 1; m <= 6; ++m) {
        long k = 2 * m;
        emit("X(2,m+1) in P(1,1,1,1,m)", m, k, k + 2,
             fractions_equal(cascade_hilbert(k, k + 2),
                             ci_hilbert({1, 1, 1, 1, m}, {2, m + 1})));
        emit("X(m+2) in P(1,1,1,m)", m, k, k + 3,
             fractions_equal(cascade_hilbert(k, k + 3), ci_hilbert({1, 1, 1, m}, {m + 2})));
        emit("X(k+2) in P(1,1,m,m+1)", m, k, k + 4,
             fractions_equal(cascade_hilbert(k, k + 4),
                             ci_hilbert({1, 1, m, m + 1}, {k + 2})));
    }
    for (long m = 1; m <= 6; ++m) {
        long k = 2 * m - 1;
        emit("X(k+1,k+1) in P(1,1,m,m,k)", m, k, k + 4,
             fractions_equal(cascade_hilbert(k, k + 4),
                             ci_hilbert({1, 1, m, m, k}, {k + 1, k + 1})));
        HilbertFraction pentagon = stored_fraction(
            {{0, 1}, {m + 1, -2}, {k + 1, -3}, {k + 2, 3}, {3 * m, 2}, {2 * k + 3, -1}},
            {1, 1, 1, m, m, k});
        emit("rank two numerator, l=k+3", m, k, k + 3,
             fractions_equal(cascade_hilbert(k, k + 3), pentagon));
        HilbertFraction hexagon = stored_fraction(
            {{0, 1},
             {2, -1},
             {m + 1, -4},
             {m + 2, 4},
             {k + 1, -4},
             {k + 2, 8},
             {k + 3, -4},
             {3 * m, 4},
             {m + 2, -4},
             {2 * k + 2, -1},
             {2 * k + 4, 1}},
            {1, 1, 1, 1, m, m, k});
        emit("rank two numerator, l=k+2", m, k, k + 2,
             fractions_equal(cascade_hilbert(k, k + 2), hexagon));
    }
    return {out.str(), discrepancies};
}

TableBody build_weight_table() {
    std::ostringstream out;
    std::vector<std::string> discrepancies;
    out << "family | computed | omega | stored | stored_omega | verdict\n";
    auto emit = [&](const std::string& id, const GitData& computed, const GitData& stored) {
        std::string verdict = model_verdict(computed, stored);
        std::ostringstream row;
        row << id << " | " << matrix_str(computed.weights) << " | " << tuple_str(computed.omega)
            << " | " << matrix_str(stored.weights) << " | " << tuple_str(stored.omega) << " | "
            << verdict;
        out << row.str() << "\n";
        if (verdict == "MISMATCH") discrepancies.push_back(row.str());
    };
    for (const auto& id : all_family_ids()) {
        FamilyRecord rec = family_record(id);
        if (!rec.polygon || !rec.scaffolding || !rec.model) continue;
        emit(rec.id, laurent_invert(*rec.polygon, *rec.scaffolding), *rec.model);
    }
    LatticePolygon rectangle =
        convex_hull({vec(3, 1), vec(3, -1), vec(-3, 1), vec(-3, -1)});
    GitData rectangle_stored = make_git({{1, 1, 1, 3, 3}}, {"x1", "x2", "x3", "y1", "y2"}, {1},
                                        {{2}, {6}});
    emit("pair:6:6#rectangle",
         laurent_invert(rectangle, anti_canonical_scaffolding(rectangle, Shape{{1, 1}})),
         rectangle_stored);
    return {out.str(), discrepancies};
}

TableBody build_roots_table() {
    std::ostringstream out;
    out << "k | l | roots | type | index\n";
    auto emit = [&](long k, long l) {
        PolarizedLattice lattice(k, l);
        RootSet roots = enumerate_roots(lattice);
        CartanType type = classify(cartan_matrix(simple_roots(roots), lattice));
        out << k << " | " << l << " | " << roots.size() << " | " << type.to_string() << " | "
            << int_str(index_of_connectedness(lattice)) << "\n";
    };
    for (long k = 3; k <= 10; ++k) {
        for (long l = 2; l <= k + 4; ++l) emit(k, l);
    }
    emit(3, 8);
    return {out.str(), {}};
}

TableBody build_index_table() {
    std::ostringstream out;
    std::vector<std::string> discrepancies;
    out << "k | l | computed | stored | verdict\n";
    auto emit = [&](long k, long l, long stored) {
        Int computed = index_of_connectedness(PolarizedLattice(k, l));
        bool matched = (computed == stored);
        std::ostringstream row;
        row << k << " | " << l << " | " << int_str(computed) << " | " << stored << " | "
            << (matched ? "MATCH" : "MISMATCH");
        out << row.str() << "\n";
        if (!matched) discrepancies.push_back(row.str());
    };
    for (long k = 3; k <= 10; ++k) {
        emit(k, k + 2, 2 * (k + 1));
        emit(k, k + 3, k + 4);
        emit(k, k + 4, 4);
    }
    emit(3, 8, 1);
    return {out.str(), discrepancies};
}

TableBody build_quiver_table() {
    std::ostringstream out;
    out << "k | l | reduced_nodes | components\n";
    for (long k = 3; k <= 10; ++k) {
        for (long l = 0; l <= k + 4; ++l) {
            long nodes = 0;
            long components = 0;
            if (l <= 1) {
                nodes = 0;
                components = (l == 0) ? 3 : 4;
            } else if (l <= k + 1) {
                nodes = l - 2;
                components = 5;
            } else if (l == k + 2) {
                nodes = k + 1;
                components = 4;
            } else if (l == k + 3) {
                nodes = k + 3;
                components = 3;
            } else {
                nodes = k + 5;
                components = 2;
            }
            out << k << " | " << l << " | " << nodes << " | " << components << "\n";
        }
    }
    return {out.str(), {}};
}

TableBody build_pair_table() {
    std::ostringstream out;
    out << "family | degree | content | weights | equations | quasismooth\n";
    for (const auto& [k1, k2] : pair_parameters()) {
        FamilyRecord rec = family_record("pair:" + std::to_string(k1) + ":" +
                                         std::to_string(k2));
        out << rec.id << " | " << rec.degree.get_str() << " | " << content_str(rec.content)
            << " | " << matrix_str(rec.model->weights) << " | "
            << equations_str(rec.model->equation_degrees) << " | "
            << (rec.quasismooth ? (*rec.quasismooth ? "yes" : "no") : "-") << "\n";
    }
    return {out.str(), {}};
}

}  // namespace

LatticePolygon polygon_X(long k, long l) {
    if (k < 1) throw OutOfRange("polygon_X requires k >= 1");
    if (l < 0 || l > k + 4) {
        throw OutOfRange("no recorded polygon for k = " + std::to_string(k) +
                         ", l = " + std::to_string(l));
    }
    if (l <= k + 1) {
        return convex_hull({vec(1, 0), vec(0, -1), vec(-1, k - l), vec(-1, k)});
    }
    if (k % 2 == 0) {
        long m = k / 2;
        if (l == k + 2) {
            return convex_hull({vec(-1, -1), vec(1, -1), vec(-1, m), vec(1, m)});
        }
        if (l == k + 3) {
            return convex_hull({vec(-1, -1), vec(m + 1, -1), vec(-1, m + 1)});
        }
        return convex_hull({vec(-1, -m), vec(2 * m + 1, -m), vec(-1, m + 2)});
    }
    long m = (k + 1) / 2;
    if (l == k + 2) {
        return convex_hull({vec(0, -1), vec(m, -1), vec(m, m - 1), vec(m - 1, m), vec(-1, m),
                            vec(-1, 0)});
    }
    if (l == k + 3) {
        return convex_hull({vec(-1, -1), vec(m, -1), vec(m, m - 1), vec(m - 1, m), vec(-1, m)});
    }
    return convex_hull({vec(-1, -m), vec(2 * m - 1, -m), vec(2 * m - 1, m), vec(-1, m)});
}

LatticePolygon polygon_B(long k) {
    if (k < 1) throw OutOfRange("polygon_B requires k >= 1");
    return convex_hull({vec(1, 0), vec(-1, -1), vec(-1, k)});
}

LatticePolygon polygon_pair(long k1, long k2) {
    if (k1 < 1 || k2 < 1) throw OutOfRange("polygon_pair requires positive indices");
    return convex_hull({vec(1, 0), vec(-1, -k1), vec(-1, k2)});
}

long cascade_size(long k) {
    if (k <= 3) throw OutOfRange("the cascade size is uniform only for k >= 4");
    return k + 6;
}

FamilyRecord family_record(const std::string& id) {
    std::vector<std::string> parts = split_id(id);
    long a = 0;
    long b = 0;
    if (parts.size() == 3 && parts[0] == "X" && parse_long(parts[1], a) &&
        parse_long(parts[2], b)) {
        if (a == 3 && b == 8) return build_X38();
        if (a >= 3 && a <= 10 && b >= 0 && b <= a + 4) return build_X(a, b);
    } else if (parts.size() == 2 && parts[0] == "B" && parse_long(parts[1], a)) {
        if (a >= 3 && a <= 10) return build_B(a);
    } else if (parts.size() == 3 && parts[0] == "pair" && parse_long(parts[1], a) &&
               parse_long(parts[2], b)) {
        for (const auto& [k1, k2] : pair_parameters()) {
            if (a == k1 && b == k2) return build_pair(a, b);
        }
    }
    throw UnknownId("unknown family id: " + id);
}

std::vector<std::string> all_family_ids() {
    std::vector<std::string> ids;
    for (long k = 3; k <= 10; ++k) {
        for (long l = 0; l <= k + 4; ++l) {
            ids.push_back("X:" + std::to_string(k) + ":" + std::to_string(l));
        }
        if (k == 3) ids.push_back("X:3:8");
    }
    for (long k = 3; k <= 10; ++k) ids.push_back("B:" + std::to_string(k));
    for (const auto& [k1, k2] : pair_parameters()) {
        ids.push_back("pair:" + std::to_string(k1) + ":" + std::to_string(k2));
    }
    return ids;
}

std::vector<TableReport> regenerate_tables(const std::string& golden_dir, bool write) {
    std::vector<std::pair<std::string, TableBody>> tables;
    tables.emplace_back("cascade_k5.txt", build_cascade_table());
    tables.emplace_back("hilbert_models.txt", build_hilbert_table());
    tables.emplace_back("weight_matrices.txt", build_weight_table());
    tables.emplace_back("roots_table.txt", build_roots_table());
    tables.emplace_back("index_table.txt", build_index_table());
    tables.emplace_back("quiver_table.txt", build_quiver_table());
    tables.emplace_back("pair_models.txt", build_pair_table());

    std::vector<TableReport> reports;
    for (auto& [name, body] : tables) {
        TableReport report;
        report.table = name;
        report.text = body.first;
        report.discrepancies = body.second;
        std::filesystem::path path = std::filesystem::path(golden_dir) / name;
        if (write) {
            std::filesystem::create_directories(golden_dir);
            std::ofstream file(path, std::ios::binary);
            file << report.text;
        }
        std::ifstream file(path, std::ios::binary);
        if (file) {
            std::ostringstream buffer;
            buffer << file.rdbuf();
            report.matched = (buffer.str() == report.text);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace fano
