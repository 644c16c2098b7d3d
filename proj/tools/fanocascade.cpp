#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanocascade/catalog.hpp"
#include "fanocascade/checks.hpp"
#include "fanocascade/errors.hpp"
#include "fanocascade/hilbert.hpp"
#include "fanocascade/mutation.hpp"
#include "fanocascade/polygon.hpp"
#include "fanocascade/quasismooth.hpp"
#include "fanocascade/quiver.hpp"
#include "fanocascade/roots.hpp"
#include "fanocascade/scaffolding.hpp"
#include "fanocascade/singularity.hpp"

namespace {

using Json = nlohmann::json;
using namespace fano;

Json int_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

Json vec_json(const Vec& v) { return Json::array({int_json(v.x), int_json(v.y)}); }

Json polygon_json(const LatticePolygon& p) {
    Json vertices = Json::array();
    for (const Vec& v : p.vertices) vertices.push_back(vec_json(v));
    return Json{{"vertices", vertices}};
}

Json matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Int& v : row) r.push_back(int_json(v));
        rows.push_back(r);
    }
    return rows;
}

Json ints_json(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_json(x));
    return out;
}

std::string polygon_text(const LatticePolygon& p) {
    std::string out;
    for (const Vec& v : p.vertices) {
        if (!out.empty()) out += " ";
        out += "(" + v.x.get_str() + "," + v.y.get_str() + ")";
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json data;
    try {
        in >> data;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return data;
}

Int json_int(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Int(v.get<std::string>());
    throw std::runtime_error(where + ": expected an integer");
}

/// Reads {"vertices": [[x,y],...]}; the polygon is re-canonicalized and a
/// note is printed when the input list was not already the canonical hull.
LatticePolygon read_polygon(const std::string& path) {
    Json data = read_json_file(path);
    if (!data.contains("vertices") || !data["vertices"].is_array()) {
        throw std::runtime_error(path + ": expected a top level \"vertices\" array");
    }
    std::vector<Vec> points;
    for (const Json& entry : data["vertices"]) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::runtime_error(path + ": each vertex must be a pair [x,y]");
        }
        points.emplace_back(json_int(entry[0], path), json_int(entry[1], path));
    }
    LatticePolygon p = convex_hull(points);
    if (p.vertices != points) {
        std::cerr << "note: " << path << ": input vertices were re-canonicalized" << std::endl;
    }
    return p;
}

/// Reads {"shape": [n1,...], "splitting_u": u, "struts": [{"coeffs": [...],
/// "chi": [...], "uneliminated": bool}]}.
Scaffolding read_scaffolding(const std::string& path) {
    Json data = read_json_file(path);
    Scaffolding s;
    if (!data.contains("shape") || !data["shape"].is_array()) {
        throw std::runtime_error(path + ": expected a \"shape\" array of factor dimensions");
    }
    for (const Json& d : data["shape"]) {
        s.shape.factor_dims.push_back(static_cast<int>(json_int(d, path).get_si()));
    }
    s.splitting_u = static_cast<int>(json_int(data.value("splitting_u", Json(0)), path).get_si());
    if (!data.contains("struts") || !data["struts"].is_array()) {
        throw std::runtime_error(path + ": expected a \"struts\" array");
    }
    for (const Json& entry : data["struts"]) {
        Strut strut;
        for (const Json& c : entry.value("coeffs", Json::array())) {
            strut.divisor.coeffs.push_back(json_int(c, path));
        }
        for (const Json& c : entry.value("chi", Json::array())) {
            strut.chi.push_back(json_int(c, path));
        }
        strut.uneliminated = entry.value("uneliminated", false);
        s.struts.push_back(std::move(strut));
    }
    return s;
}

std::string rat_text(const Rat& r) { return r.get_str(); }

std::string content_text(const SingularityContent& content) {
    std::string out = content.t_cone_count.get_str() + " T-cones, basket {";
    for (std::size_t i = 0; i < content.basket.size(); ++i) {
        if (i) out += ", ";
        out += "1/" + content.basket[i].index.get_str() + "(1," +
               content.basket[i].weight.get_str() + ")";
    }
    return out + "}";
}

Json content_json(const SingularityContent& content) {
    Json basket = Json::array();
    for (const QuotientSingularity& s : content.basket) {
        basket.push_back(Json{{"index", int_json(s.index)}, {"weight", int_json(s.weight)}});
    }
    return Json{{"t_cones", int_json(content.t_cone_count)}, {"basket", basket}};
}

Json git_json(const GitData& git) {
    Json eq = Json::array();
    for (const auto& row : git.equation_degrees) eq.push_back(ints_json(row));
    return Json{{"weights", matrix_json(git.weights)},
                {"labels", git.labels},
                {"omega", ints_json(git.omega)},
                {"equation_degrees", eq}};
}

void print_git(const GitData& git) {
    std::size_t cols = git.labels.size();
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        width[j] = git.labels[j].size();
        for (const auto& row : git.weights) {
            width[j] = std::max(width[j], row[j].get_str().size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string header;
    for (std::size_t j = 0; j < cols; ++j) header += (j ? " " : "") + pad(git.labels[j], width[j]);
    std::cout << header << "\n";
    for (const auto& row : git.weights) {
        std::string line;
        for (std::size_t j = 0; j < cols; ++j) {
            line += (j ? " " : "") + pad(row[j].get_str(), width[j]);
        }
        std::cout << line << "\n";
    }
    std::string omega;
    for (std::size_t i = 0; i < git.omega.size(); ++i) {
        omega += (i ? "," : "") + git.omega[i].get_str();
    }
    std::cout << "omega (" << omega << ")\n";
    std::string equations;
    for (const auto& eq : git.equation_degrees) {
        if (!equations.empty()) equations += " + ";
        std::string inner;
        for (std::size_t i = 0; i < eq.size(); ++i) inner += (i ? "," : "") + eq[i].get_str();
        equations += "O(" + inner + ")";
    }
    std::cout << "equations " << (equations.empty() ? "-" : equations) << "\n";
}

int run_catalog(long k, const std::string& family, bool list, const std::string& tables_dir,
                bool write, bool as_json) {
    if (list) {
        if (as_json) {
            std::cout << Json(all_family_ids()).dump(2) << "\n";
        } else {
            for (const std::string& id : all_family_ids()) std::cout << id << "\n";
        }
        return 0;
    }
    if (!tables_dir.empty()) {
        std::vector<TableReport> reports = regenerate_tables(tables_dir, write);
        bool all_matched = true;
        for (const TableReport& r : reports) {
            std::cout << (r.matched ? "MATCH " : "DIFFER ") << r.table << "\n";
            for (const std::string& d : r.discrepancies) std::cout << "  " << d << "\n";
            if (!r.matched) all_matched = false;
        }
        if (write) return 0;
        return all_matched ? 0 : 1;
    }
    if (!family.empty()) {
        FamilyRecord rec = family_record(family);
        if (as_json) {
            Json out{{"id", rec.id},
                     {"k", rec.k},
                     {"k2", rec.k2},
                     {"l", rec.l},
                     {"degree", rat_text(rec.degree)},
                     {"fano_index", rec.fano_index},
                     {"toric", rec.toric},
                     {"content", content_json(rec.content)},
                     {"equations", rec.equations},
                     {"notes", rec.notes}};
            out["polygon"] = rec.polygon ? polygon_json(*rec.polygon) : Json();
            out["model"] = rec.model ? git_json(*rec.model) : Json();
            if (rec.quasismooth) {
                out["quasismooth"] = *rec.quasismooth;
            } else {
                out["quasismooth"] = Json();
            }
            if (!rec.pfaffian_degree_rows.empty()) {
                Json rows = Json::array();
                for (const auto& row : rec.pfaffian_degree_rows) rows.push_back(row);
                out["pfaffian_degree_rows"] = rows;
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "id " << rec.id << "\n";
            std::cout << "degree " << rat_text(rec.degree) << "\n";
            std::cout << "fano_index " << rec.fano_index << "\n";
            std::cout << "toric " << (rec.toric ? "yes" : "no") << "\n";
            if (rec.polygon) std::cout << "polygon " << polygon_text(*rec.polygon) << "\n";
            std::cout << "content " << content_text(rec.content) << "\n";
            if (rec.model) print_git(*rec.model);
            for (const std::string& eq : rec.equations) std::cout << "equation " << eq << "\n";
            if (rec.quasismooth) {
                std::cout << "quasismooth " << (*rec.quasismooth ? "yes" : "no") << "\n";
            }
            for (const std::string& note : rec.notes) std::cout << "note " << note << "\n";
        }
        return 0;
    }
    // Cascade table for one k: same columns as the golden cascade table.
    std::cout << "family | degree | fano_index | toric\n";
    for (const std::string& id : all_family_ids()) {
        FamilyRecord rec = family_record(id);
        if (rec.k != k || rec.k2 != 0) continue;
        std::cout << rec.id << " | " << rat_text(rec.degree) << " | " << rec.fano_index << " | "
                  << (rec.toric ? "yes" : "no") << "\n";
    }
    return 0;
}

Poly poly_from_terms(const std::vector<std::pair<long, long>>& terms) {
    Poly p;
    for (const auto& [e, c] : terms) {
        p[e] += c;
        if (p[e] == 0) p.erase(e);
    }
    return p;
}

int run_hilbert(long k, long l, bool has_l, bool check_models, bool as_json) {
    if (check_models) {
        struct Row {
            std::string label;
            long m;
            bool ok;
        };
        std::vector<Row> rows;
        for (long m = 1; m <= 6; ++m) {
            long ke = 2 * m;
            long ko = 2 * m - 1;
            rows.push_back({"X(2," + std::to_string(m + 1) + ") in P(1,1,1,1," +
                                std::to_string(m) + ")",
                            m,
                            fractions_equal(cascade_hilbert(ke, ke + 2),
                                            ci_hilbert({1, 1, 1, 1, m}, {2, m + 1}))});
            rows.push_back({"X(" + std::to_string(m + 2) + ") in P(1,1,1," + std::to_string(m) +
                                ")",
                            m,
                            fractions_equal(cascade_hilbert(ke, ke + 3),
                                            ci_hilbert({1, 1, 1, m}, {m + 2}))});
            rows.push_back({"X(" + std::to_string(ke + 2) + ") in P(1,1," + std::to_string(m) +
                                "," + std::to_string(m + 1) + ")",
                            m,
                            fractions_equal(cascade_hilbert(ke, ke + 4),
                                            ci_hilbert({1, 1, m, m + 1}, {ke + 2}))});
            rows.push_back({"X(" + std::to_string(ko + 1) + "," + std::to_string(ko + 1) +
                                ") in P(1,1," + std::to_string(m) + "," + std::to_string(m) +
                                "," + std::to_string(ko) + ")",
                            m,
                            fractions_equal(cascade_hilbert(ko, ko + 4),
                                            ci_hilbert({1, 1, m, m, ko}, {ko + 1, ko + 1}))});
        }
        for (long m = 2; m <= 6; ++m) {
            long ko = 2 * m - 1;
            HilbertFraction pentagon;
            pentagon.numerator = poly_from_terms({{0, 1},
                                                  {m + 1, -2},
                                                  {ko + 1, -3},
                                                  {ko + 2, 3},
                                                  {3 * m, 2},
                                                  {2 * ko + 3, -1}});
            pentagon.denominator_orders = {1, 1, 1, m, m, ko};
            rows.push_back({"Pf(5,5) in P(1,1,1," + std::to_string(m) + "," + std::to_string(m) +
                                "," + std::to_string(ko) + ")",
                            m, fractions_equal(cascade_hilbert(ko, ko + 3), pentagon)});
            HilbertFraction hexagon;
            hexagon.numerator = poly_from_terms({{0, 1},
                                                 {2, -1},
                                                 {m + 1, -4},
                                                 {m + 2, 4},
                                                 {ko + 1, -4},
                                                 {ko + 2, 8},
                                                 {ko + 3, -4},
                                                 {3 * m, 4},
                                                 {m + 2, -4},
                                                 {2 * ko + 2, -1},
                                                 {2 * ko + 4, 1}});
            hexagon.denominator_orders = {1, 1, 1, 1, m, m, ko};
            rows.push_back({"codim 4 model in P(1,1,1,1," + std::to_string(m) + "," +
                                std::to_string(m) + "," + std::to_string(ko) + ")",
                            m, fractions_equal(cascade_hilbert(ko, ko + 2), hexagon)});
        }
        if (as_json) {
            Json out = Json::array();
            for (const Row& r : rows) {
                out.push_back(Json{{"model", r.label}, {"m", r.m}, {"pass", r.ok}});
            }
            std::cout << out.dump(2) << "\n";
        } else {
            for (const Row& r : rows) {
                std::cout << (r.ok ? "PASS " : "FAIL ") << "m=" << r.m << " " << r.label << "\n";
            }
        }
        return 0;
    }
    HilbertFraction f = has_l ? cascade_hilbert(k, l) : anticanonical_hilbert_p11k(k);
    long top = f.numerator.empty() ? 0 : f.numerator.rbegin()->first;
    std::vector<long long> dense(top + 1, 0);
    for (const auto& [e, c] : f.numerator) dense[e] = c.get_si();
    if (as_json) {
        Json orders = Json::array();
        for (long a : f.denominator_orders) orders.push_back(a);
        std::cout << Json{{"numerator", dense}, {"denominator_orders", orders}}.dump(2) << "\n";
        return 0;
    }
    std::string coeffs;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        coeffs += (i ? " " : "") + std::to_string(dense[i]);
    }
    std::cout << "numerator " << coeffs << "\n";
    std::string denominator;
    for (long a : f.denominator_orders) {
        denominator += "(1-t" + (a == 1 ? std::string() : "^" + std::to_string(a)) + ")";
    }
    std::cout << "denominator " << denominator << "\n";
    return 0;
}

int run_roots(long k, long l, bool table, bool as_json) {
    PolarizedLattice lat(k, l);
    RootSet roots = enumerate_roots(lat);
    CartanType type = classify(cartan_matrix(simple_roots(roots), lat));
    Int index = index_of_connectedness(lat);
    if (as_json) {
        Json out{{"count", roots.size()},
                 {"type", type.to_string()},
                 {"index", int_json(index)}};
        if (table) {
            Json all = Json::array();
            for (const Root& r : roots) all.push_back(ints_json(r));
            out["roots"] = all;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "count=" << roots.size() << " type=" << type.to_string()
              << " index=" << index.get_str() << "\n";
    if (table) {
        for (const Root& r : roots) {
            std::string line = "(" + r[0].get_str() + ";";
            for (std::size_t i = 1; i < r.size(); ++i) {
                line += (i > 1 ? "," : " ") + r[i].get_str();
            }
            std::cout << line << ")\n";
        }
    }
    return 0;
}

int run_quasismooth(const std::vector<long>& weights, const std::vector<long>& degrees,
                    bool as_json) {
    QuasismoothReport report;
    if (degrees.size() == 1) {
        report = is_quasismooth_hypersurface(weights, degrees[0]);
    } else if (degrees.size() == 2) {
        report = is_quasismooth_ci2(weights, degrees[0], degrees[1]);
    } else {
        throw std::invalid_argument("quasismooth: expected one or two degrees");
    }
    if (as_json) {
        std::cout << Json{{"quasismooth", report.ok},
                          {"witness", report.witness},
                          {"detail", report.detail}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (report.ok) {
        std::cout << "quasismooth\n";
    } else {
        std::string stratum;
        for (int i : report.witness) {
            if (!stratum.empty()) stratum += ",";
            stratum += "x" + std::to_string(i + 1);
        }
        std::cout << "NOT quasismooth (stratum {" << stratum << "}: " << report.detail << ")\n";
    }
    return 0;
}

int run_laurent(const std::string& polygon_path, const std::string& scaffolding_path,
                bool as_json) {
    LatticePolygon p = read_polygon(polygon_path);
    Scaffolding s = read_scaffolding(scaffolding_path);
    GitData git = laurent_invert(p, s);
    if (as_json) {
        std::cout << git_json(git).dump(2) << "\n";
    } else {
        print_git(git);
    }
    return 0;
}

int run_mutate(const std::string& polygon_path, bool as_json) {
    LatticePolygon p = read_polygon(polygon_path);
    std::vector<LatticePolygon> neighbors = mutation_neighbors(p);
    if (as_json) {
        Json out = Json::array();
        for (const LatticePolygon& q : neighbors) out.push_back(polygon_json(q));
        std::cout << Json{{"neighbors", out}}.dump(2) << "\n";
        return 0;
    }
    for (const LatticePolygon& q : neighbors) std::cout << polygon_text(q) << "\n";
    return 0;
}

int run_pi1(const std::string& polygon_path, long bound, bool as_json) {
    LatticePolygon p = read_polygon(polygon_path);
    FundamentalGroupResult result = fundamental_group_invariant(p, bound);
    if (as_json) {
        std::cout << Json{{"invariant_factors", ints_json(result.group.invariant_factors)},
                          {"stabilized", result.stabilized},
                          {"polygons_visited", result.polygons_visited}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (result.group.invariant_factors.empty()) {
        std::cout << "invariant factors: none (trivial group)\n";
    } else {
        std::string factors;
        for (const Int& d : result.group.invariant_factors) {
            if (!factors.empty()) factors += " ";
            factors += d.get_str();
        }
        std::cout << "invariant factors: " << factors << "\n";
    }
    std::cout << "stabilized: " << (result.stabilized ? "yes" : "no") << " ("
              << result.polygons_visited << " polygons visited)\n";
    return 0;
}

int run_quiver(const std::string& polygon_path, bool reduced, bool as_json) {
    LatticePolygon p = read_polygon(polygon_path);
    Quiver q = reduced ? reduced_quiver(p) : quiver(p);
    if (as_json) {
        Json nodes = Json::array();
        for (const QuiverNode& n : q.nodes) {
            nodes.push_back(Json{{"edge", n.edge},
                                 {"slot", n.slot},
                                 {"normal", vec_json(n.normal)},
                                 {"edge_height", int_json(n.edge_height)}});
        }
        std::cout << Json{{"nodes", nodes}, {"arrows", matrix_json(q.arrows)}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const QuiverNode& n = q.nodes[i];
        std::cout << "node " << i << ": edge " << n.edge << " slot " << n.slot << " normal ("
                  << n.normal.x.get_str() << "," << n.normal.y.get_str() << ")\n";
    }
    for (const auto& row : q.arrows) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) line += (j ? " " : "") + row[j].get_str();
        std::cout << line << "\n";
    }
    if (q.nodes.empty()) std::cout << "(empty quiver)\n";
    return 0;
}

int run_check_all(int criterion, bool as_json) {
    std::vector<CheckResult> results;
    if (criterion != 0) {
        results.push_back(run_criterion(criterion));
    } else {
        results = run_all_criteria();
    }
    bool all_pass = true;
    if (as_json) {
        Json out = Json::array();
        for (const CheckResult& r : results) {
            out.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!r.pass) all_pass = false;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
            if (!r.detail.empty()) {
                std::istringstream lines(r.detail);
                std::string line;
                while (std::getline(lines, line)) std::cout << "  " << line << "\n";
            }
            if (!r.pass) all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"del Pezzo cascade combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    auto* catalog_cmd = app.add_subcommand("catalog", "family records and golden tables");
    long catalog_k = 0;
    std::string catalog_family;
    bool catalog_list = false;
    std::string tables_dir;
    bool tables_write = false;
    catalog_cmd->add_option("--k", catalog_k, "print the cascade table for this k");
    catalog_cmd->add_option("--family", catalog_family, "print one family record");
    catalog_cmd->add_flag("--list", catalog_list, "list all family ids");
    catalog_cmd->add_option("--tables", tables_dir, "compare the golden tables in this directory");
    catalog_cmd->add_flag("--write", tables_write, "rewrite the golden tables");

    auto* hilbert_cmd = app.add_subcommand("hilbert", "anti-canonical Hilbert series");
    long hilbert_k = 0;
    long hilbert_l = 0;
    bool hilbert_check = false;
    auto* hilbert_k_opt = hilbert_cmd->add_option("--k", hilbert_k, "weight of the singular point");
    auto* hilbert_l_opt = hilbert_cmd->add_option("--l", hilbert_l, "number of blow ups");
    hilbert_cmd->add_flag("--check-models", hilbert_check,
                          "compare every suggested model series against the blow up series");

    auto* roots_cmd = app.add_subcommand("roots", "root system of the polarized lattice");
    long roots_k = 0;
    long roots_l = 0;
    bool roots_table = false;
    roots_cmd->add_option("--k", roots_k)->required();
    roots_cmd->add_option("--l", roots_l)->required();
    roots_cmd->add_flag("--table", roots_table, "also list the roots");

    auto* quasi_cmd = app.add_subcommand("quasismooth", "general member quasismoothness");
    std::vector<long> quasi_weights;
    std::vector<long> quasi_degrees;
    quasi_cmd->add_option("--weights", quasi_weights, "ambient weights")
        ->required()
        ->delimiter(',');
    quasi_cmd->add_option("--degrees,--degree", quasi_degrees, "equation degrees")
        ->required()
        ->delimiter(',');

    auto* laurent_cmd = app.add_subcommand("laurent-invert", "invert a scaffolding");
    std::string laurent_polygon;
    std::string laurent_scaffolding;
    laurent_cmd->add_option("--polygon", laurent_polygon, "polygon JSON file")->required();
    laurent_cmd->add_option("--scaffolding", laurent_scaffolding, "scaffolding JSON file")
        ->required();

    auto* mutate_cmd = app.add_subcommand("mutate", "one step mutations of a polygon");
    std::string mutate_polygon;
    bool mutate_list = false;
    mutate_cmd->add_option("--polygon", mutate_polygon, "polygon JSON file")->required();
    mutate_cmd->add_flag("--list", mutate_list, "list the normal forms of all neighbors");

    auto* pi1_cmd = app.add_subcommand("pi1", "fundamental group invariant of a mutation class");
    std::string pi1_polygon;
    long pi1_bound = 500;
    pi1_cmd->add_option("--polygon", pi1_polygon, "polygon JSON file")->required();
    pi1_cmd->add_option("--bound", pi1_bound, "search bound for the mutation walk");

    auto* quiver_cmd = app.add_subcommand("quiver", "quiver of a Fano polygon");
    std::string quiver_polygon;
    bool quiver_reduced = false;
    quiver_cmd->add_option("--polygon", quiver_polygon, "polygon JSON file")->required();
    quiver_cmd->add_flag("--reduced", quiver_reduced, "drop nodes on height one edges");

    auto* check_cmd = app.add_subcommand("check-all", "run the reference checks");
    int check_criterion = 0;
    check_cmd->add_option("--criterion", check_criterion, "run a single check (1..9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(catalog_cmd)) {
            if (!catalog_list && tables_dir.empty() && catalog_family.empty() && catalog_k == 0) {
                std::cerr << "catalog: one of --k, --family, --list, --tables is required"
                          << std::endl;
                return 2;
            }
            return run_catalog(catalog_k, catalog_family, catalog_list, tables_dir, tables_write,
                               as_json);
        }
        if (app.got_subcommand(hilbert_cmd)) {
            if (!hilbert_check && hilbert_k_opt->count() == 0) {
                std::cerr << "hilbert: --k is required unless --check-models is given"
                          << std::endl;
                return 2;
            }
            return run_hilbert(hilbert_k, hilbert_l, hilbert_l_opt->count() > 0, hilbert_check,
                               as_json);
        }
        if (app.got_subcommand(roots_cmd)) return run_roots(roots_k, roots_l, roots_table, as_json);
        if (app.got_subcommand(quasi_cmd)) {
            return run_quasismooth(quasi_weights, quasi_degrees, as_json);
        }
        if (app.got_subcommand(laurent_cmd)) {
            return run_laurent(laurent_polygon, laurent_scaffolding, as_json);
        }
        if (app.got_subcommand(mutate_cmd)) return run_mutate(mutate_polygon, as_json);
        if (app.got_subcommand(pi1_cmd)) return run_pi1(pi1_polygon, pi1_bound, as_json);
        if (app.got_subcommand(quiver_cmd)) return run_quiver(quiver_polygon, quiver_reduced, as_json);
        if (app.got_subcommand(check_cmd)) return run_check_all(check_criterion, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    std::cerr << "no subcommand" << std::endl;
    return 2;
}
