#include "fanocascade/roots.hpp"

#include <algorithm>
#include <map>

#include "fanocascade/errors.hpp"

namespace fano {

PolarizedLattice::PolarizedLattice(long k_in, long l_in) : k(k_in), l(l_in) {
    if (k < 3) throw std::invalid_argument("PolarizedLattice: k must be at least 3");
    if (l < 2) throw std::invalid_argument("PolarizedLattice: l must be at least 2");
}

Int PolarizedLattice::pairing(const std::vector<Int>& a, const std::vector<Int>& b) const {
    if (a.size() != static_cast<std::size_t>(l + 1) || b.size() != a.size()) {
        throw std::invalid_argument("pairing: vector length must be l+1");
    }
    Int out = Int(k) * a[0] * b[0];
    for (long i = 1; i <= l; ++i) out -= a[i] * b[i];
    return out;
}

namespace {

Int int_isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Fills coordinates from position `pos` with entries summing to `sum` and
/// with squares summing to `sq`, appending every completion to `out`.
void fill_b(std::vector<Int>& current, std::size_t pos, std::size_t count, const Int& sum,
            const Int& sq, RootSet& out) {
    if (pos == count) {
        if (sum == 0 && sq == 0) out.insert(current);
        return;
    }
    std::size_t remaining = count - pos - 1;
    Int bound = int_isqrt(sq);
    for (Int b = -bound; b <= bound; ++b) {
        Int nsum = sum - b;
        Int nsq = sq - b * b;
        if (nsq < 0) continue;
        // Cauchy-Schwarz: the remaining entries must fit both targets.
        if (nsum * nsum > Int(remaining) * nsq) continue;
        current[pos] = b;
        fill_b(current, pos + 1, count, nsum, nsq, out);
    }
    current[pos] = 0;
}

}  // namespace

RootSet enumerate_roots(const PolarizedLattice& lat) {
    Int disc = Int(lat.k + 2) * (lat.k + 2) - Int(lat.l) * lat.k;
    if (disc <= 0) {
        throw DegenerateLattice("enumerate_roots: (k+2)^2 - l k <= 0 at k=" +
                                std::to_string(lat.k) + ", l=" + std::to_string(lat.l));
    }
    RootSet roots;
    // (k+2)^2 a^2 = (sum b)^2 <= l sum(b^2) = l (k a^2 + 2) bounds a.
    Int amax = 0;
    while ((amax + 1) * (amax + 1) * disc <= 2 * lat.l) ++amax;
    for (Int a = -amax; a <= amax; ++a) {
        Int target_sum = -Int(lat.k + 2) * a;
        Int target_sq = Int(lat.k) * a * a + 2;
        RootSet partial;
        std::vector<Int> tail(lat.l, 0);
        fill_b(tail, 0, lat.l, target_sum, target_sq, partial);
        for (const Root& t : partial) {
            Root full(lat.l + 1);
            full[0] = a;
            std::copy(t.begin(), t.end(), full.begin() + 1);
            roots.insert(full);
        }
    }
    return roots;
}

namespace {

bool lex_positive(const Root& r) {
    for (const Int& x : r) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

}  // namespace

std::vector<Root> positive_roots(const RootSet& roots) {
    std::vector<Root> out;
    for (const Root& r : roots) {
        if (lex_positive(r)) out.push_back(r);
    }
    return out;
}

std::vector<Root> simple_roots(const RootSet& roots) {
    std::vector<Root> pos = positive_roots(roots);
    RootSet pos_set(pos.begin(), pos.end());
    std::vector<Root> simple;
    for (const Root& alpha : pos) {
        bool decomposable = false;
        for (const Root& beta : pos) {
            if (beta == alpha) continue;
            Root gamma(alpha.size());
            for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] - beta[i];
            if (pos_set.count(gamma)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(alpha);
    }
    return simple;
}

IntMat cartan_matrix(const std::vector<Root>& simple, const PolarizedLattice& lat) {
    std::size_t n = simple.size();
    IntMat c(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c[i][j] = -lat.pairing(simple[i], simple[j]);
            if (i == j) {
                if (c[i][j] != 2) {
                    throw UnrecognizedDiagram("cartan_matrix: a simple root has square != -2");
                }
            } else if (c[i][j] != 0 && c[i][j] != -1) {
                throw UnrecognizedDiagram("cartan_matrix: off-diagonal entry " +
                                          c[i][j].get_str() + " is not simply laced");
            }
        }
    }
    return c;
}

std::string CartanType::to_string() const {
    if (factors.empty()) return "trivial";
    std::string out;
    for (const DynkinFactor& f : factors) {
        if (!out.empty()) out += "x";
        out += f.series;
        out += std::to_string(f.rank);
    }
    return out;
}

CartanType make_cartan_type(const std::string& text) {
    CartanType type;
    if (text == "trivial") return type;
    std::size_t i = 0;
    while (i < text.size()) {
        char series = text[i++];
        if (series != 'A' && series != 'D' && series != 'E') {
            throw std::invalid_argument("make_cartan_type: bad series letter in " + text);
        }
        long rank = 0;
        bool digits = false;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            rank = rank * 10 + (text[i++] - '0');
            digits = true;
        }
        if (!digits) throw std::invalid_argument("make_cartan_type: missing rank in " + text);
        type.factors.push_back({series, rank});
        if (i < text.size()) {
            if (text[i] != 'x') throw std::invalid_argument("make_cartan_type: bad separator");
            ++i;
        }
    }
    std::sort(type.factors.begin(), type.factors.end());
    return type;
}

namespace {

DynkinFactor classify_component(const std::vector<int>& nodes,
                                const std::map<int, std::vector<int>>& adj) {
    long n = static_cast<long>(nodes.size());
    long edges = 0;
    int branch = -1;
    for (int v : nodes) {
        long deg = static_cast<long>(adj.at(v).size());
        edges += deg;
        if (deg > 3) {
            throw UnrecognizedDiagram("classify: node of degree " + std::to_string(deg));
        }
        if (deg == 3) {
            if (branch != -1) throw UnrecognizedDiagram("classify: two branch nodes");
            branch = v;
        }
    }
    edges /= 2;
    if (edges != n - 1) throw UnrecognizedDiagram("classify: component contains a cycle");
    if (branch == -1) return {'A', n};
    // Lengths of the three legs hanging off the branch node.
    std::vector<long> legs;
    for (int start : adj.at(branch)) {
        long len = 1;
        int prev = branch;
        int cur = start;
        while (true) {
            const auto& nb = adj.at(cur);
            if (nb.size() == 1) break;
            int next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {'D', n};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 2) return {'E', 6};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 3) return {'E', 7};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 4) return {'E', 8};
    throw UnrecognizedDiagram("classify: branch node with legs " + std::to_string(legs[0]) + "," +
                              std::to_string(legs[1]) + "," + std::to_string(legs[2]));
}

}  // namespace

CartanType classify(const IntMat& cartan) {
    int n = static_cast<int>(cartan.size());
    std::map<int, std::vector<int>> adj;
    for (int i = 0; i < n; ++i) adj[i] = {};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (cartan[i][j] != cartan[j][i]) {
                throw UnrecognizedDiagram("classify: Cartan matrix is not symmetric");
            }
            if (cartan[i][j] == -1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    std::vector<char> seen(n, 0);
    CartanType type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> component;
        std::vector<int> stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        type.factors.push_back(classify_component(component, adj));
    }
    std::sort(type.factors.begin(), type.factors.end());
    return type;
}

Int index_of_connectedness(const PolarizedLattice& lat) {
    RootSet roots = enumerate_roots(lat);
    std::vector<Root> simple = simple_roots(roots);
    IntMat cartan = cartan_matrix(simple, lat);
    Int via_cartan = abs(determinant(cartan));

    // Second route: Gram matrix of a Hermite basis of the span of all roots.
    IntMat rows(roots.begin(), roots.end());
    IntMat basis = hermite_basis(rows);
    if (basis.size() != simple.size()) {
        throw InternalMismatch("index_of_connectedness: rank of root span " +
                               std::to_string(basis.size()) + " != number of simple roots " +
                               std::to_string(simple.size()));
    }
    std::size_t m = basis.size();
    IntMat gram(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram[i][j] = -lat.pairing(basis[i], basis[j]);
    }
    Int via_smith = 1;
    for (const Int& d : smith_invariant_factors(gram)) {
        if (d == 0) throw InternalMismatch("index_of_connectedness: degenerate Gram matrix");
        via_smith *= d;
    }
    if (via_cartan != via_smith) {
        throw InternalMismatch("index_of_connectedness: Cartan determinant " +
                               via_cartan.get_str() + " != Smith discriminant " +
                               via_smith.get_str());
    }
    return via_cartan;
}

std::vector<OrbitRow> orbit_table_rows(long k, long l) {
    std::vector<OrbitRow> rows;
    auto zeros = [&](long count) { return std::vector<Int>(count, 0); };
    if (k == 3 && l == 8) {
        OrbitRow r1{Int(0), zeros(l)};
        r1.b[0] = 1;
        r1.b[1] = -1;
        OrbitRow r2{Int(1), zeros(l)};
        for (int i = 0; i < 5; ++i) r2.b[i] = 1;
        OrbitRow r3{Int(2), zeros(l)};
        r3.b[0] = 2;
        r3.b[1] = 2;
        for (int i = 2; i < 8; ++i) r3.b[i] = 1;
        OrbitRow r4{Int(3), zeros(l)};
        for (int i = 0; i < 7; ++i) r4.b[i] = 2;
        r4.b[7] = 1;
        return {r1, r2, r3, r4};
    }
    OrbitRow diff{Int(0), zeros(l)};
    diff.b[0] = 1;
    diff.b[1] = -1;
    rows.push_back(diff);
    if (l >= k + 2) {
        OrbitRow ones{Int(1), zeros(l)};
        for (long i = 0; i < k + 2; ++i) ones.b[i] = 1;
        rows.push_back(ones);
    }
    return rows;
}

bool verify_orbit_table(long k, long l) {
    PolarizedLattice lat(k, l);
    RootSet expected = enumerate_roots(lat);
    RootSet generated;
    for (const OrbitRow& row : orbit_table_rows(k, l)) {
        std::vector<Int> b = row.b;
        std::sort(b.begin(), b.end());
        do {
            // A displayed row (a; b) stands for the root a e_0 - sum b_i e_i.
            Root r(l + 1);
            r[0] = row.a;
            for (long i = 0; i < l; ++i) r[i + 1] = -b[i];
            generated.insert(r);
            for (Int& x : r) x = -x;
            generated.insert(r);
        } while (std::next_permutation(b.begin(), b.end()));
    }
    return generated == expected;
}

}  // namespace fano
