#include "fanocascade/matrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace fano {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Int determinant(const IntMat& input) {
    std::size_t n = input.size();
    for (const auto& row : input) {
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    }
    if (n == 0) return 1;
    IntMat m = input;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMat hermite_basis(const IntMat& rows) {
    if (rows.empty()) return {};
    std::size_t cols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("hermite_basis: ragged matrix");
    }
    IntMat m = rows;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // Clear the column below `row` with the euclidean algorithm on rows.
        while (true) {
            std::size_t best = m.size();
            for (std::size_t i = row; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                if (best == m.size() || abs(m[i][col]) < abs(m[best][col])) best = i;
            }
            if (best == m.size()) break;
            std::swap(m[row], m[best]);
            bool cleared = true;
            for (std::size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                Int q = floor_div(m[i][col], m[row][col]);
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0) {
            for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(m[i][col], m[row][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

std::vector<Int> smith_invariant_factors(IntMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m) {
        if (r.size() != cols) throw std::invalid_argument("smith_invariant_factors: ragged matrix");
    }
    std::size_t n = std::min(rows, cols);
    std::vector<Int> result;
    std::size_t t = 0;
    while (t < n) {
        // Find the nonzero entry of smallest absolute value in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (pi == rows || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        bool reduced = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            Int q = floor_div(m[i][t], m[t][t]);
            if (q != 0) {
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            }
            if (m[i][t] != 0) reduced = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            Int q = floor_div(m[t][j], m[t][t]);
            if (q != 0) {
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            }
            if (m[t][j] != 0) reduced = true;
        }
        if (reduced) continue;
        // Pivot divides its row and column; enforce divisibility of the rest.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divides_all = false;
                    break;
                }
            }
        }
        if (!divides_all) continue;
        result.push_back(abs(m[t][t]));
        ++t;
    }
    while (result.size() < n) result.push_back(0);
    return result;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size();
    std::size_t k = b.size();
    std::size_t mcols = k == 0 ? 0 : b[0].size();
    IntMat out(n, std::vector<Int>(mcols, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: dimension mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < mcols; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat out(a[0].size(), std::vector<Int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    }
    return out;
}

}  // namespace fano
