#include "modseven/linalg.hpp"

namespace modseven {

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat r(n, Vec(m, Coef(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw Error("matrix shape mismatch");
        for (std::size_t j = 0; j < m; ++j) {
            Coef acc(0);
            for (std::size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
            r[i][j] = acc;
        }
    }
    return r;
}

Mat mat_identity(std::size_t n, Ring r) {
    Mat m(n, Vec(n, Coef::zero(r)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Coef::one(r);
    return m;
}

namespace {

// Elimination needs a field; integer-tagged entries move into Q.
void promote_ints(Mat& m) {
    for (auto& row : m)
        for (auto& c : row)
            if (c.ring() == Ring::Int) c = c.to_ring(Ring::Rat);
}

// Row echelon; returns pivot column per pivot row. Augmented columns (if any)
// ride along inside the rows.
std::vector<std::size_t> echelon(Mat& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        Coef inv = m[row][col].inverse();
        for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Coef f = m[i][col];
            for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(Mat m) {
    if (m.empty()) return 0;
    promote_ints(m);
    return echelon(m, m[0].size()).size();
}

Coef mat_det(Mat m) {
    std::size_t n = m.size();
    if (n == 0) throw Error("determinant of empty matrix");
    promote_ints(m);
    Coef det = Coef::one(Coef::join(m[0][0].ring(), Ring::Int));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col].is_zero()) ++p;
        if (p == n) return Coef(0) * det;  // keep the ring tag
        if (p != col) {
            std::swap(m[col], m[p]);
            det = -det;
        }
        det = det * m[col][col];
        Coef inv = m[col][col].inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            Coef f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return det;
}

Mat mat_inverse(Mat m) {
    promote_ints(m);
    std::size_t n = m.size();
    Ring r = n ? m[0][0].ring() : Ring::Rat;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Coef::one(r) : Coef::zero(r));
    }
    auto pivots = echelon(m, n);
    if (pivots.size() != n) throw Error("matrix is singular");
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

SolveOutcome solve_linear(Mat a, Vec b) {
    std::size_t rows = a.size();
    if (rows != b.size()) throw Error("solve: shape mismatch");
    promote_ints(a);
    for (auto& c : b)
        if (c.ring() == Ring::Int) c = c.to_ring(Ring::Rat);
    std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a, cols);
    // Inconsistent when a pivot lands in the augmented column.
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (!a[i][cols].is_zero()) return {SolveOutcome::Inconsistent, {}};
    if (pivots.size() < cols) return {SolveOutcome::Underdetermined, {}};
    Vec x(cols, Coef(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return {SolveOutcome::Unique, std::move(x)};
}

std::vector<Vec> null_space(Mat a) {
    if (a.empty()) return {};
    promote_ints(a);
    std::size_t cols = a[0].size();
    auto pivots = echelon(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Coef(0));
        v[free] = Coef(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t gf3_rank(GF3Mat m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        if (m[rank][col] == 2)
            for (auto& x : m[rank]) x = static_cast<std::uint8_t>((x * 2) % 3);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            std::uint8_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<std::uint8_t>((m[i][j] + (3 - f) * m[rank][j]) % 3);
        }
        ++rank;
    }
    return rank;
}

}  // namespace modseven
