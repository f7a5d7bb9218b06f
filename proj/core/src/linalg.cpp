#include "supalg/linalg.hpp"

#include <algorithm>

namespace supalg {

int rank_gauss(QMat a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

int rank_bareiss(const QMat& a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    // clear denominators row by row
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            Rat v = a[i][j] * Rat(l);
            m[i][j] = v.get_num();
        }
    }
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

int rank(const QMat& a) {
    size_t entries = 0, nonzero = 0;
    for (const auto& row : a) {
        entries += row.size();
        for (const auto& v : row)
            if (v != 0) ++nonzero;
    }
    if (entries > 0 && nonzero * 4 < entries) return rank_gauss(a);
    return rank_bareiss(a);
}

std::optional<QVec> solve_columns(const QMat& cols, const QVec& target) {
    int k = static_cast<int>(cols.size());
    int m = static_cast<int>(target.size());
    // augmented [A | b] with A's columns the generators
    QMat aug(m, QVec(k + 1));
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(cols[j].size()) != m) throw Error("solve_columns: ragged column");
        for (int i = 0; i < m; ++i) aug[i][j] = cols[j][i];
    }
    for (int i = 0; i < m; ++i) aug[i][k] = target[i];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < k && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (aug[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(aug[r], aug[piv]);
        Rat inv = 1 / aug[r][c];
        for (int j = c; j <= k; ++j) aug[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (aug[i][k] != 0) return std::nullopt;
    QVec x(k, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k];
    return x;
}

std::vector<QVec> nullspace(const QMat& a, int ncols) {
    int rows = static_cast<int>(a.size());
    QMat m = a;
    std::vector<int> pivot_of_col(ncols, -1);
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < ncols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<QVec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        QVec v(ncols, Rat(0));
        v[c] = 1;
        for (int c2 = 0; c2 < ncols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -m[pivot_of_col[c2]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Echelon::insert(QVec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int i = 0; i < ncols_; ++i)
        if (v[i] != 0) { piv = i; break; }
    if (piv < 0) return false;
    Rat inv = 1 / v[piv];
    for (int i = piv; i < ncols_; ++i) v[i] *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat f = rows_[r][piv];
        if (f == 0) continue;
        for (int i = 0; i < ncols_; ++i) rows_[r][i] -= f * v[i];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

QVec Echelon::reduce(QVec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat f = v[pivots_[r]];
        if (f == 0) continue;
        for (int i = 0; i < ncols_; ++i) v[i] -= f * rows_[r][i];
    }
    return v;
}

bool Echelon::in_span(const QVec& v) const {
    QVec r = reduce(v);
    for (const Rat& x : r)
        if (x != 0) return false;
    return true;
}

}  // namespace supalg
