#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <map>
#include <vector>

#include "supalg/partition.hpp"
#include "supalg/schur.hpp"

namespace oracles {

// Semistandard tableau count by direct row-filling enumeration.
inline long long ssyt_count_rec(const supalg::Partition& shape, std::vector<std::vector<int>>& rows,
                                int r, int c, int n) {
    if (r == shape.length()) return 1;
    if (c == shape.row(r + 1)) return ssyt_count_rec(shape, rows, r + 1, 0, n);
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);                    // row weakly increasing
    if (r > 0 && c < shape.row(r)) lo = std::max(lo, rows[r - 1][c] + 1);  // column strict
    long long total = 0;
    for (int v = lo; v <= n; ++v) {
        rows[r][c] = v;
        total += ssyt_count_rec(shape, rows, r, c + 1, n);
    }
    return total;
}

inline long long ssyt_count(const supalg::Partition& shape, int n) {
    if (shape.empty()) return 1;
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.row(r + 1), 0);
    return ssyt_count_rec(shape, rows, 0, 0, n);
}

// Arm/leg by literal box counting on a boolean grid.
inline bool q1_by_grid(const supalg::Partition& lam) {
    int rows = lam.length();
    for (int i = 1; i <= rows; ++i) {
        if (lam.row(i) < i) break;
        int right = lam.row(i) - i;
        int below = 0;
        for (int r = i + 1; r <= rows; ++r)
            if (lam.row(r) >= i) ++below;
        if (right != below + 1) return false;
    }
    return true;
}

// Dense fraction-style row reduction, written independently of supalg::linalg.
inline int dense_rank(std::vector<std::vector<supalg::Rat>> m) {
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t piv = m.size();
        for (size_t r = rank; r < m.size(); ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv == m.size()) continue;
        std::swap(m[static_cast<size_t>(rank)], m[piv]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
            supalg::Rat f = m[r][c] / m[static_cast<size_t>(rank)][c];
            for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracles
