#pragma once

#include <optional>
#include <vector>

#include "supalg/common.hpp"

namespace supalg {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

int rank_gauss(QMat a);
int rank_bareiss(const QMat& a);  // fraction-free route, for cross-checking

/// Picks the elimination route by density; both routes agree on the test corpus.
int rank(const QMat& a);

/// Solves sum_j x_j * cols[j] = target exactly; absent when inconsistent.
std::optional<QVec> solve_columns(const QMat& cols, const QVec& target);

/// Basis of { x : a x = 0 } for row-major a with ncols columns.
std::vector<QVec> nullspace(const QMat& a, int ncols);

/// Incremental reduced row echelon over Q. insert() returns false when the
/// vector is already in the span.
class Echelon {
  public:
    explicit Echelon(int ncols) : ncols_(ncols) {}
    bool insert(QVec v);
    QVec reduce(QVec v) const;
    bool in_span(const QVec& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<QVec>& rows() const { return rows_; }

  private:
    int ncols_;
    std::vector<QVec> rows_;    // reduced, sorted by pivot
    std::vector<int> pivots_;
};

}  // namespace supalg
