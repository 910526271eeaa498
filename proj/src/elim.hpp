#pragma once

#include <vector>

#include "rational.hpp"

namespace biham {

/// Sparse vector over the rationals: (column, coefficient) pairs sorted by
/// column, no zero coefficients.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// r += c * s, keeping the representation sorted and zero-free.
void row_axpy(SparseRow& r, const Rational& c, const SparseRow& s);

/// Incremental reduced row echelon form over the rationals. Each installed
/// row carries a pivot column with coefficient 1 that appears in no other
/// row, so reduction against the basis is a single pass. Pivots are chosen
/// among the candidate row's entries by smallest coefficient bit size (ties
/// to the lowest column), which keeps intermediate rationals small.
class Echelonizer {
 public:
  explicit Echelonizer(int ncols);

  int ncols() const { return static_cast<int>(col_to_row_.size()); }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces the row against the current pivots and installs the remainder
  /// as a new pivot row. Returns false when the row was dependent.
  bool add_row(SparseRow row);

  /// Fully reduces v; the result is supported on free columns only.
  SparseRow reduce(SparseRow v) const;

  bool is_pivot(int col) const { return col_to_row_[static_cast<std::size_t>(col)] >= 0; }
  std::vector<int> free_columns() const;

  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivot_col_; }

  /// Reinstates a previously computed echelon form verbatim (cache load).
  /// The rows must already be in reduced echelon shape.
  void restore(std::vector<SparseRow> rows, std::vector<int> pivot_cols);

 private:
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_col_;   // pivot column of rows_[i]
  std::vector<int> col_to_row_;  // column -> owning row, -1 when free
};

/// Rank of a throwaway matrix.
int sparse_rank(std::vector<SparseRow> rows, int ncols);

}  // namespace biham
