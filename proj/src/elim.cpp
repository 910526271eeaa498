#include "elim.hpp"

#include <limits>
#include <stdexcept>

namespace biham {

void row_axpy(SparseRow& r, const Rational& c, const SparseRow& s) {
  if (c.is_zero() || s.empty()) return;
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, c * s[j].second);
      ++j;
    } else {
      Rational v = r[i].second + c * s[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

Echelonizer::Echelonizer(int ncols) {
  if (ncols < 0) throw std::invalid_argument("Echelonizer: negative column count");
  col_to_row_.assign(static_cast<std::size_t>(ncols), -1);
}

bool Echelonizer::add_row(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;

  std::size_t best = 0;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::size_t size = row[i].second.bit_size();
    if (size < best_size) {
      best_size = size;
      best = i;
    }
  }
  const int pivot = row[best].first;
  const Rational inv = Rational(1) / row[best].second;
  for (auto& [col, coeff] : row) coeff *= inv;

  // Back-eliminate the new pivot from every existing row.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [col, coeff] : rows_[i]) {
      if (col == pivot) {
        row_axpy(rows_[i], -coeff, row);
        break;
      }
      if (col > pivot) break;
    }
  }
  col_to_row_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  pivot_col_.push_back(pivot);
  return true;
}

SparseRow Echelonizer::reduce(SparseRow v) const {
  // In reduced echelon form, eliminating a pivot column only introduces free
  // columns, so one pass over the pivot entries of v suffices.
  SparseRow pivot_entries;
  for (const auto& [col, coeff] : v)
    if (col_to_row_[static_cast<std::size_t>(col)] >= 0) pivot_entries.emplace_back(col, coeff);
  for (const auto& [col, coeff] : pivot_entries)
    row_axpy(v, -coeff, rows_[static_cast<std::size_t>(col_to_row_[static_cast<std::size_t>(col)])]);
  return v;
}

std::vector<int> Echelonizer::free_columns() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < col_to_row_.size(); ++c)
    if (col_to_row_[c] < 0) out.push_back(static_cast<int>(c));
  return out;
}

void Echelonizer::restore(std::vector<SparseRow> rows, std::vector<int> pivot_cols) {
  if (rows.size() != pivot_cols.size())
    throw std::invalid_argument("Echelonizer::restore: shape mismatch");
  rows_ = std::move(rows);
  pivot_col_ = std::move(pivot_cols);
  std::fill(col_to_row_.begin(), col_to_row_.end(), -1);
  for (std::size_t i = 0; i < pivot_col_.size(); ++i) {
    const int col = pivot_col_[i];
    if (col < 0 || col >= ncols() || col_to_row_[static_cast<std::size_t>(col)] != -1)
      throw std::invalid_argument("Echelonizer::restore: bad pivot column");
    col_to_row_[static_cast<std::size_t>(col)] = static_cast<int>(i);
  }
}

int sparse_rank(std::vector<SparseRow> rows, int ncols) {
  Echelonizer ech(ncols);
  for (auto& r : rows) ech.add_row(std::move(r));
  return ech.rank();
}

}  // namespace biham
