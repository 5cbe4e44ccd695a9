#include "jetsym/linear_algebra.hpp"

#include <algorithm>

namespace jetsym {

namespace {

// row += factor * other
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, factor * other[j].second);
      ++j;
    } else {
      Rational v = row[i].second + factor * other[j].second;
      if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

SparseRow to_sparse(const QVector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
  return r;
}

QVector to_dense(const SparseRow& r, std::size_t n) {
  QVector v(n);
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

SparseRow QEchelon::reduce(SparseRow row) const {
  if (pivot_row_.empty()) return row;
  // pivot rows vanish on every other pivot column, so the pivot entries of
  // the incoming row are not disturbed by the subtractions
  std::vector<std::pair<std::size_t, Rational>> hits;
  for (const auto& [col, val] : row)
    if (col < pivot_row_.size() && pivot_row_[col] >= 0) hits.emplace_back(col, val);
  for (const auto& [col, val] : hits) row = axpy(row, -val, rows_[static_cast<std::size_t>(pivot_row_[col])]);
  return row;
}

bool QEchelon::insert(SparseRow row) {
  if (pivot_row_.size() < ncols_) pivot_row_.assign(ncols_, -1);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t pc = row.front().first;
  Rational inv = 1 / row.front().second;
  for (auto& e : row) e.second *= inv;
  for (auto& other : rows_) {
    if (const Rational* v = find_entry(other, pc)) {
      Rational f = -*v;
      other = axpy(other, f, row);
    }
  }
  pivot_row_[pc] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  pivots_.push_back(pc);
  return true;
}

std::vector<QVector> QEchelon::kernel() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    QVector v(ncols_);
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (const Rational* x = find_entry(rows_[r], f)) v[pivots_[r]] = -*x;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVector> kernel_basis(const std::vector<QVector>& matrix, std::size_t ncols) {
  QEchelon e(ncols);
  for (const auto& row : matrix) e.insert(to_sparse(row));
  return e.kernel();
}

std::size_t rank(const std::vector<QVector>& matrix, std::size_t ncols) {
  QEchelon e(ncols);
  for (const auto& row : matrix) e.insert(to_sparse(row));
  return e.rank();
}

std::optional<QVector> solve(const std::vector<QVector>& matrix, const QVector& rhs) {
  if (matrix.empty()) return std::nullopt;
  const std::size_t n = matrix.front().size();
  QEchelon e(n + 1);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    QVector row = matrix[i];
    row.push_back(rhs[i]);
    e.insert(to_sparse(row));
  }
  QVector x(n);
  for (std::size_t r = 0; r < e.rows().size(); ++r) {
    if (e.pivots()[r] == n) return std::nullopt;
    if (const Rational* v = find_entry(e.rows()[r], n)) x[e.pivots()[r]] = *v;
  }
  return x;
}

// ---------------------------------------------------------------------------

bool is_zero(const RfVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

RfEchelon::RfEchelon(VarList vars, std::size_t ncols) : vars_(std::move(vars)), ncols_(ncols) {}

RfVector RfEchelon::reduce(RfVector row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (row[pc].is_zero()) continue;
    RationalFunction f = row[pc];
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (c == pc) {
        row[c] = RationalFunction(vars_);
        continue;
      }
      if (!rows_[r][c].is_zero()) row[c] -= f * rows_[r][c];
    }
  }
  return row;
}

bool RfEchelon::insert(RfVector row) {
  row = reduce(std::move(row));
  std::size_t pc = ncols_;
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (row[c].is_zero()) continue;
    if (pc == ncols_ || row[c].complexity() < row[pc].complexity()) pc = c;
  }
  if (pc == ncols_) return false;
  if (!row[pc].is_one()) {
    RationalFunction inv = RationalFunction(vars_, 1) / row[pc];
    for (auto& x : row)
      if (!x.is_zero()) x *= inv;
  }
  for (auto& other : rows_) {
    if (other[pc].is_zero()) continue;
    RationalFunction f = other[pc];
    for (std::size_t c = 0; c < ncols_; ++c)
      if (!row[c].is_zero()) other[c] -= f * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pc);
  return true;
}

bool RfEchelon::contains(const RfVector& row) const { return is_zero(reduce(row)); }

std::vector<RfVector> RfEchelon::kernel() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RfVector> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RfVector v(ncols_, RationalFunction(vars_));
    v[f] = RationalFunction(vars_, 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RfVector> kernel_basis(const std::vector<RfVector>& matrix, const VarList& vars, std::size_t ncols) {
  RfEchelon e(vars, ncols);
  for (const auto& row : matrix) e.insert(row);
  return e.kernel();
}

std::size_t rank(const std::vector<RfVector>& matrix, const VarList& vars, std::size_t ncols) {
  RfEchelon e(vars, ncols);
  for (const auto& row : matrix) e.insert(row);
  return e.rank();
}

std::optional<RfVector> solve(const std::vector<RfVector>& matrix, const RfVector& rhs, const VarList& vars) {
  if (matrix.empty()) return std::nullopt;
  const std::size_t n = matrix.front().size();
  // Keep the right-hand side out of pivot selection by solving via the kernel
  // of [M | -b]: a kernel vector with last entry 1 yields a solution.
  RfEchelon e(vars, n + 1);
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    RfVector row = matrix[i];
    row.push_back(-rhs[i]);
    e.insert(std::move(row));
  }
  for (auto& k : e.kernel()) {
    if (k[n].is_zero()) continue;
    RationalFunction inv = RationalFunction(vars, 1) / k[n];
    RfVector x(k.begin(), k.begin() + static_cast<long>(n));
    for (auto& xi : x) xi *= inv;
    return x;
  }
  return std::nullopt;
}

}  // namespace jetsym
