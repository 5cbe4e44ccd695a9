#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jetsym/rational_function.hpp"

namespace jetsym {

// ---------------------------------------------------------------------------
// Exact linear algebra over Q (sparse rows)
// ---------------------------------------------------------------------------

/// Sparse row: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using QVector = std::vector<Rational>;

/// Incremental reduced row echelon form over Q.
class QEchelon {
public:
  explicit QEchelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces a row against the current basis.
  SparseRow reduce(SparseRow row) const;
  /// Adds a row; returns false when it was dependent.
  bool insert(SparseRow row);
  /// Right null space basis of the inserted rows (count = ncols - rank).
  std::vector<QVector> kernel() const;
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  std::size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row index or -1
};

SparseRow to_sparse(const QVector& v);
QVector to_dense(const SparseRow& r, std::size_t n);

/// Basis of {v : M v = 0} for a dense rational matrix.
std::vector<QVector> kernel_basis(const std::vector<QVector>& matrix, std::size_t ncols);
std::size_t rank(const std::vector<QVector>& matrix, std::size_t ncols);
/// Some solution x of M x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const std::vector<QVector>& matrix, const QVector& rhs);

// ---------------------------------------------------------------------------
// Exact linear algebra over the rational-function field
// ---------------------------------------------------------------------------

using RfVector = std::vector<RationalFunction>;

/// Incremental reduced echelon basis over the field of rational functions.
///
/// Pivots prefer the simplest available entry (constants first) and break
/// ties by column index, which keeps the output deterministic.
class RfEchelon {
public:
  RfEchelon(VarList vars, std::size_t ncols);

  const VarList& vars() const { return vars_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  RfVector reduce(RfVector row) const;
  bool insert(RfVector row);
  bool contains(const RfVector& row) const;
  std::vector<RfVector> kernel() const;
  const std::vector<RfVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  VarList vars_;
  std::size_t ncols_;
  std::vector<RfVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Right null space of a matrix over the rational-function field.
std::vector<RfVector> kernel_basis(const std::vector<RfVector>& matrix, const VarList& vars, std::size_t ncols);
std::size_t rank(const std::vector<RfVector>& matrix, const VarList& vars, std::size_t ncols);
/// Some solution of M x = b over the function field, or nullopt.
std::optional<RfVector> solve(const std::vector<RfVector>& matrix, const RfVector& rhs, const VarList& vars);

bool is_zero(const RfVector& v);

}  // namespace jetsym
