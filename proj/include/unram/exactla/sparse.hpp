#pragma once

#include <cstdint>
#include <vector>

#include "unram/exactla/int_matrix.hpp"
#include "unram/exactla/normal_forms.hpp"
#include "unram/parallel.hpp"

namespace unram::exactla {

struct SparseEntry {
  std::uint32_t col;
  Int val;
};
using SparseRow = std::vector<SparseEntry>;  // sorted by col, no zeros

class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  // Accumulates into entry (i, j); call finalize() before reading.
  void add(std::size_t i, std::size_t j, const Int& v);
  void finalize();

  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;

  IntMatrix to_dense() const;
  static SparseIntMatrix from_dense(const IntMatrix& a);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
  bool dirty_ = false;
};

struct UnitPivot {
  std::uint32_t col;
  int unit;  // +1 or -1
  SparseRow row;
};

// The torsion group sat(L)/L for the row lattice L of a matrix, with
// generators and a coordinate map. With eliminate_units the matrix is
// first reduced by unit-pivot row elimination (each step deletes the pivot
// row and column, which leaves sat(L)/L unchanged); the remainder goes
// through dense Smith form. Without it the whole matrix does.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  LatticeQuotient(const SparseIntMatrix& d, bool eliminate_units,
                  Exec exec = Exec::parallel);

  const IntVector& invariants() const noexcept { return invariants_; }
  // One vector of Z^cols per invariant, in sat(L), of that exact order mod L.
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  // Class of x in sat(L)/L as residues mod invariants. Throws
  // InternalInconsistency when x is not in sat(L).
  IntVector coordinates(std::span<const Int> x) const;

  std::size_t ambient_dim() const noexcept { return cols_; }
  std::size_t pivots_eliminated() const noexcept { return log_.size(); }
  std::size_t residual_rows() const noexcept { return residual_.normal.rows(); }
  std::size_t residual_cols() const noexcept { return residual_cols_.size(); }
  const SnfResult& residual_snf() const noexcept { return residual_; }

 private:
  std::size_t cols_ = 0;
  std::vector<UnitPivot> log_;
  std::vector<std::uint32_t> residual_cols_;
  SnfResult residual_;
  std::vector<std::size_t> positions_;  // residual SNF positions with d > 1
  IntVector invariants_;
  std::vector<IntVector> generators_;
};

// Unit-pivot elimination kernel alone, exposed for tests and benchmarks.
struct EliminationStats {
  std::size_t pivots = 0;
  std::size_t residual_rows = 0;
  std::size_t residual_cols = 0;
  std::size_t residual_nonzeros = 0;
};
EliminationStats eliminate_unit_pivots(const SparseIntMatrix& d, Exec exec);

}  // namespace unram::exactla
