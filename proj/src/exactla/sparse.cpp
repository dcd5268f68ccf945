#include "unram/exactla/sparse.hpp"

#include <algorithm>
#include <numeric>

#include "unram/errors.hpp"

namespace unram::exactla {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Int& v) {
  if (sgn(v) == 0) return;
  rows_[i].push_back({static_cast<std::uint32_t>(j), v});
  dirty_ = true;
}

void SparseIntMatrix::finalize() {
  if (!dirty_) return;
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    SparseRow merged;
    merged.reserve(r.size());
    for (auto& e : r) {
      if (!merged.empty() && merged.back().col == e.col)
        merged.back().val += e.val;
      else
        merged.push_back(std::move(e));
      if (sgn(merged.back().val) == 0) merged.pop_back();
    }
    r = std::move(merged);
  }
  dirty_ = false;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) m(i, e.col) = e.val;
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& a) {
  SparseIntMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) s.rows_[i].push_back({static_cast<std::uint32_t>(j), a(i, j)});
  return s;
}

namespace {

const Int* find_entry(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
  return (it != r.end() && it->col == col) ? &it->val : nullptr;
}

struct MergeOut {
  SparseRow row;
  std::vector<std::uint32_t> appeared;
  std::vector<std::uint32_t> vanished;
};

// out = a + f * b, noting columns whose zero pattern changed.
void merge_rows(const SparseRow& a, const Int& f, const SparseRow& b, MergeOut& out) {
  out.row.clear();
  out.appeared.clear();
  out.vanished.clear();
  out.row.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.row.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.row.push_back({b[j].col, f * b[j].val});
      out.appeared.push_back(b[j].col);
      ++j;
    } else {
      Int v = a[i].val;
      mpz_addmul(v.get_mpz_t(), f.get_mpz_t(), b[j].val.get_mpz_t());
      if (sgn(v) != 0)
        out.row.push_back({a[i].col, std::move(v)});
      else
        out.vanished.push_back(a[i].col);
      ++i;
      ++j;
    }
  }
}

class Eliminator {
 public:
  Eliminator(const SparseIntMatrix& d, Exec exec)
      : exec_(exec),
        rows_(d.rows()),
        row_alive_(d.rows(), 1),
        col_count_(d.cols(), 0),
        col_rows_(d.cols()),
        stamp_(d.rows(), 0) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      rows_[i] = d.row(i);
      for (const auto& e : rows_[i]) {
        ++col_count_[e.col];
        col_rows_[e.col].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  // Repeated passes over columns in increasing fill order; in each column
  // the shortest row holding a unit entry is the pivot.
  void run(std::vector<UnitPivot>* log) {
    std::vector<std::uint32_t> order(col_count_.size());
    for (;;) {
      std::iota(order.begin(), order.end(), 0u);
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return col_count_[a] < col_count_[b];
      });
      bool progress = false;
      for (std::uint32_t c : order) {
        if (col_count_[c] == 0) continue;
        std::size_t best = rows_.size();
        int unit = 0;
        for (std::uint32_t r : col_rows_[c]) {
          if (!row_alive_[r]) continue;
          const Int* v = find_entry(rows_[r], c);
          if (!v || (*v != 1 && *v != -1)) continue;
          if (best == rows_.size() || rows_[r].size() < rows_[best].size() ||
              (rows_[r].size() == rows_[best].size() && r < best)) {
            best = r;
            unit = (*v == 1) ? 1 : -1;
          }
        }
        if (best == rows_.size()) continue;
        pivot(best, c, unit, log);
        progress = true;
      }
      if (!progress) break;
    }
  }

  std::size_t pivots() const { return pivots_; }

  // Surviving nonzero rows and columns.
  void residual(std::vector<std::uint32_t>& rows, std::vector<std::uint32_t>& cols) const {
    rows.clear();
    cols.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (row_alive_[i] && !rows_[i].empty()) rows.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t j = 0; j < col_count_.size(); ++j)
      if (col_count_[j] > 0) cols.push_back(static_cast<std::uint32_t>(j));
  }

  const SparseRow& row(std::size_t i) const { return rows_[i]; }

 private:
  void pivot(std::size_t r, std::uint32_t c, int unit, std::vector<UnitPivot>* log) {
    ++epoch_;
    stamp_[r] = epoch_;
    std::vector<std::uint32_t> targets;
    for (std::uint32_t t : col_rows_[c]) {
      if (!row_alive_[t] || stamp_[t] == epoch_) continue;
      stamp_[t] = epoch_;
      if (find_entry(rows_[t], c)) targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());

    const SparseRow& prow = rows_[r];
    std::vector<MergeOut> out(targets.size());
    const long nt = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec_ == Exec::parallel && nt > 8)
    for (long k = 0; k < nt; ++k) {
      const std::uint32_t t = targets[k];
      Int f = -*find_entry(rows_[t], c);
      if (unit < 0) f = -f;
      merge_rows(rows_[t], f, prow, out[k]);
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const std::uint32_t t = targets[k];
      rows_[t] = std::move(out[k].row);
      for (std::uint32_t col : out[k].appeared) {
        ++col_count_[col];
        col_rows_[col].push_back(t);
      }
      for (std::uint32_t col : out[k].vanished) --col_count_[col];
    }
    for (const auto& e : prow) --col_count_[e.col];
    row_alive_[r] = 0;
    col_rows_[c].clear();
    col_rows_[c].shrink_to_fit();
    ++pivots_;
    if (log)
      log->push_back({c, unit, std::move(rows_[r])});
    rows_[r].clear();
  }

  Exec exec_;
  std::vector<SparseRow> rows_;
  std::vector<char> row_alive_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace

EliminationStats eliminate_unit_pivots(const SparseIntMatrix& d, Exec exec) {
  Eliminator e(d, exec);
  e.run(nullptr);
  std::vector<std::uint32_t> rows, cols;
  e.residual(rows, cols);
  EliminationStats s;
  s.pivots = e.pivots();
  s.residual_rows = rows.size();
  s.residual_cols = cols.size();
  for (auto r : rows) s.residual_nonzeros += e.row(r).size();
  return s;
}

LatticeQuotient::LatticeQuotient(const SparseIntMatrix& d, bool eliminate_units, Exec exec)
    : cols_(d.cols()) {
  IntMatrix dense;
  if (eliminate_units) {
    Eliminator e(d, exec);
    e.run(&log_);
    std::vector<std::uint32_t> rows;
    e.residual(rows, residual_cols_);
    std::vector<std::uint32_t> local(cols_, 0);
    for (std::size_t j = 0; j < residual_cols_.size(); ++j) local[residual_cols_[j]] = j;
    dense = IntMatrix(rows.size(), residual_cols_.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& en : e.row(rows[i])) dense(i, local[en.col]) = en.val;
  } else {
    residual_cols_.resize(cols_);
    std::iota(residual_cols_.begin(), residual_cols_.end(), 0u);
    dense = d.to_dense();
  }
  residual_ = snf_col_transforms(dense);
  for (std::size_t i = 0; i < residual_.rank; ++i) {
    const Int& di = residual_.normal(i, i);
    if (di == 1) continue;
    positions_.push_back(i);
    invariants_.push_back(di);
    IntVector g(cols_);
    for (std::size_t j = 0; j < residual_cols_.size(); ++j)
      g[residual_cols_[j]] = residual_.col_transform_inverse(i, j);
    generators_.push_back(std::move(g));
  }
}

IntVector LatticeQuotient::coordinates(std::span<const Int> x0) const {
  if (x0.size() != cols_) throw LengthMismatch("coordinates: vector length differs from lattice dimension");
  IntVector x(x0.begin(), x0.end());
  for (const auto& p : log_) {
    if (sgn(x[p.col]) == 0) continue;
    Int f = -x[p.col];
    if (p.unit < 0) f = -f;
    for (const auto& e : p.row) mpz_addmul(x[e.col].get_mpz_t(), f.get_mpz_t(), e.val.get_mpz_t());
  }
  IntVector y(residual_cols_.size());
  for (std::size_t j = 0; j < residual_cols_.size(); ++j) {
    y[j] = x[residual_cols_[j]];
    x[residual_cols_[j]] = 0;
  }
  if (!is_zero(x)) throw InternalInconsistency("coordinates: vector outside the saturated lattice");
  IntVector c = y.empty() ? IntVector() : row_times(y, residual_.col_transform);
  for (std::size_t i = residual_.rank; i < c.size(); ++i)
    if (sgn(c[i]) != 0) throw InternalInconsistency("coordinates: vector outside the saturated lattice");
  IntVector out(positions_.size());
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    mpz_fdiv_r(out[k].get_mpz_t(), c[positions_[k]].get_mpz_t(), invariants_[k].get_mpz_t());
  }
  return out;
}

}  // namespace unram::exactla
