#include "unram/exactla/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "unram/errors.hpp"

namespace unram::exactla {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Int> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& f) {
  if (f == 0) return;
  Int* ra = data_.data() + a * cols_;
  const Int* rb = data_.data() + b * cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn(rb[j]) != 0) mpz_addmul(ra[j].get_mpz_t(), rb[j].get_mpz_t(), f.get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& x = (*this)(i, b);
    if (sgn(x) != 0) mpz_addmul((*this)(i, a).get_mpz_t(), x.get_mpz_t(), f.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Int& x = (*this)(a, j);
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int& x = (*this)(i, a);
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  IntMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntMatrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy(row(idx[i]).begin(), row(idx[i]).end(), s.row(i).begin());
  return s;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> idx) const {
  IntMatrix s(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
  return s;
}

void IntMatrix::append_row(std::span<const Int> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InputError("append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return sgn(x) == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& x = a(i, k);
      if (sgn(x) == 0) continue;
      axpy(ci, x, b.row(k));
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix difference: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw InputError("vstack: column mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    std::copy(top.row(i).begin(), top.row(i).end(), m.row(i).begin());
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    std::copy(bottom.row(i).begin(), bottom.row(i).end(), m.row(top.rows() + i).begin());
  return m;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw InputError("hstack: row mismatch");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    std::copy(left.row(i).begin(), left.row(i).end(), m.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(), m.row(i).begin() + left.cols());
  }
  return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntVector row_times(std::span<const Int> v, const IntMatrix& a) {
  if (v.size() != a.rows()) throw InputError("row_times: length mismatch");
  IntVector out(a.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    axpy(out, v[k], a.row(k));
  }
  return out;
}

void axpy(std::span<Int> lhs, const Int& f, std::span<const Int> rhs) {
  if (sgn(f) == 0) return;
  for (std::size_t j = 0; j < lhs.size(); ++j)
    if (sgn(rhs[j]) != 0) mpz_addmul(lhs[j].get_mpz_t(), rhs[j].get_mpz_t(), f.get_mpz_t());
}

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw NotUnimodular("inverse of non-square matrix");
  const std::size_t n = a.rows();
  // Gauss-Jordan with integer pivots; a unimodular matrix always has a
  // gcd-1 column so repeated Euclidean reduction reaches unit pivots.
  IntMatrix m = a;
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = c; r < n; ++r)
        if (sgn(m(r, c)) != 0 && (best == n || abs(m(r, c)) < abs(m(best, c)))) best = r;
      if (best == n) throw NotUnimodular("matrix is singular");
      m.swap_rows(c, best);
      inv.swap_rows(c, best);
      bool clean = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (sgn(m(r, c)) == 0) continue;
        Int q = nearest_quotient(m(r, c), m(c, c));
        m.add_row_multiple(r, c, -q);
        inv.add_row_multiple(r, c, -q);
        if (sgn(m(r, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(c, c) != 1 && m(c, c) != -1) throw NotUnimodular("determinant is not +-1");
    if (m(c, c) == -1) {
      m.negate_row(c);
      inv.negate_row(c);
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t r = 0; r < c; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Int q = m(r, c);
      m.add_row_multiple(r, c, -q);
      inv.add_row_multiple(r, c, -q);
    }
  }
  return inv;
}

Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int r2 = 2 * abs(r);
  if (r2 > abs(b)) {
    if ((sgn(r) > 0) == (sgn(b) > 0))
      ++q;
    else
      --q;
  }
  return q;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = m.rows() * 1315423911u + m.cols();
  for (const Int& x : m.flat()) {
    std::size_t v = static_cast<std::size_t>(mpz_get_si(x.get_mpz_t()));
    if (!x.fits_slong_p()) v ^= mpz_sizeinbase(x.get_mpz_t(), 2);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace unram::exactla
