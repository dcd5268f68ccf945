#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace unram::exactla {

using Int = mpz_class;
using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers. Empty shapes
// (0 rows or 0 columns) are valid and behave as rank 0.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Int> d);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row_vector(std::size_t i) const;

  std::span<const Int> flat() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += f * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& f);
  // col a += f * col b
  void add_col_multiple(std::size_t a, std::size_t b, const Int& f);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  IntMatrix transposed() const;
  IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  IntMatrix select_rows(std::span<const std::size_t> idx) const;
  IntMatrix select_cols(std::span<const std::size_t> idx) const;
  void append_row(std::span<const Int> r);

  bool is_zero() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

// v * A for a row vector v.
IntVector row_times(std::span<const Int> v, const IntMatrix& a);
// lhs += f * rhs
void axpy(std::span<Int> lhs, const Int& f, std::span<const Int> rhs);
bool is_zero(std::span<const Int> v);

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);
// Exact inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Quotient rounded to the nearest integer, so |a - q*b| <= |b|/2.
Int nearest_quotient(const Int& a, const Int& b);

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace unram::exactla
