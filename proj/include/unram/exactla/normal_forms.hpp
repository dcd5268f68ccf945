#pragma once

#include <optional>
#include <span>

#include "unram/exactla/int_matrix.hpp"

namespace unram::exactla {

struct SnfResult {
  IntMatrix normal;
  IntMatrix row_transform;          // U
  IntMatrix col_transform;          // V
  IntMatrix col_transform_inverse;  // V^-1
  std::size_t rank = 0;

  // d_1 | d_2 | ... | d_rank, all >= 1
  IntVector divisors() const;
};

// U * A * V = normal with U, V unimodular.
SnfResult snf(const IntMatrix& a);
// As snf() but row_transform is left empty (0 x 0).
SnfResult snf_col_transforms(const IntMatrix& a);

// Same divisors as snf(a).divisors() without carrying any transform.
IntVector elementary_divisors(const IntMatrix& a);

struct HnfResult {
  IntMatrix h;  // U * A, upper echelon, zero rows last
  IntMatrix u;
  std::size_t rank = 0;
};

// Row Hermite form: positive pivots, entries above a pivot in [0, pivot).
HnfResult hnf_rows(const IntMatrix& a);

// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& a);

// Basis of the saturated lattice {x : x * A = 0}, in Hermite form.
IntMatrix nullspace_saturated(const IntMatrix& a);

// Basis of {x : (x * A)_j = 0 mod t_j for all j}, in Hermite form.
IntMatrix solve_mod(const IntMatrix& a, std::span<const Int> t);

// Canonical divisor chain (>= 2) of the group Z/a_1 + ... + Z/a_r.
// Entries equal to 0 or 1 contribute nothing.
IntVector divisor_chain(std::span<const Int> a);

// x with x * h = v, for h in Hermite form with independent rows.
std::optional<IntVector> lattice_coefficients(const IntMatrix& h, std::span<const Int> v);

// True when v lies in the row lattice spanned by the Hermite basis h.
bool in_lattice(const IntMatrix& h, std::span<const Int> v);

}  // namespace unram::exactla
