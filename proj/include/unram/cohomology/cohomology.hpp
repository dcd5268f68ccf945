#pragma once

#include <memory>

#include "unram/cohomology/glattice.hpp"
#include "unram/exactla/sparse.hpp"

namespace unram::cohomology {

using exactla::LatticeQuotient;
using exactla::SparseIntMatrix;

// Basis of M^G (saturated).
IntMatrix fixed_sublattice(const GLattice& m);
IntVector h1(const GLattice& m);
IntVector hminus1(const GLattice& m);

// Restricted coboundary map b -> z on G x generators, as the sparse matrix
// with b = (b(g))_g in the rows and z = (z(g, s))_{g, s} in the columns:
//   z(g, s) = b(s) - b(g s) + b(g) rho(s)
struct CoboundaryMatrix {
  SparseIntMatrix d;
  std::size_t n = 0, k = 0, dim = 0;

  std::size_t row(Index g, std::size_t c) const { return g * dim + c; }
  std::size_t col(Index g, std::size_t s, std::size_t c) const { return (g * k + s) * dim + c; }
};
CoboundaryMatrix coboundary_matrix(const GLattice& m);

struct H2Data {
  IntVector invariants;                      // divisors > 1
  std::vector<IntVector> gens_restricted;    // z(g, s) tables, one per invariant
  std::shared_ptr<const LatticeQuotient> quotient;
  bool preprocessed = false;

  // Class of a restricted cocycle, as residues mod invariants.
  IntVector coordinates(std::span<const Int> restricted) const;
};

// H^2(G, M) = sat(L) / L for the row lattice L of the coboundary matrix.
// With preprocess the unit pivots are eliminated sparsely before the dense
// Smith form; without it the whole matrix goes through dense Smith form.
H2Data h2(const GLattice& m, bool preprocess = true, Exec exec = Exec::parallel);

// Full table z(g, h), stored flat: entry (g, h) starts at (g * n + h) * dim.
class CocycleTable {
 public:
  CocycleTable(std::size_t n, std::size_t dim) : n_(n), dim_(dim), z_(n * n * dim) {}
  std::size_t order() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<Int> at(Index g, Index h) { return {z_.data() + (g * n_ + h) * dim_, dim_}; }
  std::span<const Int> at(Index g, Index h) const {
    return {z_.data() + (g * n_ + h) * dim_, dim_};
  }
  bool operator==(const CocycleTable&) const = default;

 private:
  std::size_t n_, dim_;
  std::vector<Int> z_;
};

// Extends a restricted cocycle to G x G with
//   z(g, h s) = z(g, h) rho(s) + z(g h, s) - z(h, s)
// and verifies the result; throws InconsistentExtension when the input is
// not a restricted cocycle.
CocycleTable extend_cocycle(const GLattice& m, std::span<const Int> restricted,
                            Exec exec = Exec::parallel);
// The restricted vector z(g, s) read back from a table.
IntVector restricted_of(const GLattice& m, const CocycleTable& t);
// True when z(g, h k) = z(g, h) rho(k) + z(g h, k) - z(h, k) for all g, h, k.
bool satisfies_cocycle_identity(const GLattice& m, const CocycleTable& t);
// delta b as a full table, b given as one vector per element.
CocycleTable coboundary_table(const GLattice& m, const std::vector<IntVector>& b);

// Restricted vector of the table on subgroup h with h's generators, laid out
// for the coboundary matrix of m.restrict_to(h).
IntVector restrict_table(const GLattice& m, const Subgroup& h, const CocycleTable& t);
// Coordinates of the restricted class in H^2(H, M).
IntVector restrict_class(const GLattice& m, const Subgroup& h, const H2Data& h2_of_h,
                         const CocycleTable& t);

}  // namespace unram::cohomology
