#pragma once

#include <string>
#include <vector>

#include "unram/exactla/int_matrix.hpp"

namespace unram::brauer {

using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;

// Finite abelian group Z/d_1 + ... + Z/d_r, d_1 | d_2 | ..., all d_i >= 2.
struct FinAbGroup {
  IntVector invariants;

  FinAbGroup() = default;
  // Normalizes any list of orders to the divisor chain.
  static FinAbGroup from_orders(const IntVector& orders);

  bool trivial() const noexcept { return invariants.empty(); }
  Int order() const;
  // "2,2", or "0" for the trivial group.
  std::string to_string() const;
  bool operator==(const FinAbGroup&) const = default;
};

// Direct sum, as a divisor chain.
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// x -> x R from Z/s to Z/t; row i of R is the image of generator i.
struct HomFinAb {
  IntVector source;
  IntVector target;
  IntMatrix r;  // |source| x |target|

  // s_i * row i vanishes mod t
  bool well_defined() const;
};

// Subgroup of Z/s given by its preimage lattice K in Z^r, which contains
// diag(s) Z^r. K is kept as a square Hermite basis.
struct SubgroupOfFinAb {
  IntVector ambient;
  IntMatrix k;

  static SubgroupOfFinAb whole(const IntVector& ambient);
  static SubgroupOfFinAb zero(const IntVector& ambient);
  // The subgroup generated by residue vectors.
  static SubgroupOfFinAb generated(const IntVector& ambient, const std::vector<IntVector>& gens);

  bool trivial() const;
  bool contains(const IntVector& x) const;
  FinAbGroup structure() const;
  // Generators of the structure's cyclic factors as residue vectors mod s,
  // in the order of structure().invariants.
  std::vector<IntVector> generators() const;
  bool operator==(const SubgroupOfFinAb& o) const { return ambient == o.ambient && k == o.k; }
};

SubgroupOfFinAb kernel_of_hom(const HomFinAb& f);
SubgroupOfFinAb intersect(const SubgroupOfFinAb& a, const SubgroupOfFinAb& b);
// Fold in input order; stops once the running intersection is trivial.
SubgroupOfFinAb intersect(const std::vector<SubgroupOfFinAb>& subs);

}  // namespace unram::brauer
