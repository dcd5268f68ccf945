#pragma once

#include <optional>

#include "unram/brauer/finab.hpp"
#include "unram/cohomology/glattice.hpp"
#include "unram/parallel.hpp"

namespace unram::brauer {

using cohomology::GLattice;
using group::GroupPtr;
using group::MatGroup;

inline constexpr std::size_t kB0MaxOrder = 64;
inline constexpr std::size_t kBocksteinMaxOrder = 12;

struct H2uOptions {
  bool maximal_only = true;
  bool conjugacy_reps = true;
  bool preprocess = true;
  Exec exec = Exec::parallel;
};

struct H2uResult {
  FinAbGroup h2;
  FinAbGroup h2u;
  // Generators of H^2_u as exponent vectors over the H^2 generators.
  std::vector<IntVector> generators;
  std::size_t subgroups = 0;       // bicyclic subgroups selected
  std::size_t subgroups_used = 0;  // folded before the intersection became trivial
};

// Intersection over bicyclic A of ker(res: H^2(G, M) -> H^2(A, M)).
H2uResult h2u(const GLattice& m, const H2uOptions& opt = {});

// J_G = Z[G] / Z.sum(G) with basis the classes of all elements but the
// last; H^2(G, J_G) = H^3(G, Z) = H^2(G, Q/Z) compatibly with restriction.
GLattice augmentation_quotient(const GroupPtr& g);

// H^2(G, Q/Z) as H^2(G, J_G). Throws GroupTooLargeForB0 past max_order.
FinAbGroup schur_qz(const GroupPtr& g, std::size_t max_order = kB0MaxOrder);

struct SchurTables {
  FinAbGroup group;
  Int modulus;  // n = |G|
  // Normalized mod-n 2-cocycles on pairs of non-identity elements, entry
  // (a, b) at (a - 1) (N - 1) + (b - 1); one per invariant.
  std::vector<IntVector> tables;
};
// H^2(G, Q/Z) as H^2(G, Z/n) modulo the Bockstein image of Hom(G, Q/Z),
// n = |G|, from the bar complex.
SchurTables schur_qz_bockstein(const GroupPtr& g, std::size_t max_order = kBocksteinMaxOrder);

// B_0(G) = H^2_u(G, J_G). Throws GroupTooLargeForB0 past max_order.
H2uResult b0(const GroupPtr& g, const H2uOptions& opt = {}, std::size_t max_order = kB0MaxOrder);

struct BrauerReport {
  std::optional<FinAbGroup> b0;  // empty when skipped by the budget
  FinAbGroup h2u;
  FinAbGroup combined;
};
BrauerReport br_u(const GLattice& m, const H2uOptions& opt = {},
                  std::size_t b0_max_order = kB0MaxOrder);

}  // namespace unram::brauer
