#pragma once

#include "unram/cohomology/glattice.hpp"

namespace unram::cohomology {

inline constexpr std::size_t kOracleBudget = 60000;     // (|G|-1)^3 * d
inline constexpr std::size_t kCertificateLimit = 1000;  // dim C^2

struct OracleResult {
  IntVector invariants;
  // d3 * d2 = 0 was verified row by row.
  bool composition_checked = false;
  // rank(d2) + rank(d3) = dim C^2 was verified mod a prime, which shows
  // ker d3 is the saturation of im d2 without any cohomological input.
  bool rank_certified = false;
};

// H^2(G, M) from the normalized bar complex with the left action
// g.m = m rho(g)^-1. Throws OracleTooLarge past the budget.
OracleResult h2_oracle_report(const GLattice& m, std::size_t budget = kOracleBudget);
IntVector h2_oracle(const GLattice& m, std::size_t budget = kOracleBudget);

// Dense differentials of the normalized bar complex, cochains indexed by
// tuples of non-identity elements: entry ((a_1..a_i), c) sits at
// ((a_1 - 1) (N-1)^(i-1) + ... + (a_i - 1)) d + c. Rows are the source.
IntMatrix bar_d2(const GLattice& m);
IntMatrix bar_d3(const GLattice& m);

}  // namespace unram::cohomology
