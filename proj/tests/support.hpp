#pragma once

#include <random>
#include <vector>

#include "unram/exactla/int_matrix.hpp"

namespace testsupport {

using unram::exactla::Int;
using unram::exactla::IntMatrix;
using unram::exactla::IntVector;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) {
      u.negate_row(a);
      continue;
    }
    u.add_row_multiple(a, b, f(rng));
    if (rng() % 5 == 0) u.swap_rows(a, b);
  }
  return u;
}

inline std::vector<long> to_longs(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace testsupport
