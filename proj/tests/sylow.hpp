#pragma once

#include <vector>

#include "unram/group/mat_group.hpp"

namespace testsupport {

#include <algorithm>

using unram::group::Index;
using unram::group::MatGroup;
using unram::group::Subgroup;

inline bool is_prime_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// A Sylow p-subgroup, grown greedily: every maximal p-subgroup is Sylow.
inline Subgroup sylow(const MatGroup& g, std::size_t p) {
  Subgroup cur = unram::group::subgroup_generated(g, {});
  for (Index x = 1; x < g.order(); ++x) {
    if (!is_prime_power_of(g.element_order(x), p)) continue;
    if (std::binary_search(cur.elements.begin(), cur.elements.end(), x)) continue;
    std::vector<Index> gens = cur.generators;
    gens.push_back(x);
    Subgroup next = unram::group::subgroup_generated(g, gens);
    if (is_prime_power_of(next.order(), p)) cur = std::move(next);
  }
  return cur;
}

inline bool sylows_bicyclic(const MatGroup& g) {
  std::size_t n = g.order();
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    if (!unram::group::is_bicyclic(sylow(g, p))) return false;
  }
  return true;
}

}  // namespace testsupport
