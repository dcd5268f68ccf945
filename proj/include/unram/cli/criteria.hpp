#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unram/cohomology/glattice.hpp"

namespace unram::cli {

using cohomology::GLattice;

enum class Suite { fast, full };

struct NamedLattice {
  std::string name;
  GLattice lattice;
};

// Lattices of groups all of whose Sylow subgroups are bicyclic: cyclic,
// dihedral of twice-odd order, A4 and small abelian products, each on
// several lattices. At least 50 entries.
std::vector<NamedLattice> bicyclic_sylow_corpus();
bool sylow_subgroups_bicyclic(const group::MatGroup& g);

// count lattices with |G| <= 12 and d <= 4, integrally conjugated by
// seeded random unimodular matrices.
std::vector<NamedLattice> randomized_small_lattices(std::size_t count, std::uint64_t seed);
exactla::IntMatrix random_unimodular(std::size_t n, std::uint64_t seed);

struct CheckOutcome {
  bool passed = false;
  std::string detail;
  std::string stable_detail;  // detail without timings
};

struct Criterion {
  int id = 0;
  std::string title;
  bool full_only = false;  // skipped by the fast suite
  double budget_seconds = 0;
  std::function<CheckOutcome(Suite)> check;
};

// The acceptance matrix, criteria 1..13 in order.
const std::vector<Criterion>& acceptance_criteria();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool skipped = false;
  bool passed = false;
  std::string detail;
  std::string stable_detail;
  double seconds = 0;
  double budget_seconds = 0;
};

// Runs every criterion (those outside the suite are reported as skipped)
// on up to `jobs` threads. Results are ordered by id. A criterion passes
// when its check passes within its overall time budget; item budgets are
// enforced inside the checks.
std::vector<CriterionResult> run_criteria(Suite suite, int jobs = 1);

}  // namespace unram::cli
