#include <omp.h>

#include "doctest.h"
#include "lattices.hpp"
#include "unram/brauer/brauer.hpp"
#include "unram/cohomology/cohomology.hpp"
#include "unram/exactla/sparse.hpp"

using namespace unram;
using namespace testsupport;

namespace {

// run with several threads even on a single core
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

std::vector<GLattice> corpus() {
  return {natural(catalog::family_q8n(2)),     natural(catalog::family_qd8n(2)),
          natural(catalog::family_cp2p(3)),    natural(catalog::builtin("hurwitz_sl23")),
          natural(catalog::builtin("g7_3")),   natural(catalog::builtin("carat_5_100_11")),
          natural(catalog::family_d4n(3))};
}

}  // namespace

TEST_CASE("unit-pivot elimination: parallel equals serial") {
  Threads t(4);
  for (const auto& m : corpus()) {
    auto d = cohomology::coboundary_matrix(m).d;
    auto s = exactla::eliminate_unit_pivots(d, Exec::serial);
    auto p = exactla::eliminate_unit_pivots(d, Exec::parallel);
    CHECK(s.pivots == p.pivots);
    CHECK(s.residual_rows == p.residual_rows);
    CHECK(s.residual_cols == p.residual_cols);
    CHECK(s.residual_nonzeros == p.residual_nonzeros);
    exactla::LatticeQuotient qs(d, true, Exec::serial), qp(d, true, Exec::parallel);
    CHECK(qs.invariants() == qp.invariants());
    CHECK(qs.generators() == qp.generators());
  }
}

TEST_CASE("bicyclic enumeration: parallel equals serial") {
  Threads t(4);
  for (const auto& m : corpus())
    for (bool maximal : {true, false}) {
      auto s = group::bicyclic_subgroups(m.group(), maximal, Exec::serial);
      auto p = group::bicyclic_subgroups(m.group(), maximal, Exec::parallel);
      CHECK(s == p);
    }
}

TEST_CASE("cocycle extension: parallel equals serial") {
  Threads t(4);
  for (const auto& m : corpus()) {
    auto h = cohomology::h2(m, true, Exec::serial);
    for (const auto& z : h.gens_restricted)
      CHECK(cohomology::extend_cocycle(m, z, Exec::serial) == cohomology::extend_cocycle(m, z, Exec::parallel));
  }
}

TEST_CASE("restriction across subgroups: parallel equals serial") {
  Threads t(4);
  for (const auto& m : corpus()) {
    brauer::H2uOptions s, p;
    s.exec = Exec::serial;
    p.exec = Exec::parallel;
    auto rs = brauer::h2u(m, s), rp = brauer::h2u(m, p);
    CHECK(rs.h2 == rp.h2);
    CHECK(rs.h2u == rp.h2u);
    CHECK(rs.generators == rp.generators);
    CHECK(rs.subgroups == rp.subgroups);
  }
}
