#include "doctest.h"
#include "unram/catalog/families.hpp"
#include "unram/errors.hpp"

using namespace unram;
using namespace unram::group;

namespace {

std::size_t involutions(const MatGroup& g) {
  std::size_t c = 0;
  for (Index i = 0; i < g.order(); ++i) c += g.element_order(i) == 2;
  return c;
}

}  // namespace

TEST_CASE("d4n family") {
  for (int n : {1, 2, 3}) {
    MatGroup g = catalog::family_d4n(n);
    CHECK(g.order() == std::size_t(8 * n));
    CHECK(g.dim() == std::size_t(2 * n + 2));
    CHECK_FALSE(g.is_abelian());
  }
  // dihedral of order 8: five involutions, two elements of order 4
  Fingerprint f = fingerprint(catalog::family_d4n(1));
  CHECK(f.order_histogram[2] == 5);
  CHECK(f.order_histogram[4] == 2);
}

TEST_CASE("qd8n and q8n families") {
  MatGroup qd = catalog::family_qd8n(1);
  CHECK(qd.order() == 16);
  CHECK(qd.dim() == 4);
  MatGroup q = catalog::family_q8n(1);
  CHECK(q.order() == 8);
  CHECK(involutions(q) == 1);
  MatGroup q2 = catalog::family_q8n(2);
  CHECK(q2.order() == 16);
  CHECK(q2.dim() == 8);
  CHECK(involutions(q2) == 1);
  // cyclic index-2 subgroup
  bool has8 = false;
  for (Index i = 0; i < q2.order(); ++i) has8 |= q2.element_order(i) == 8;
  CHECK(has8);
  CHECK(catalog::family_qd8n(2).order() == 32);
}

TEST_CASE("cp2p family") {
  MatGroup g = catalog::family_cp2p(3);
  CHECK(g.order() == 27);
  CHECK(g.dim() == 6);
  MatGroup g5 = catalog::family_cp2p(5);
  CHECK(g5.order() == 125);
  CHECK(g5.dim() == 20);
  CHECK_THROWS_AS(catalog::family_cp2p(4), NotOddPrime);
  CHECK_THROWS_AS(catalog::family_cp2p(2), NotOddPrime);
  // companion block A has order p: sigma^p restricted to block row 0 hits A
  auto gens = catalog::cp2p_generators(3);
  IntMatrix s3 = gens[0] * gens[0] * gens[0];
  IntMatrix a = s3.submatrix(0, 0, 2, 2);
  CHECK((a * a * a).is_identity());
  CHECK_FALSE(a.is_identity());
}

TEST_CASE("builtins") {
  for (int i = 1; i <= 9; ++i) {
    MatGroup g = catalog::builtin("g7_" + std::to_string(i));
    CHECK(g.order() == 8);
    CHECK(g.is_abelian());
    CHECK(fingerprint(g).exponent == 2);
  }
  CHECK(catalog::builtin("d4_equiv").order() == 8);
  CHECK_FALSE(catalog::builtin("d4_equiv").is_abelian());
  CHECK(catalog::builtin("carat_5_100_11").order() == 8);
  CHECK(catalog::builtin("sign_diag_4").order() == 16);

  MatGroup h = catalog::builtin("hurwitz_sl23");
  CHECK(h.order() == 24);
  CHECK(involutions(h) == 1);
  // Sylow-2: the elements of 2-power order form Q8
  std::vector<Index> two;
  for (Index i = 0; i < h.order(); ++i)
    if (h.element_order(i) == 1 || h.element_order(i) == 2 || h.element_order(i) == 4)
      two.push_back(i);
  CHECK(two.size() == 8);
  CHECK(is_closed_subset(h, two));
  CHECK_FALSE(is_abelian(h, two));

  CHECK_THROWS_AS(catalog::builtin("nope"), UnknownBuiltin);
  CHECK_THROWS_AS(catalog::family("nope", 1), UnknownBuiltin);
}

TEST_CASE("a6 norm-one lattice") {
  MatGroup g = catalog::a6_norm1();
  CHECK(g.order() == 360);
  CHECK(g.dim() == 9);
  CHECK(abelianization(g).invariants.empty());
  for (const auto& s : g.generators()) {
    CHECK(exactla::is_unimodular(s));
    // each row is a unit vector or the all -1 relation row
    for (std::size_t i = 0; i < 9; ++i) {
      long sum = 0;
      for (std::size_t j = 0; j < 9; ++j) sum += s(i, j).get_si();
      CHECK((sum == 1 || sum == -9));
    }
  }
}
