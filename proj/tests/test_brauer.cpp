#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "lattices.hpp"
#include "unram/brauer/brauer.hpp"
#include "unram/cohomology/cohomology.hpp"
#include "unram/errors.hpp"

using namespace unram;
using namespace unram::brauer;
using namespace testsupport;

namespace {

using Elem = std::vector<long>;

// every element of Z/s as a residue vector
std::vector<Elem> elements(const std::vector<long>& s) {
  std::vector<Elem> out{Elem(s.size(), 0)};
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Elem> next;
    for (const auto& e : out)
      for (long v = 0; v < s[i]; ++v) {
        Elem x = e;
        x[i] = v;
        next.push_back(x);
      }
    out = next;
  }
  return out;
}

IntVector ints(const std::vector<long>& v) { return IntVector(v.begin(), v.end()); }
std::vector<long> longs(const IntVector& v) { return to_longs(v); }

std::set<Elem> members(const SubgroupOfFinAb& h) {
  std::vector<long> s = longs(h.ambient);
  std::set<Elem> out;
  for (const auto& e : elements(s))
    if (h.contains(ints(e))) out.insert(e);
  return out;
}

std::set<Elem> brute_kernel(const HomFinAb& f) {
  std::set<Elem> out;
  for (const auto& e : elements(longs(f.source))) {
    bool zero = true;
    for (std::size_t j = 0; j < f.target.size(); ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < e.size(); ++i) acc += e[i] * f.r(i, j);
      if (acc % f.target[j] != 0) zero = false;
    }
    if (zero) out.insert(e);
  }
  return out;
}

// Structure of a finite abelian group from its element orders: the number
// of elements of order dividing m determines the invariants.
std::map<long, std::size_t> order_profile(const std::set<Elem>& h, const std::vector<long>& s) {
  std::map<long, std::size_t> prof;
  for (const auto& e : h) {
    long o = 1;
    for (std::size_t i = 0; i < e.size(); ++i) o = std::lcm(o, s[i] / std::gcd(s[i], e[i]));
    ++prof[o];
  }
  return prof;
}

std::map<long, std::size_t> order_profile_of(const FinAbGroup& g) {
  std::vector<long> s = longs(g.invariants);
  auto all = elements(s);
  return order_profile(std::set<Elem>(all.begin(), all.end()), s);
}

GroupPtr cyclic_product(std::size_t a, std::size_t b) {
  std::vector<IntMatrix> g1{perm_cycle(a).generators()[0], IntMatrix::identity(a)};
  std::vector<IntMatrix> g2{IntMatrix::identity(b), perm_cycle(b).generators()[0]};
  return share(group::block_sum_action(g1, g2));
}

}  // namespace

TEST_CASE("finite abelian groups") {
  CHECK(FinAbGroup::from_orders(ints({2, 3})).to_string() == "6");
  CHECK(FinAbGroup::from_orders(ints({4, 2, 1})).to_string() == "2,4");
  CHECK(FinAbGroup().to_string() == "0");
  CHECK(direct_sum(FinAbGroup::from_orders(ints({2})), FinAbGroup::from_orders(ints({2}))).to_string() == "2,2");
  CHECK(FinAbGroup::from_orders(ints({6, 4})).order() == 24);
}

TEST_CASE("kernel_of_hom examples") {
  HomFinAb zero{ints({2, 4}), ints({3}), IntMatrix(2, 1)};
  CHECK(kernel_of_hom(zero) == SubgroupOfFinAb::whole(ints({2, 4})));

  HomFinAb id{ints({2}), ints({2}), IntMatrix{{1}}};
  SubgroupOfFinAb k = kernel_of_hom(id);
  CHECK(k.k == IntMatrix{{2}});
  CHECK(k.trivial());

  HomFinAb f{ints({2, 2}), ints({2}), IntMatrix{{1}, {1}}};
  SubgroupOfFinAb kf = kernel_of_hom(f);
  CHECK(members(kf) == std::set<Elem>{{0, 0}, {1, 1}});
  CHECK(kf.structure().to_string() == "2");
  CHECK(kf.generators() == std::vector<IntVector>{ints({1, 1})});

  CHECK_THROWS_AS(kernel_of_hom(HomFinAb{ints({2}), ints({3}), IntMatrix{{1}}}), InputError);
  CHECK(kernel_of_hom(HomFinAb{ints({2}), {}, IntMatrix(1, 0)}) == SubgroupOfFinAb::whole(ints({2})));
}

TEST_CASE("kernels of random homomorphisms match enumeration") {
  std::mt19937 rng(23);
  const std::vector<std::vector<long>> sources{{2, 2}, {2, 4}, {6}, {2, 6}, {3, 3}, {2, 2, 2}, {4, 4}};
  const std::vector<std::vector<long>> targets{{2}, {4}, {2, 2}, {6}, {2, 4}, {3}};
  for (int rep = 0; rep < 60; ++rep) {
    auto s = sources[rng() % sources.size()];
    auto t = targets[rng() % targets.size()];
    IntMatrix r(s.size(), t.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) {
        // images of order dividing s_i
        long g = std::gcd(s[i], t[j]);
        r(i, j) = (t[j] / g) * long(rng() % g);
      }
    HomFinAb f{ints(s), ints(t), r};
    REQUIRE(f.well_defined());
    SubgroupOfFinAb k = kernel_of_hom(f);
    auto brute = brute_kernel(f);
    CHECK(members(k) == brute);
    CHECK(order_profile_of(k.structure()) == order_profile(brute, s));
    // generators lie in the kernel and generate it
    CHECK(SubgroupOfFinAb::generated(k.ambient, k.generators()) == k);
  }
}

TEST_CASE("intersections") {
  IntVector s = ints({2, 2});
  SubgroupOfFinAb a = SubgroupOfFinAb::generated(s, {ints({1, 0})});
  SubgroupOfFinAb b = SubgroupOfFinAb::generated(s, {ints({0, 1})});
  CHECK(intersect(std::vector<SubgroupOfFinAb>{a}) == a);
  CHECK(intersect(a, b).trivial());
  CHECK(intersect(std::vector<SubgroupOfFinAb>{a, b, a}).trivial());

  std::mt19937 rng(31);
  IntVector s6 = ints({6, 6});
  std::uniform_int_distribution<int> d(0, 5);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<SubgroupOfFinAb> subs;
    std::set<Elem> expect;
    for (int j = 0; j < 3; ++j) {
      std::vector<IntVector> gens;
      for (int g = 0; g < 1 + rep % 2; ++g) gens.push_back(ints({d(rng), d(rng)}));
      subs.push_back(SubgroupOfFinAb::generated(s6, gens));
      auto m = members(subs.back());
      if (j == 0) {
        expect = m;
      } else {
        std::set<Elem> both;
        std::set_intersection(expect.begin(), expect.end(), m.begin(), m.end(),
                              std::inserter(both, both.begin()));
        expect = both;
      }
    }
    SubgroupOfFinAb got = intersect(subs);
    CHECK(members(got) == expect);
    CHECK(order_profile_of(got.structure()) == order_profile(expect, {6, 6}));
  }
}

TEST_CASE("schur multipliers") {
  for (std::size_t n : {2, 3, 5, 6}) {
    GroupPtr c = share(perm_cycle(n));
    CHECK(schur_qz(c).trivial());
    CHECK(schur_qz_bockstein(c).group.trivial());
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {2, 3}, {4, 4}, {2, 6}}) {
    GroupPtr g = cyclic_product(a, b);
    CAPTURE(a);
    CAPTURE(b);
    FinAbGroup expect = FinAbGroup::from_orders({Int(std::gcd(a, b))});
    CHECK(schur_qz(g) == expect);
    if (a * b <= 12) CHECK(schur_qz_bockstein(g).group == expect);
  }
  GroupPtr s3 = share(catalog::builtin("sign_diag_3"));
  CHECK(schur_qz(s3).to_string() == "2,2,2");
  CHECK(schur_qz_bockstein(s3).group.to_string() == "2,2,2");
  CHECK(schur_qz(share(catalog::family_d4n(1))).to_string() == "2");
  CHECK(schur_qz(share(catalog::family_q8n(1))).trivial());
  CHECK_THROWS_AS(schur_qz(share(catalog::a6_norm1())), GroupTooLargeForB0);
  CHECK_THROWS_AS(schur_qz_bockstein(share(catalog::family_qd8n(1))), GroupTooLargeForB0);
}

TEST_CASE("bockstein tables are normalized cocycles of the listed order") {
  GroupPtr g = share(catalog::family_d4n(1));
  SchurTables t = schur_qz_bockstein(g);
  REQUIRE(t.tables.size() == 1);
  CHECK(t.modulus == 8);
  const std::size_t n1 = g->order() - 1;
  auto at = [&](group::Index a, group::Index b) -> Int {
    if (a == 0 || b == 0) return 0;
    return t.tables[0][(a - 1) * n1 + (b - 1)];
  };
  for (group::Index a = 0; a < g->order(); ++a)
    for (group::Index b = 0; b < g->order(); ++b)
      for (group::Index c = 0; c < g->order(); ++c) {
        Int v = at(b, c) - at(g->mul(a, b), c) + at(a, g->mul(b, c)) - at(a, b);
        CHECK(v % 8 == 0);
      }
}

TEST_CASE("schur multiplier routes agree on small groups") {
  for (const auto& [name, m] : small_lattices()) {
    if (m.order() > kBocksteinMaxOrder) continue;
    CAPTURE(name);
    GroupPtr g = m.group_ptr();
    CHECK(schur_qz(g) == schur_qz_bockstein(g).group);
  }
}

TEST_CASE("b0 values") {
  for (const char* f : {"d4n", "q8n", "qd8n"}) CHECK(b0(share(catalog::family(f, 1))).h2u.trivial());
  CHECK(b0(share(catalog::family_cp2p(3))).h2u.trivial());
  CHECK(b0(share(catalog::builtin("hurwitz_sl23"))).h2u.trivial());
  CHECK(b0(share(catalog::builtin("sign_diag_3"))).h2u.trivial());
  CHECK(b0(share(perm_cycle(1))).h2u.trivial());
  CHECK_THROWS_AS(b0(share(catalog::family_d4n(9))), GroupTooLargeForB0);
  CHECK(b0(share(catalog::family_d4n(9)), {}, 72).h2u.trivial());
}

TEST_CASE("h2u small values") {
  CHECK(h2u(natural(catalog::family_d4n(1))).h2u.to_string() == "2");
  CHECK(h2u(natural(catalog::family_q8n(1))).h2u.to_string() == "2,2");
  CHECK(h2u(natural(catalog::family_qd8n(1))).h2u.to_string() == "2");
  CHECK(h2u(natural(MatGroup::close(3, {}))).h2u.trivial());
  // all Sylow subgroups bicyclic
  CHECK(h2u(natural(perm_cycle(6))).h2u.trivial());
  CHECK(h2u(natural(*cyclic_product(2, 4))).h2u.trivial());
}

TEST_CASE("h2u generators and sub-chain property") {
  for (const char* name : {"d4n_1", "q8n_1", "qd8n_1", "sign_diag_3", "d4_perm"}) {
    for (const auto& nl : small_lattices()) {
      if (nl.name != name) continue;
      CAPTURE(name);
      H2uResult r = h2u(nl.lattice);
      CHECK(r.generators.size() == r.h2u.invariants.size());
      CHECK(SubgroupOfFinAb::generated(r.h2.invariants, r.generators).structure() == r.h2u);
      // a subgroup of H^2: its invariants divide the top ones of H^2
      const auto& a = r.h2u.invariants;
      const auto& b = r.h2.invariants;
      REQUIRE(a.size() <= b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[b.size() - a.size() + i] % a[i] == 0);
    }
  }
}

TEST_CASE("br_u reports") {
  BrauerReport q = br_u(natural(catalog::family_q8n(1)));
  REQUIRE(q.b0.has_value());
  CHECK(q.b0->trivial());
  CHECK(q.h2u.to_string() == "2,2");
  CHECK(q.combined.to_string() == "2,2");

  BrauerReport t = br_u(natural(MatGroup::close(2, {})));
  CHECK(t.b0->trivial());
  CHECK(t.h2u.trivial());
  CHECK(t.combined.trivial());

  BrauerReport a = br_u(natural(catalog::a6_norm1()));
  CHECK_FALSE(a.b0.has_value());
  CHECK(a.h2u.to_string() == "2");
  CHECK(a.combined.to_string() == "2");
}

TEST_CASE("subgroup selection modes agree") {
  std::vector<GLattice> ls;
  for (const auto& nl : small_lattices()) ls.push_back(nl.lattice);
  ls.push_back(natural(catalog::builtin("d4_equiv")));
  ls.push_back(natural(catalog::builtin("carat_5_100_11")));
  ls.push_back(natural(catalog::builtin("g7_9")));
  ls.push_back(natural(catalog::family_d4n(2)));
  for (const auto& m : ls) {
    FinAbGroup ref = h2u(m).h2u;
    CHECK(h2u(m, {false, true, true, Exec::parallel}).h2u == ref);
    CHECK(h2u(m, {true, false, true, Exec::parallel}).h2u == ref);
    CHECK(h2u(m, {false, false, false, Exec::serial}).h2u == ref);
    CHECK(h2u(m, {true, true, false, Exec::serial}).h2u == ref);
  }
}

TEST_CASE("h2u and b0 under integral conjugation") {
  std::mt19937 rng(41);
  std::vector<GLattice> ls{natural(catalog::family_d4n(1)), natural(catalog::family_q8n(1)),
                           natural(catalog::family_qd8n(1)), natural(catalog::builtin("g7_2")),
                           natural(catalog::builtin("d4_equiv"))};
  for (const auto& m0 : ls) {
    FinAbGroup ref = h2u(m0).h2u;
    for (int i = 0; i < 4; ++i) {
      GLattice m = conjugated(m0, rng);
      CHECK(h2u(m).h2u == ref);
      MatGroup c = MatGroup::close(m.dim(), [&] {
        std::vector<IntMatrix> gs;
        for (std::size_t s = 0; s < m.num_generators(); ++s) gs.push_back(m.rho_generator(s));
        return gs;
      }());
      CHECK(b0(share(std::move(c))).h2u.trivial());
    }
  }
}

TEST_CASE("h2u additivity over block sums") {
  // (G, M1 + M2) against the blocks of the same abstract action
  struct Pair {
    std::vector<IntMatrix> a, b;
  };
  auto d4 = catalog::d4n_generators(1);
  auto q8 = catalog::q8n_generators(1);
  auto qd = catalog::qd8n_generators(1);
  std::vector<Pair> cases{
      {q8, {IntMatrix::identity(1), IntMatrix::identity(1)}},
      {d4, {IntMatrix::identity(1), IntMatrix::identity(1)}},
      {d4, {IntMatrix{{-1}}, IntMatrix{{1}}}},
      {d4, d4},
      {q8, q8},
      {qd, {IntMatrix{{-1}}, IntMatrix{{-1}}}},
  };
  for (const auto& c : cases) {
    GroupPtr g = share(group::block_sum_action(c.a, c.b));
    GLattice sum(g);
    const std::size_t da = c.a[0].rows();
    std::vector<std::size_t> ia(da), ib(c.b[0].rows());
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), da);
    FinAbGroup whole = h2u(sum).h2u;
    CHECK(whole == direct_sum(h2u(sum.block(ia)).h2u, h2u(sum.block(ib)).h2u));
  }
  GLattice qt = natural(group::block_sum_action(q8, {IntMatrix::identity(1), IntMatrix::identity(1)}));
  CHECK(h2u(qt).h2u.to_string() == "2,2");
}
