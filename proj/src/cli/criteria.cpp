#include "unram/cli/criteria.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>

#include "unram/brauer/brauer.hpp"
#include "unram/catalog/codes.hpp"
#include "unram/catalog/families.hpp"
#include "unram/cohomology/cohomology.hpp"
#include "unram/cohomology/oracle.hpp"
#include "unram/errors.hpp"

namespace unram::cli {

using brauer::FinAbGroup;
using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;
using group::GroupPtr;
using group::Index;
using group::MatGroup;

namespace {

GroupPtr share(MatGroup g) { return std::make_shared<const MatGroup>(std::move(g)); }
GLattice natural(MatGroup g) { return GLattice(share(std::move(g))); }

IntMatrix perm_matrix(const std::vector<std::size_t>& p, int sign = 1) {
  IntMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = sign;
  return m;
}

std::vector<std::size_t> rotation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

std::vector<std::size_t> reflection(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

bool prime_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

std::string spell(const IntVector& v) { return FinAbGroup::from_orders(v).to_string(); }

// Accumulates item checks into one outcome.
struct Tally {
  bool ok = true;
  std::vector<std::string> items, stable;

  void item(const std::string& label, bool pass, const std::string& got) {
    ok = ok && pass;
    items.push_back(label + "=" + got + (pass ? "" : " (FAIL)"));
    stable.push_back(items.back());
  }
  // value check plus an item budget
  void timed(const std::string& label, const std::string& got, const std::string& want, double secs,
             double budget) {
    const bool in_time = secs <= budget;
    ok = ok && got == want && in_time;
    std::string s = label + "=" + got, flags;
    if (got != want) flags += " (want " + want + ")";
    if (!in_time) flags += " (over " + fmt_seconds(budget) + ")";
    items.push_back(s + " " + fmt_seconds(secs) + flags);
    stable.push_back(s + flags);
  }
  CheckOutcome done() const {
    std::string d, sd;
    for (std::size_t i = 0; i < items.size(); ++i) {
      d += (i ? "; " : "") + items[i];
      sd += (i ? "; " : "") + stable[i];
    }
    return {ok, d, sd};
  }
};

void check_h2u(Tally& t, const std::string& label, const GLattice& m, const std::string& want, double budget) {
  auto t0 = Clock::now();
  std::string got = brauer::h2u(m).h2u.to_string();
  t.timed(label, got, want, since(t0), budget);
}

CheckOutcome crit_d4n(Suite) {
  Tally t;
  for (int n = 1; n <= 3; ++n) check_h2u(t, "d4n(" + std::to_string(n) + ")", natural(catalog::family_d4n(n)), "2", 10);
  return t.done();
}

CheckOutcome crit_qd8n_q8n(Suite) {
  Tally t;
  for (int n = 1; n <= 2; ++n) check_h2u(t, "qd8n(" + std::to_string(n) + ")", natural(catalog::family_qd8n(n)), "2", 60);
  for (int n = 1; n <= 2; ++n) check_h2u(t, "q8n(" + std::to_string(n) + ")", natural(catalog::family_q8n(n)), "2,2", 60);
  return t.done();
}

CheckOutcome crit_cp2p(Suite s) {
  Tally t;
  check_h2u(t, "cp2p(3)", natural(catalog::family_cp2p(3)), "3", 60);
  if (s == Suite::full) check_h2u(t, "cp2p(5)", natural(catalog::family_cp2p(5)), "5", 1800);
  return t.done();
}

CheckOutcome crit_g7(Suite) {
  Tally t;
  for (int i = 1; i <= 9; ++i) {
    std::string name = "g7_" + std::to_string(i);
    check_h2u(t, name, natural(catalog::builtin(name)), i == 9 ? "2,2" : "2", 5);
  }
  return t.done();
}

CheckOutcome crit_a6(Suite) {
  Tally t;
  auto t0 = Clock::now();
  GLattice m = natural(catalog::a6_norm1());
  t.item("h1", cohomology::h1(m).empty(), spell(cohomology::h1(m)));
  IntVector hm = cohomology::hminus1(m);
  t.item("hminus1", hm == IntVector{10}, spell(hm));
  std::string got = brauer::h2u(m).h2u.to_string();
  t.timed("h2u", got, "2", since(t0), 1200);
  return t.done();
}

CheckOutcome crit_carat(Suite) {
  Tally t;
  auto t0 = Clock::now();
  MatGroup g = catalog::builtin("carat_5_100_11");
  auto blocks = group::coordinate_blocks(g);
  std::vector<std::pair<std::size_t, std::size_t>> shape;  // (size, image order)
  for (const auto& b : blocks) shape.push_back({b.size(), group::block_image(g, b).order()});
  std::sort(shape.begin(), shape.end());
  std::string sdesc;
  for (const auto& [d, o] : shape) sdesc += (sdesc.empty() ? "" : "+") + std::to_string(d) + "[" + std::to_string(o) + "]";
  t.item("blocks", shape == std::vector<std::pair<std::size_t, std::size_t>>{{2, 8}, {3, 4}}, sdesc);
  std::string got = brauer::h2u(natural(std::move(g))).h2u.to_string();
  t.timed("h2u", got, "2", since(t0), 5);
  return t.done();
}

CheckOutcome crit_equiv(Suite) {
  Tally t;
  check_h2u(t, "d4_equiv", natural(catalog::builtin("d4_equiv")), "2", 5);
  return t.done();
}

struct BlockPair {
  std::string name;
  std::vector<IntMatrix> a, b;
};

std::vector<BlockPair> block_constructions() {
  auto d4 = catalog::d4n_generators(1);
  auto q8 = catalog::q8n_generators(1);
  auto qd = catalog::qd8n_generators(1);
  IntMatrix one = IntMatrix::identity(1), minus{{-1}};
  return {
      {"q8n(1)+Z", q8, {one, one}},
      {"d4n(1)+Z", d4, {one, one}},
      {"d4n(1)+sign", d4, {minus, one}},
      {"d4n(1)+d4n(1)", d4, d4},
      {"q8n(1)+q8n(1)", q8, q8},
      {"qd8n(1)+sign", qd, {minus, minus}},
  };
}

CheckOutcome crit_additivity(Suite) {
  Tally t;
  for (const auto& c : block_constructions()) {
    GLattice sum(share(group::block_sum_action(c.a, c.b)));
    const std::size_t da = c.a[0].rows(), db = c.b[0].rows();
    std::vector<std::size_t> ia(da), ib(db);
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), da);
    FinAbGroup whole = brauer::h2u(sum).h2u;
    FinAbGroup parts = brauer::direct_sum(brauer::h2u(sum.block(ia)).h2u, brauer::h2u(sum.block(ib)).h2u);
    bool pass = whole == parts && (c.name != "q8n(1)+Z" || whole.to_string() == "2,2");
    t.item(c.name, pass, whole.to_string());
  }
  return t.done();
}

CheckOutcome crit_oracle(Suite) {
  Tally t;
  auto t0 = Clock::now();
  std::vector<NamedLattice> ls = randomized_small_lattices(24, 20240601);
  for (const char* b : {"d4_equiv", "hurwitz_sl23", "sign_diag_4"}) ls.push_back({b, natural(catalog::builtin(b))});
  for (const char* f : {"d4n", "q8n", "qd8n"}) ls.push_back({std::string(f) + "(1)", natural(catalog::family(f, 1))});
  std::size_t agree = 0;
  for (const auto& [name, m] : ls) {
    IntVector a = cohomology::h2(m).invariants, b = cohomology::h2_oracle(m);
    if (a == b) ++agree;
    else t.item(name, false, spell(a) + " vs oracle " + spell(b));
  }
  const double secs = since(t0);
  t.item("agree", agree == ls.size(), std::to_string(agree) + "/" + std::to_string(ls.size()));
  t.ok = t.ok && secs <= 120;
  return t.done();
}

CheckOutcome crit_bicyclic_sylow(Suite) {
  Tally t;
  std::vector<NamedLattice> corpus = bicyclic_sylow_corpus();
  std::size_t vanish = 0;
  for (const auto& [name, m] : corpus) {
    if (!sylow_subgroups_bicyclic(m.group())) {
      t.item(name, false, "non-bicyclic Sylow");
      continue;
    }
    FinAbGroup u = brauer::h2u(m).h2u;
    if (u.trivial()) ++vanish;
    else t.item(name, false, u.to_string());
  }
  t.item("vanishing", vanish == corpus.size() && corpus.size() >= 50,
         std::to_string(vanish) + "/" + std::to_string(corpus.size()));
  return t.done();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

CheckOutcome crit_classify(Suite) {
  Tally t;
  const std::vector<std::vector<std::size_t>> want{
      {}, {1}, {2, 1}, {3, 3, 1}, {4, 6, 4, 1}, {5, 10, 10, 5, 1}, {6, 16, 22, 16, 6, 1}, {7, 23, 43, 43, 23, 7, 1}};
  catalog::C2kReport r7;
  for (int n = 1; n <= 7; ++n) {
    catalog::C2kReport r = catalog::classify_c2k(n);
    std::vector<std::size_t> got(r.orbits.begin() + 1, r.orbits.end());
    t.item("n=" + std::to_string(n), got == want[n], join(got));
    if (n == 7) r7 = std::move(r);
  }
  std::vector<std::size_t> sub(r7.subspaces.begin() + 1, r7.subspaces.begin() + 4);
  t.item("subspaces(n=7,k=1..3)", sub == std::vector<std::size_t>{127, 2667, 11811}, join(sub));
  t.item("total", r7.total_subspaces() == 29212, std::to_string(r7.total_subspaces()));

  auto split = catalog::split_trace_classes(r7, 3);
  const catalog::TraceVector a{0, 1, 2, 1, 2, 1, 0, 1}, b{0, 1, 0, 3, 0, 3, 0, 1};
  auto values = [&](const catalog::TraceVector& tv, int trace) {
    std::vector<int> out;
    auto it = split.find(tv);
    if (it == split.end()) return out;
    for (const auto& key : it->second) {
      auto k = key.find(trace);
      if (k == key.end() || k->second.empty()) return std::vector<int>{};
      out.push_back(k->second.front());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<int> want_t{-1, 3};
  bool split_ok = split.size() == 2 && values(a, 1) == want_t && values(b, 3) == want_t;
  t.item("T1,T3 splits", split_ok, std::to_string(split.size()) + " classes");
  return t.done();
}

CheckOutcome crit_b0(Suite) {
  Tally t;
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, MatGroup>> gs;
  for (const char* f : {"d4n", "q8n", "qd8n"}) gs.push_back({std::string(f) + "(1)", catalog::family(f, 1)});
  gs.push_back({"cp2p(3)", catalog::family_cp2p(3)});
  gs.push_back({"hurwitz_sl23", catalog::builtin("hurwitz_sl23")});
  for (int i = 1; i <= 9; ++i) gs.push_back({"g7_" + std::to_string(i), catalog::builtin("g7_" + std::to_string(i))});
  for (auto& [name, g] : gs) {
    FinAbGroup b = brauer::b0(share(std::move(g))).h2u;
    if (!b.trivial()) t.item(name, false, b.to_string());
  }
  const double secs = since(t0);
  t.item("b0 trivial", t.ok, std::to_string(gs.size()) + " groups");
  t.ok = t.ok && secs <= 300;
  return t.done();
}

bool divides_order(const IntVector& v, std::size_t n) {
  for (const auto& x : v)
    if (Int(static_cast<unsigned long>(n)) % x != 0) return false;
  return true;
}

CheckOutcome crit_properties(Suite) {
  Tally t;
  std::vector<NamedLattice> base{{"d4n(1)", natural(catalog::family_d4n(1))},
                                 {"q8n(1)", natural(catalog::family_q8n(1))},
                                 {"qd8n(1)", natural(catalog::family_qd8n(1))},
                                 {"g7_2", natural(catalog::builtin("g7_2"))},
                                 {"d4_equiv", natural(catalog::builtin("d4_equiv"))}};
  std::size_t conj = 0, conj_ok = 0;
  bool pre_ok = true, max_ok = true, div_ok = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const GLattice& m0 = base[i].lattice;
    brauer::H2uResult ref = brauer::h2u(m0);
    for (int j = 0; j < 4; ++j) {
      IntMatrix p = random_unimodular(m0.dim(), 1000 * i + j + 1);
      IntMatrix pi = exactla::unimodular_inverse(p);
      std::vector<IntMatrix> imgs;
      for (std::size_t s = 0; s < m0.num_generators(); ++s) imgs.push_back(p * m0.rho_generator(s) * pi);
      GLattice m(m0.group_ptr(), std::move(imgs));
      brauer::H2uResult r = brauer::h2u(m);
      ++conj;
      if (r.h2 == ref.h2 && r.h2u == ref.h2u) ++conj_ok;
    }
    brauer::H2uOptions raw;
    raw.preprocess = false;
    pre_ok = pre_ok && brauer::h2u(m0, raw).h2u == ref.h2u &&
             cohomology::h2(m0, false).invariants == ref.h2.invariants;
    brauer::H2uOptions all;
    all.maximal_only = false;
    max_ok = max_ok && brauer::h2u(m0, all).h2u == ref.h2u;
    div_ok = div_ok && divides_order(ref.h2.invariants, m0.order()) &&
             divides_order(cohomology::h1(m0), m0.order()) && divides_order(cohomology::hminus1(m0), m0.order());
  }
  t.item("conjugation", conj == 20 && conj_ok == conj, std::to_string(conj_ok) + "/" + std::to_string(conj));
  t.item("preprocess", pre_ok, pre_ok ? "equal" : "differ");
  t.item("maximal-only", max_ok, max_ok ? "equal" : "differ");
  t.item("divisors", div_ok, div_ok ? "divide |G|" : "do not divide |G|");
  return t.done();
}

}  // namespace

bool sylow_subgroups_bicyclic(const MatGroup& g) {
  std::size_t n = g.order();
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    // grow a maximal p-subgroup, which is a Sylow subgroup
    group::Subgroup cur = group::subgroup_generated(g, {});
    for (Index x = 1; x < g.order(); ++x) {
      if (!prime_power_of(g.element_order(x), p)) continue;
      if (std::binary_search(cur.elements.begin(), cur.elements.end(), x)) continue;
      std::vector<Index> gens = cur.generators;
      gens.push_back(x);
      group::Subgroup next = group::subgroup_generated(g, gens);
      if (prime_power_of(next.order(), p)) cur = std::move(next);
    }
    if (!group::is_bicyclic(cur)) return false;
  }
  return true;
}

std::vector<NamedLattice> bicyclic_sylow_corpus() {
  std::vector<NamedLattice> out;
  auto add_group = [&](const std::string& name, const std::vector<IntMatrix>& gens, std::vector<IntMatrix> twist) {
    GroupPtr g = share(MatGroup::close(gens[0].rows(), gens));
    out.push_back({name + "/natural", GLattice(g)});
    out.push_back({name + "/trivial", GLattice(g, std::vector<IntMatrix>(gens.size(), IntMatrix::identity(1)))});
    if (!twist.empty()) out.push_back({name + "/twisted", GLattice(g, std::move(twist))});
    if (g->order() <= 12) out.push_back({name + "/J", brauer::augmentation_quotient(g)});
  };
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    std::vector<IntMatrix> twist;
    if (n % 2 == 0) twist.push_back(perm_matrix(rotation(n), -1));
    add_group("C" + std::to_string(n), {perm_matrix(rotation(n))}, std::move(twist));
  }
  for (std::size_t n : {3, 5, 6, 7}) {
    IntMatrix r = perm_matrix(rotation(n)), s = perm_matrix(reflection(n));
    add_group("D" + std::to_string(n), {r, s}, {r, perm_matrix(reflection(n), -1)});
  }
  add_group("A4", {perm_matrix({1, 2, 0, 3}), perm_matrix({1, 0, 3, 2})}, {});
  for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 4}, {3, 3}, {2, 6}}) {
    std::vector<IntMatrix> g1{perm_matrix(rotation(a)), IntMatrix::identity(a)};
    std::vector<IntMatrix> g2{IntMatrix::identity(b), perm_matrix(rotation(b))};
    add_group("C" + std::to_string(a) + "xC" + std::to_string(b), group::block_sum_action(g1, g2).generators(), {});
  }
  add_group("C6_hex", {IntMatrix{{1, 1}, {-1, 0}}}, {});
  add_group("D6_hex", {IntMatrix{{1, 1}, {-1, 0}}, IntMatrix{{0, 1}, {1, 0}}}, {});
  add_group("S3_root", {IntMatrix{{0, 1}, {-1, -1}}, IntMatrix{{0, 1}, {1, 0}}}, {});
  return out;
}

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) {
    if (rng() & 1) p(0, 0) = -1;
    return p;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const Int c = mult(rng);
    for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
  }
  return p;
}

std::vector<NamedLattice> randomized_small_lattices(std::size_t count, std::uint64_t seed) {
  std::vector<std::pair<std::string, MatGroup>> base;
  auto add = [&](std::string n, std::size_t d, std::vector<IntMatrix> gens) {
    base.push_back({std::move(n), MatGroup::close(d, std::move(gens))});
  };
  add("c2_sign", 1, {IntMatrix{{-1}}});
  add("c4_rot", 2, {IntMatrix{{0, 1}, {-1, 0}}});
  add("c3_hex", 2, {IntMatrix{{0, 1}, {-1, -1}}});
  add("c6_hex", 2, {IntMatrix{{1, 1}, {-1, 0}}});
  add("d4_square", 2, {IntMatrix{{0, 1}, {-1, 0}}, IntMatrix{{1, 0}, {0, -1}}});
  add("d6_hex", 2, {IntMatrix{{1, 1}, {-1, 0}}, IntMatrix{{0, 1}, {1, 0}}});
  add("c2_unipotent", 2, {IntMatrix{{1, 0}, {1, -1}}});
  add("c3_perm", 3, {perm_matrix(rotation(3))});
  add("s3_perm", 3, {perm_matrix(rotation(3)), perm_matrix(reflection(3))});
  add("s3_perm_sign", 3, {perm_matrix(rotation(3)), perm_matrix(reflection(3), -1)});
  add("sign_diag_3", 3, catalog::builtin("sign_diag_3").generators());
  add("c4_perm", 4, {perm_matrix(rotation(4))});
  add("d4_perm", 4, {perm_matrix(rotation(4)), perm_matrix(reflection(4))});
  add("a4_perm", 4, {perm_matrix({1, 2, 0, 3}), perm_matrix({1, 0, 3, 2})});
  add("c6_perm_sign", 3, {perm_matrix(rotation(3), -1)});
  add("klein_perm", 4, {perm_matrix({1, 0, 3, 2}), perm_matrix({2, 3, 0, 1})});

  std::mt19937_64 rng(seed);
  std::vector<NamedLattice> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& [name, g] = base[rng() % base.size()];
    IntMatrix p = random_unimodular(g.dim(), rng());
    IntMatrix pi = exactla::unimodular_inverse(p);
    std::vector<IntMatrix> gens;
    for (const auto& x : g.generators()) gens.push_back(p * x * pi);
    out.push_back({name + "#" + std::to_string(i), natural(MatGroup::close(g.dim(), std::move(gens)))});
  }
  return out;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "D4n family: h2u = 2 for n = 1, 2, 3", false, 30, crit_d4n},
      {2, "QD8n / Q8n families: h2u = 2 and 2,2 for n = 1, 2", false, 240, crit_qd8n_q8n},
      {3, "Cp2 x| Cp: h2u = 3 at p = 3 (full suite adds p = 5)", false, 1860, crit_cp2p},
      {4, "g7_1..g7_8: h2u = 2; g7_9: h2u = 2,2", false, 45, crit_g7},
      {5, "a6_norm1: h1 = 0, hminus1 = 10, h2u = 2", true, 1200, crit_a6},
      {6, "carat_5_100_11: h2u = 2, blocks 2 + 3", false, 5, crit_carat},
      {7, "d4_equiv: h2u = 2", false, 5, crit_equiv},
      {8, "additivity over block sums; q8n(1) + Z gives 2,2", false, 120, crit_additivity},
      {9, "h2 agrees with the bar-complex oracle", false, 120, crit_oracle},
      {10, "bicyclic Sylow subgroups force h2u = 0", false, 300, crit_bicyclic_sylow},
      {11, "C2^k classification counts and T splits", false, 300, crit_classify},
      {12, "B0 vanishing", false, 300, crit_b0},
      {13, "property suite", false, 600, crit_properties},
  };
  return all;
}

std::vector<CriterionResult> run_criteria(Suite suite, int jobs) {
  const auto& all = acceptance_criteria();
  std::vector<CriterionResult> out(all.size());
  const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Criterion& c = all[i];
    CriterionResult& r = out[i];
    r.id = c.id;
    r.title = c.title;
    r.budget_seconds = c.budget_seconds;
    if (c.full_only && suite == Suite::fast) {
      r.skipped = true;
      r.detail = r.stable_detail = "full suite only";
      continue;
    }
    auto t0 = Clock::now();
    try {
      CheckOutcome o = c.check(suite);
      r.passed = o.passed;
      r.detail = o.detail;
      r.stable_detail = o.stable_detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = r.stable_detail = std::string("error: ") + e.what();
    }
    r.seconds = since(t0);
    if (r.seconds > c.budget_seconds) {
      r.passed = false;
      r.detail += "; over budget " + fmt_seconds(c.budget_seconds);
      r.stable_detail += "; over budget";
    }
  }
  return out;
}

}  // namespace unram::cli
