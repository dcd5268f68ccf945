#include "unram/brauer/brauer.hpp"

#include <exception>

#include "unram/cohomology/cohomology.hpp"
#include "unram/cohomology/oracle.hpp"
#include "unram/errors.hpp"
#include "unram/exactla/normal_forms.hpp"

namespace unram::brauer {

using cohomology::CocycleTable;
using cohomology::H2Data;
using group::Index;
using group::Subgroup;

H2uResult h2u(const GLattice& m, const H2uOptions& opt) {
  H2uResult out;
  H2Data h = cohomology::h2(m, opt.preprocess, opt.exec);
  out.h2.invariants = h.invariants;
  if (h.invariants.empty()) return out;

  const MatGroup& g = m.group();
  std::vector<CocycleTable> tables;
  for (const auto& z : h.gens_restricted) tables.push_back(cohomology::extend_cocycle(m, z, opt.exec));

  std::vector<Subgroup> subs = group::bicyclic_subgroups(g, opt.maximal_only, opt.exec);
  if (opt.conjugacy_reps) subs = group::conjugacy_reduce(g, subs);
  out.subgroups = subs.size();

  std::vector<HomFinAb> homs(subs.size());
  std::exception_ptr err;
  const bool par = opt.exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 1) if (par)
  for (std::size_t j = 0; j < subs.size(); ++j) {
    try {
      GLattice mh = m.restrict_to(subs[j]);
      H2Data hh = cohomology::h2(mh, opt.preprocess, Exec::serial);
      HomFinAb f{h.invariants, hh.invariants, IntMatrix(h.invariants.size(), hh.invariants.size())};
      for (std::size_t i = 0; i < tables.size(); ++i) {
        IntVector r = cohomology::restrict_class(m, subs[j], hh, tables[i]);
        for (std::size_t c = 0; c < r.size(); ++c) f.r(i, c) = r[c];
      }
      homs[j] = std::move(f);
    } catch (...) {
#pragma omp critical(h2u_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  SubgroupOfFinAb k = SubgroupOfFinAb::whole(h.invariants);
  for (const auto& f : homs) {
    if (k.trivial()) break;
    k = intersect(k, kernel_of_hom(f));
    ++out.subgroups_used;
  }
  out.h2u = k.structure();
  out.generators = k.generators();
  return out;
}

GLattice augmentation_quotient(const GroupPtr& gp) {
  const MatGroup& g = *gp;
  const std::size_t n = g.order();
  if (n == 1) return GLattice(gp, std::vector<IntMatrix>(g.generators().size(), IntMatrix(0, 0)));
  const Index last = static_cast<Index>(n - 1);
  std::vector<IntMatrix> imgs;
  for (Index s : g.generator_indices()) {
    IntMatrix r(n - 1, n - 1);
    for (Index x = 0; x < last; ++x) {
      Index y = g.mul(x, s);
      if (y == last)
        for (std::size_t c = 0; c < n - 1; ++c) r(x, c) = -1;
      else
        r(x, y) = 1;
    }
    imgs.push_back(std::move(r));
  }
  return GLattice(gp, std::move(imgs));
}

namespace {

void check_b0_budget(const MatGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw GroupTooLargeForB0("group order " + std::to_string(g.order()) +
                             " exceeds the B0 budget " + std::to_string(max_order));
}

}  // namespace

FinAbGroup schur_qz(const GroupPtr& g, std::size_t max_order) {
  check_b0_budget(*g, max_order);
  if (g->order() == 1) return {};
  FinAbGroup out;
  out.invariants = cohomology::h2(augmentation_quotient(g)).invariants;
  return out;
}

SchurTables schur_qz_bockstein(const GroupPtr& gp, std::size_t max_order) {
  const MatGroup& g = *gp;
  check_b0_budget(g, max_order);
  SchurTables out;
  const std::size_t n = g.order(), n1 = n - 1;
  out.modulus = Int(static_cast<unsigned long>(n));
  if (n == 1) return out;

  GLattice triv(gp, std::vector<IntMatrix>(g.generators().size(), IntMatrix::identity(1)));
  IntMatrix d2 = cohomology::bar_d2(triv), d3 = cohomology::bar_d3(triv);
  IntVector mods(d3.cols(), out.modulus);
  IntMatrix z = exactla::solve_mod(d3, mods);  // cocycles mod n, Hermite basis

  // coboundaries, n Z^{(N-1)^2} and the Bockstein carries
  IntMatrix sub = exactla::vstack(d2, IntMatrix::diagonal(IntVector(n1 * n1, out.modulus)));
  group::Abelianization ab = group::abelianization(g);
  for (std::size_t t = 0; t < ab.invariants.size(); ++t) {
    IntVector carry(n1 * n1);
    for (Index a = 1; a < n; ++a)
      for (Index b = 1; b < n; ++b) {
        Int s = ab.image[a][t] + ab.image[b][t] - ab.image[g.mul(a, b)][t];
        mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), ab.invariants[t].get_mpz_t());
        carry[(a - 1) * n1 + (b - 1)] = s;
      }
    sub.append_row(carry);
  }

  IntMatrix coords(0, z.rows());
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    auto c = exactla::lattice_coefficients(z, sub.row(i));
    if (!c) throw InternalInconsistency("coboundary outside the mod-n cocycles");
    coords.append_row(*c);
  }
  exactla::SnfResult s = exactla::snf_col_transforms(coords);
  if (s.rank != z.rows()) throw InternalInconsistency("mod-n quotient is not finite");
  IntVector divs = s.divisors();
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (divs[i] <= 1) continue;
    out.group.invariants.push_back(divs[i]);
    IntVector t = exactla::row_times(s.col_transform_inverse.row(i), z);
    for (auto& x : t) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), out.modulus.get_mpz_t());
    out.tables.push_back(std::move(t));
  }
  return out;
}

H2uResult b0(const GroupPtr& g, const H2uOptions& opt, std::size_t max_order) {
  check_b0_budget(*g, max_order);
  if (g->order() == 1) return {};
  return h2u(augmentation_quotient(g), opt);
}

BrauerReport br_u(const GLattice& m, const H2uOptions& opt, std::size_t b0_max_order) {
  BrauerReport r;
  r.h2u = h2u(m, opt).h2u;
  if (m.order() <= b0_max_order) r.b0 = b0(m.group_ptr(), opt, b0_max_order).h2u;
  r.combined = r.b0 ? direct_sum(*r.b0, r.h2u) : r.h2u;
  return r;
}

}  // namespace unram::brauer
