#include "unram/brauer/finab.hpp"

#include "unram/errors.hpp"
#include "unram/exactla/normal_forms.hpp"

namespace unram::brauer {

FinAbGroup FinAbGroup::from_orders(const IntVector& orders) {
  FinAbGroup g;
  g.invariants = exactla::divisor_chain(orders);
  return g;
}

Int FinAbGroup::order() const {
  Int o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

std::string FinAbGroup::to_string() const {
  if (invariants.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) s += ',';
    s += invariants[i].get_str();
  }
  return s;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  IntVector all = a.invariants;
  all.insert(all.end(), b.invariants.begin(), b.invariants.end());
  return FinAbGroup::from_orders(all);
}

bool HomFinAb::well_defined() const {
  if (r.rows() != source.size() || r.cols() != target.size()) return false;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j)
      if (Int(source[i] * r(i, j)) % target[j] != 0) return false;
  return true;
}

SubgroupOfFinAb SubgroupOfFinAb::whole(const IntVector& ambient) {
  return {ambient, IntMatrix::identity(ambient.size())};
}

SubgroupOfFinAb SubgroupOfFinAb::zero(const IntVector& ambient) {
  return {ambient, IntMatrix::diagonal(ambient)};
}

SubgroupOfFinAb SubgroupOfFinAb::generated(const IntVector& ambient,
                                           const std::vector<IntVector>& gens) {
  IntMatrix m = IntMatrix::diagonal(ambient);
  for (const auto& g : gens) {
    if (g.size() != ambient.size()) throw LengthMismatch("generator length differs from the ambient rank");
    m.append_row(g);
  }
  return {ambient, exactla::lattice_basis(m)};
}

bool SubgroupOfFinAb::trivial() const {
  Int det = 1, ord = 1;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    det *= k(i, i);
    ord *= ambient[i];
  }
  return det == ord;
}

bool SubgroupOfFinAb::contains(const IntVector& x) const { return exactla::in_lattice(k, x); }

namespace {

struct Structure {
  exactla::SnfResult snf;
  FinAbGroup group;
};

Structure structure_of(const SubgroupOfFinAb& h) {
  const std::size_t r = h.ambient.size();
  IntMatrix c(0, r);
  for (std::size_t i = 0; i < r; ++i) {
    IntVector v(r);
    v[i] = h.ambient[i];
    auto coef = exactla::lattice_coefficients(h.k, v);
    if (!coef) throw InternalInconsistency("subgroup lattice does not contain diag(s)");
    c.append_row(*coef);
  }
  Structure out;
  out.snf = exactla::snf_col_transforms(c);
  for (const auto& d : out.snf.divisors())
    if (d > 1) out.group.invariants.push_back(d);
  return out;
}

}  // namespace

FinAbGroup SubgroupOfFinAb::structure() const {
  if (ambient.empty()) return {};
  return structure_of(*this).group;
}

std::vector<IntVector> SubgroupOfFinAb::generators() const {
  std::vector<IntVector> gens;
  if (ambient.empty()) return gens;
  Structure st = structure_of(*this);
  const IntMatrix& vinv = st.snf.col_transform_inverse;
  IntVector divs = st.snf.divisors();
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (divs[i] <= 1) continue;
    IntVector g = exactla::row_times(vinv.row(i), k);
    for (std::size_t j = 0; j < g.size(); ++j) mpz_fdiv_r(g[j].get_mpz_t(), g[j].get_mpz_t(), ambient[j].get_mpz_t());
    gens.push_back(std::move(g));
  }
  return gens;
}

SubgroupOfFinAb kernel_of_hom(const HomFinAb& f) {
  if (!f.well_defined()) throw InputError("homomorphism is not well defined");
  if (f.target.empty()) return SubgroupOfFinAb::whole(f.source);
  IntMatrix sol = exactla::solve_mod(f.r, f.target);
  IntMatrix m = exactla::vstack(IntMatrix::diagonal(f.source), sol);
  return {f.source, exactla::lattice_basis(m)};
}

SubgroupOfFinAb intersect(const SubgroupOfFinAb& a, const SubgroupOfFinAb& b) {
  if (a.ambient != b.ambient) throw InputError("subgroups of different ambient groups");
  const std::size_t r = a.ambient.size();
  if (r == 0) return a;
  // (x, y) with x K_a = -y K_b
  IntMatrix n = exactla::nullspace_saturated(exactla::vstack(a.k, b.k));
  IntMatrix common = n.submatrix(0, 0, n.rows(), r) * a.k;
  return {a.ambient, exactla::lattice_basis(common)};
}

SubgroupOfFinAb intersect(const std::vector<SubgroupOfFinAb>& subs) {
  if (subs.empty()) throw InputError("intersection of an empty family");
  SubgroupOfFinAb acc = subs[0];
  for (std::size_t i = 1; i < subs.size() && !acc.trivial(); ++i) acc = intersect(acc, subs[i]);
  return acc;
}

}  // namespace unram::brauer
