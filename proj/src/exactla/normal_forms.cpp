#include "unram/exactla/normal_forms.hpp"

#include <algorithm>
#include <optional>

#include "unram/errors.hpp"

namespace unram::exactla {

namespace {

// Dense Smith elimination on m in place. Any of u, v, vinv may be null;
// non-null ones are kept consistent with u * A * v = m and v * vinv = I.
class SnfEngine {
 public:
  SnfEngine(IntMatrix& m, IntMatrix* u, IntMatrix* v, IntMatrix* vinv)
      : m_(m), u_(u), v_(v), vinv_(vinv) {}

  std::size_t run() {
    const std::size_t nr = m_.rows(), nc = m_.cols();
    std::size_t t = 0;
    for (; t < nr && t < nc; ++t) {
      std::size_t pr, pc;
      if (!min_entry(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        // Column t and row t are clean except the pivot. Enforce d_t | rest.
        std::size_t bad = nr;
        for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
          for (std::size_t j = t + 1; j < nc; ++j)
            if (!mpz_divisible_p(m_(i, j).get_mpz_t(), m_(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == nr) break;
        add_row(t, bad, 1);
      }
      if (sgn(m_(t, t)) < 0) negate_row(t);
    }
    return t;
  }

 private:
  bool min_entry(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    for (std::size_t i = t; i < m_.rows(); ++i)
      for (std::size_t j = t; j < m_.cols(); ++j) {
        const Int& x = m_(i, j);
        if (sgn(x) == 0) continue;
        if (!found || cmpabs(x, m_(pr, pc)) < 0) {
          pr = i;
          pc = j;
          found = true;
          if (x == 1 || x == -1) return true;
        }
      }
    return found;
  }

  static int cmpabs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  }

  // Returns true when column t below the pivot is zero; otherwise a smaller
  // pivot has been swapped in and the caller restarts.
  bool clear_column(std::size_t t) {
    std::size_t smallest = t;
    for (std::size_t i = t + 1; i < m_.rows(); ++i) {
      if (sgn(m_(i, t)) == 0) continue;
      Int q = nearest_quotient(m_(i, t), m_(t, t));
      add_row(i, t, -q);
      if (sgn(m_(i, t)) != 0 && (smallest == t || cmpabs(m_(i, t), m_(smallest, t)) < 0))
        smallest = i;
    }
    if (smallest == t) return true;
    swap_rows(t, smallest);
    return false;
  }

  bool clear_row(std::size_t t) {
    std::size_t smallest = t;
    for (std::size_t j = t + 1; j < m_.cols(); ++j) {
      if (sgn(m_(t, j)) == 0) continue;
      Int q = nearest_quotient(m_(t, j), m_(t, t));
      add_col(j, t, -q);
      if (sgn(m_(t, j)) != 0 && (smallest == t || cmpabs(m_(t, j), m_(t, smallest)) < 0))
        smallest = j;
    }
    if (smallest == t) return true;
    swap_cols(t, smallest);
    return false;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_rows(a, b);
    if (u_) u_->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    m_.swap_cols(a, b);
    if (v_) v_->swap_cols(a, b);
    if (vinv_) vinv_->swap_rows(a, b);
  }
  void add_row(std::size_t a, std::size_t b, const Int& f) {
    m_.add_row_multiple(a, b, f);
    if (u_) u_->add_row_multiple(a, b, f);
  }
  // col a += f col b; V picks up the same column op, V^-1 the inverse row op.
  void add_col(std::size_t a, std::size_t b, const Int& f) {
    m_.add_col_multiple(a, b, f);
    if (v_) v_->add_col_multiple(a, b, f);
    if (vinv_) vinv_->add_row_multiple(b, a, -f);
  }
  void negate_row(std::size_t a) {
    m_.negate_row(a);
    if (u_) u_->negate_row(a);
  }

  IntMatrix& m_;
  IntMatrix* u_;
  IntMatrix* v_;
  IntMatrix* vinv_;
};

}  // namespace

IntVector SnfResult::divisors() const {
  IntVector d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = normal(i, i);
  return d;
}

SnfResult snf(const IntMatrix& a) {
  SnfResult r;
  r.normal = a;
  r.row_transform = IntMatrix::identity(a.rows());
  r.col_transform = IntMatrix::identity(a.cols());
  r.col_transform_inverse = IntMatrix::identity(a.cols());
  SnfEngine e(r.normal, &r.row_transform, &r.col_transform, &r.col_transform_inverse);
  r.rank = e.run();
  return r;
}

SnfResult snf_col_transforms(const IntMatrix& a) {
  SnfResult r;
  r.normal = a;
  r.col_transform = IntMatrix::identity(a.cols());
  r.col_transform_inverse = IntMatrix::identity(a.cols());
  SnfEngine e(r.normal, nullptr, &r.col_transform, &r.col_transform_inverse);
  r.rank = e.run();
  return r;
}

IntVector elementary_divisors(const IntMatrix& a) {
  IntMatrix m = a;
  SnfEngine e(m, nullptr, nullptr, nullptr);
  std::size_t rank = e.run();
  IntVector d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = m(i, i);
  return d;
}

HnfResult hnf_rows(const IntMatrix& a) {
  HnfResult res;
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  h = a;
  u = IntMatrix::identity(a.rows());
  const std::size_t nr = h.rows(), nc = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (sgn(h(i, c)) != 0 &&
            (best == nr || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0))
          best = i;
      if (best == nr) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Int q = nearest_quotient(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (sgn(h(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix lattice_basis(const IntMatrix& a) {
  HnfResult r = hnf_rows(a);
  return r.h.submatrix(0, 0, r.rank, a.cols());
}

IntMatrix nullspace_saturated(const IntMatrix& a) {
  HnfResult r = hnf_rows(a);
  // Rows of U against zero rows of H span the kernel; they are a direct
  // summand of Z^n because U is unimodular.
  IntMatrix k = r.u.submatrix(r.rank, 0, a.rows() - r.rank, a.rows());
  if (k.rows() == 0) return IntMatrix(0, a.rows());
  return lattice_basis(k);
}

IntMatrix solve_mod(const IntMatrix& a, std::span<const Int> t) {
  if (t.size() != a.cols()) throw LengthMismatch("solve_mod: moduli count differs from columns");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] < 1) throw InputError("solve_mod: modulus must be >= 1");
    if (t[j] != 1) keep.push_back(j);
  }
  const std::size_t n = a.rows(), m = keep.size();
  if (m == 0) return IntMatrix::identity(n);
  IntMatrix stacked(n + m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) stacked(i, j) = a(i, keep[j]);
  for (std::size_t j = 0; j < m; ++j) stacked(n + j, j) = t[keep[j]];
  IntMatrix k = nullspace_saturated(stacked);
  IntMatrix proj(k.rows(), n);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) proj(i, j) = k(i, j);
  return lattice_basis(proj);
}

IntVector divisor_chain(std::span<const Int> a) {
  IntVector nontrivial;
  for (const Int& x : a) {
    if (sgn(x) < 0) throw InputError("divisor_chain: negative order");
    if (sgn(x) == 0) throw InputError("divisor_chain: infinite cyclic factor");
    if (x > 1) nontrivial.push_back(x);
  }
  IntVector out;
  for (const Int& d : elementary_divisors(IntMatrix::diagonal(nontrivial)))
    if (d > 1) out.push_back(d);
  return out;
}

std::optional<IntVector> lattice_coefficients(const IntMatrix& h, std::span<const Int> v) {
  IntVector x(v.begin(), v.end());
  IntVector coef(h.rows());
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (c < h.cols() && sgn(h(i, c)) == 0) ++c;
    if (c == h.cols()) break;
    if (sgn(x[c]) == 0) continue;
    if (!mpz_divisible_p(x[c].get_mpz_t(), h(i, c).get_mpz_t())) return std::nullopt;
    mpz_divexact(coef[i].get_mpz_t(), x[c].get_mpz_t(), h(i, c).get_mpz_t());
    axpy(x, -coef[i], h.row(i));
  }
  if (!is_zero(x)) return std::nullopt;
  return coef;
}

bool in_lattice(const IntMatrix& h, std::span<const Int> v) {
  return lattice_coefficients(h, v).has_value();
}

}  // namespace unram::exactla
