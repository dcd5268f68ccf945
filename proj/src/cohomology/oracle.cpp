#include "unram/cohomology/oracle.hpp"

#include <cstdint>

#include "unram/errors.hpp"
#include "unram/exactla/normal_forms.hpp"

namespace unram::cohomology {

namespace {

constexpr std::uint64_t kP = 2147483647;  // 2^31 - 1

std::uint64_t mod_p(const Int& x) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), kP);
  return r.get_ui();
}

std::uint64_t inv_p(std::uint64_t a) {
  std::uint64_t r = 1, e = kP - 2;
  while (e) {
    if (e & 1) r = r * a % kP;
    a = a * a % kP;
    e >>= 1;
  }
  return r;
}

// Reduced row echelon basis over F_p, grown one vector at a time.
class EchelonModP {
 public:
  explicit EchelonModP(std::size_t len) : len_(len) {}
  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint64_t f = v[piv_[i]];
      if (f) sub(v, rows_[i], f);
    }
    std::size_t p = 0;
    while (p < len_ && v[p] == 0) ++p;
    if (p == len_) return false;
    std::uint64_t s = inv_p(v[p]);
    for (auto& x : v) x = x * s % kP;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint64_t f = rows_[i][p];
      if (f) sub(rows_[i], v, f);
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  static void sub(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                  std::uint64_t f) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (b[j]) a[j] = (a[j] + (kP - f) * b[j]) % kP;
  }

  std::size_t len_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> piv_;
};

struct Bar {
  const GLattice& m;
  const MatGroup& g;
  std::size_t n1, d;
  std::vector<IntMatrix> rinv;  // rho(g^-1)

  explicit Bar(const GLattice& lat)
      : m(lat), g(lat.group()), n1(lat.order() - 1), d(lat.dim()) {
    for (Index x = 0; x < lat.order(); ++x) rinv.push_back(lat.rho(g.inv(x)));
  }
  std::size_t c1(Index a, std::size_t c) const { return (a - 1) * d + c; }
  std::size_t c2(Index a, Index b, std::size_t c) const {
    return ((a - 1) * n1 + (b - 1)) * d + c;
  }
  std::size_t dim1() const { return n1 * d; }
  std::size_t dim2() const { return n1 * n1 * d; }

  IntMatrix d2() const {
    IntMatrix out(dim1(), dim2());
    for (Index a = 1; a <= n1; ++a)
      for (Index b = 1; b <= n1; ++b) {
        Index ab = g.mul(a, b);
        for (std::size_t c = 0; c < d; ++c) {
          std::size_t col = c2(a, b, c);
          for (std::size_t c0 = 0; c0 < d; ++c0) out(c1(b, c0), col) += rinv[a](c0, c);
          if (ab != 0) out(c1(ab, c), col) -= 1;
          out(c1(a, c), col) += 1;
        }
      }
    return out;
  }

  std::size_t dim3() const { return n1 * n1 * n1 * d; }

  IntMatrix d3() const {
    IntMatrix out(dim2(), dim3());
    std::size_t col = 0;
    for (Index a = 1; a <= n1; ++a)
      for (Index b = 1; b <= n1; ++b)
        for (Index x = 1; x <= n1; ++x) {
          Index ab = g.mul(a, b), bx = g.mul(b, x);
          for (std::size_t c = 0; c < d; ++c, ++col) {
            for (std::size_t c0 = 0; c0 < d; ++c0) out(c2(b, x, c0), col) += rinv[a](c0, c);
            if (ab != 0) out(c2(ab, x, c), col) -= 1;
            if (bx != 0) out(c2(a, bx, c), col) += 1;
            out(c2(a, b, c), col) -= 1;
          }
        }
    return out;
  }

  // true when d3 f = 0 for the 2-cochain f
  bool d3_vanishes(std::span<const Int> f) const {
    auto at = [&](Index a, Index b) -> std::span<const Int> {
      if (a == 0 || b == 0) return {};
      return f.subspan(c2(a, b, 0), d);
    };
    Int acc;
    for (Index a = 1; a <= n1; ++a)
      for (Index b = 1; b <= n1; ++b)
        for (Index e = 1; e <= n1; ++e) {
          auto fbe = at(b, e), fab_e = at(g.mul(a, b), e), fa_be = at(a, g.mul(b, e)),
               fab = at(a, b);
          for (std::size_t c = 0; c < d; ++c) {
            acc = 0;
            for (std::size_t c0 = 0; c0 < d; ++c0)
              if (sgn(fbe[c0]) != 0) acc += fbe[c0] * rinv[a](c0, c);
            if (!fab_e.empty()) acc -= fab_e[c];
            if (!fa_be.empty()) acc += fa_be[c];
            acc -= fab[c];
            if (sgn(acc) != 0) return false;
          }
        }
    return true;
  }

  // columns of d3 mod p, streamed into an echelon basis until `target`
  std::size_t d3_rank_mod_p(std::size_t target) const {
    EchelonModP e(dim2());
    std::vector<std::uint64_t> v(dim2());
    for (Index a = 1; a <= n1; ++a)
      for (Index b = 1; b <= n1; ++b)
        for (Index x = 1; x <= n1; ++x)
          for (std::size_t c = 0; c < d; ++c) {
            if (e.rank() >= target) return e.rank();
            std::fill(v.begin(), v.end(), 0);
            auto bump = [&](std::size_t i, const Int& val) { v[i] = (v[i] + mod_p(val)) % kP; };
            for (std::size_t c0 = 0; c0 < d; ++c0)
              if (sgn(rinv[a](c0, c)) != 0) bump(c2(b, x, c0), rinv[a](c0, c));
            Index ab = g.mul(a, b), bx = g.mul(b, x);
            if (ab != 0) bump(c2(ab, x, c), -1);
            if (bx != 0) bump(c2(a, bx, c), 1);
            bump(c2(a, b, c), -1);
            e.insert(v);
          }
    return e.rank();
  }
};

}  // namespace

OracleResult h2_oracle_report(const GLattice& m, std::size_t budget) {
  OracleResult out;
  const std::size_t n1 = m.order() - 1;
  if (n1 * n1 * n1 * m.dim() > budget)
    throw OracleTooLarge("bar complex exceeds the oracle budget");
  if (n1 == 0 || m.dim() == 0) {
    out.composition_checked = out.rank_certified = true;
    return out;
  }
  Bar bar(m);
  IntMatrix d2 = bar.d2();
  for (std::size_t i = 0; i < d2.rows(); ++i)
    if (!bar.d3_vanishes(d2.row(i))) throw InternalInconsistency("bar differentials do not compose to zero");
  out.composition_checked = true;

  for (const auto& x : exactla::elementary_divisors(d2))
    if (x > 1) out.invariants.push_back(x);

  if (bar.dim2() <= kCertificateLimit) {
    EchelonModP e(bar.dim2());
    std::vector<std::uint64_t> v(bar.dim2());
    for (std::size_t i = 0; i < d2.rows(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod_p(d2(i, j));
      e.insert(v);
    }
    std::size_t target = bar.dim2() - e.rank();
    out.rank_certified = bar.d3_rank_mod_p(target) == target;
  }
  return out;
}

IntMatrix bar_d2(const GLattice& m) {
  if (m.order() == 1) return IntMatrix(0, 0);
  return Bar(m).d2();
}

IntMatrix bar_d3(const GLattice& m) {
  if (m.order() == 1) return IntMatrix(0, 0);
  return Bar(m).d3();
}

IntVector h2_oracle(const GLattice& m, std::size_t budget) {
  return h2_oracle_report(m, budget).invariants;
}

}  // namespace unram::cohomology
