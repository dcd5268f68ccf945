#include "unram/cohomology/cohomology.hpp"

#include <atomic>

#include "unram/errors.hpp"
#include "unram/exactla/normal_forms.hpp"

namespace unram::cohomology {

using exactla::hstack;

namespace {

IntMatrix generator_differences(const GLattice& m) {
  const std::size_t d = m.dim();
  IntMatrix out(d, 0);
  for (std::size_t s = 0; s < m.num_generators(); ++s)
    out = hstack(out, m.rho_generator(s) - IntMatrix::identity(d));
  return out;
}

IntVector above_one(const IntVector& divs) {
  IntVector out;
  for (const auto& x : divs)
    if (x > 1) out.push_back(x);
  return out;
}

// v * a for the d x d matrix a, into out (overwritten)
void times(std::span<const Int> v, const IntMatrix& a, std::span<Int> out) {
  const std::size_t d = a.rows();
  for (std::size_t j = 0; j < d; ++j) out[j] = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(a(i, j)) != 0) out[j] += v[i] * a(i, j);
  }
}

}  // namespace

IntMatrix fixed_sublattice(const GLattice& m) {
  if (m.num_generators() == 0) return IntMatrix::identity(m.dim());
  return exactla::nullspace_saturated(generator_differences(m));
}

IntVector h1(const GLattice& m) {
  if (m.num_generators() == 0 || m.dim() == 0) return {};
  return above_one(exactla::elementary_divisors(generator_differences(m)));
}

IntVector hminus1(const GLattice& m) {
  const std::size_t d = m.dim();
  if (d == 0) return {};
  IntMatrix norm(d, d);
  for (Index g = 0; g < m.order(); ++g) norm = norm + m.rho(g);
  IntMatrix k = exactla::nullspace_saturated(norm);
  if (k.rows() == 0) return {};
  IntMatrix coords(0, k.rows());
  for (std::size_t s = 0; s < m.num_generators(); ++s) {
    IntMatrix diff = m.rho_generator(s) - IntMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = exactla::lattice_coefficients(k, diff.row(i));
      if (!c) throw InternalInconsistency("augmentation row outside the kernel of the norm");
      coords.append_row(*c);
    }
  }
  exactla::SnfResult r = exactla::snf_col_transforms(coords);
  if (r.rank != k.rows()) throw InternalInconsistency("augmentation lattice is not of full rank");
  return above_one(r.divisors());
}

CoboundaryMatrix coboundary_matrix(const GLattice& m) {
  const MatGroup& g = m.group();
  CoboundaryMatrix cb;
  cb.n = m.order();
  cb.k = m.num_generators();
  cb.dim = m.dim();
  cb.d = SparseIntMatrix(cb.n * cb.dim, cb.n * cb.k * cb.dim);
  for (Index x = 0; x < cb.n; ++x)
    for (std::size_t s = 0; s < cb.k; ++s) {
      Index gs = g.generator_indices()[s];
      Index xs = g.mul(x, gs);
      const IntMatrix& r = m.rho_generator(s);
      for (std::size_t c = 0; c < cb.dim; ++c) {
        std::size_t col = cb.col(x, s, c);
        cb.d.add(cb.row(gs, c), col, 1);
        cb.d.add(cb.row(xs, c), col, -1);
        for (std::size_t c2 = 0; c2 < cb.dim; ++c2)
          if (sgn(r(c2, c)) != 0) cb.d.add(cb.row(x, c2), col, r(c2, c));
      }
    }
  cb.d.finalize();
  return cb;
}

IntVector H2Data::coordinates(std::span<const Int> restricted) const {
  if (!quotient) {
    if (!exactla::is_zero(restricted)) throw InternalInconsistency("nonzero cocycle on a trivial quotient");
    return {};
  }
  return quotient->coordinates(restricted);
}

H2Data h2(const GLattice& m, bool preprocess, Exec exec) {
  H2Data out;
  out.preprocessed = preprocess;
  if (m.order() == 1 || m.num_generators() == 0 || m.dim() == 0) return out;
  CoboundaryMatrix cb = coboundary_matrix(m);
  auto q = std::make_shared<const LatticeQuotient>(cb.d, preprocess, exec);
  out.invariants = q->invariants();
  out.gens_restricted = q->generators();
  out.quotient = std::move(q);
  return out;
}

CocycleTable extend_cocycle(const GLattice& m, std::span<const Int> restricted, Exec exec) {
  const MatGroup& g = m.group();
  const std::size_t n = m.order(), k = m.num_generators(), d = m.dim();
  if (restricted.size() != n * k * d)
    throw LengthMismatch("restricted cocycle has the wrong length");
  auto res = [&](Index x, std::size_t s) {
    return restricted.subspan((x * k + s) * d, d);
  };
  CocycleTable t(n, d);
  if (k == 0) return t;

  // z(g, 1) = z(1, s) rho(s)^-1 for every g
  IntVector c(d);
  times(res(0, 0), exactla::unimodular_inverse(m.rho_generator(0)), c);
  for (Index x = 0; x < n; ++x) std::copy(c.begin(), c.end(), t.at(x, 0).begin());

  const bool par = exec == Exec::parallel;
  for (Index h2 : g.bfs_order()) {
    if (h2 == 0) continue;
    Index h = g.word_parent(h2);
    std::size_t s = static_cast<std::size_t>(g.word_gen(h2));
    const IntMatrix& r = m.rho_generator(s);
    auto zhs = res(h, s);
#pragma omp parallel for schedule(static) if (par)
    for (Index x = 0; x < n; ++x) {
      auto dst = t.at(x, h2);
      times(t.at(x, h), r, dst);
      auto zxh = res(g.mul(x, h), s);
      for (std::size_t j = 0; j < d; ++j) dst[j] += zxh[j] - zhs[j];
    }
  }

  // agreement on G x gens and the identity for all (g, h, s)
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 4) if (par)
  for (Index x = 0; x < n; ++x) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    IntVector v(d);
    for (std::size_t s = 0; s < k && ok; ++s) {
      Index gs = g.generator_indices()[s];
      std::span<const Int> a = t.at(x, gs), b = res(x, s);
      if (!std::equal(a.begin(), a.end(), b.begin())) ok = false;
      const IntMatrix& r = m.rho_generator(s);
      for (Index h = 0; h < n && ok; ++h) {
        times(t.at(x, h), r, v);
        auto u = t.at(g.mul(x, h), gs);
        auto w = t.at(h, gs);
        auto lhs = t.at(x, g.mul(h, gs));
        for (std::size_t j = 0; j < d; ++j)
          if (v[j] + u[j] - w[j] != lhs[j]) {
            ok = false;
            break;
          }
      }
    }
  }
  if (!ok) throw InconsistentExtension("restricted data is not a cocycle");
  return t;
}

IntVector restricted_of(const GLattice& m, const CocycleTable& t) {
  const std::size_t n = m.order(), k = m.num_generators(), d = m.dim();
  IntVector out(n * k * d);
  for (Index x = 0; x < n; ++x)
    for (std::size_t s = 0; s < k; ++s) {
      auto z = t.at(x, m.group().generator_indices()[s]);
      std::copy(z.begin(), z.end(), out.begin() + (x * k + s) * d);
    }
  return out;
}

bool satisfies_cocycle_identity(const GLattice& m, const CocycleTable& t) {
  const MatGroup& g = m.group();
  const std::size_t n = m.order(), d = m.dim();
  IntVector v(d);
  for (Index x = 0; x < n; ++x)
    for (Index h = 0; h < n; ++h)
      for (Index y = 0; y < n; ++y) {
        times(t.at(x, h), m.rho(y), v);
        auto u = t.at(g.mul(x, h), y), w = t.at(h, y), lhs = t.at(x, g.mul(h, y));
        for (std::size_t j = 0; j < d; ++j)
          if (v[j] + u[j] - w[j] != lhs[j]) return false;
      }
  return true;
}

CocycleTable coboundary_table(const GLattice& m, const std::vector<IntVector>& b) {
  const MatGroup& g = m.group();
  const std::size_t n = m.order(), d = m.dim();
  if (b.size() != n) throw LengthMismatch("one vector per element is needed");
  CocycleTable t(n, d);
  IntVector v(d);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      times(b[x], m.rho(y), v);
      auto z = t.at(x, y);
      const IntVector& bxy = b[g.mul(x, y)];
      for (std::size_t j = 0; j < d; ++j) z[j] = b[y][j] - bxy[j] + v[j];
    }
  return t;
}

IntVector restrict_table(const GLattice& m, const Subgroup& h, const CocycleTable& t) {
  if (h.parent != &m.group()) throw InputError("subgroup of a different group");
  const std::size_t kh = h.generators.size(), d = m.dim();
  IntVector out(h.order() * kh * d);
  for (std::size_t x = 0; x < h.order(); ++x)
    for (std::size_t s = 0; s < kh; ++s) {
      auto z = t.at(h.elements[x], h.generators[s]);
      std::copy(z.begin(), z.end(), out.begin() + (x * kh + s) * d);
    }
  return out;
}

IntVector restrict_class(const GLattice& m, const Subgroup& h, const H2Data& h2_of_h,
                         const CocycleTable& t) {
  if (h2_of_h.invariants.empty()) return {};
  return h2_of_h.coordinates(restrict_table(m, h, t));
}

}  // namespace unram::cohomology
