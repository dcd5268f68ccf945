#include "unram/catalog/families.hpp"

#include <algorithm>
#include <array>

#include "unram/errors.hpp"

namespace unram::catalog {

namespace {

IntMatrix mat_pow(const IntMatrix& a, long e) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (long i = 0; i < e; ++i) r = r * a;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what + ": defining relation fails");
}

MatGroup close_checked(std::size_t dim, std::vector<IntMatrix> gens, std::size_t order,
                       const std::string& what) {
  MatGroup g = MatGroup::close(dim, std::move(gens));
  if (g.order() != order)
    throw InternalInconsistency(what + ": order " + std::to_string(g.order()) +
                                ", expected " + std::to_string(order));
  return g;
}

void require_positive(int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": parameter must be >= 1");
}

}  // namespace

// basis x_1..x_2n, y_1, y_2
std::vector<IntMatrix> d4n_generators(int n) {
  require_positive(n, "d4n");
  const std::size_t m = 2 * n, d = m + 2, y1 = m, y2 = m + 1;
  IntMatrix s(d, d), t(d, d);
  for (std::size_t i = 0; i + 1 < m; ++i) s(i, i + 1) = 1;
  s(m - 1, 0) = -1;
  s(y1, y2) = 1;
  s(y1, 0) = 1;
  s(y2, y1) = 1;
  s(y2, 0) = 1;
  for (std::size_t i = 0; i < m; ++i) t(i, m - 1 - i) = -1;
  t(y1, y2) = -1;
  t(y2, y1) = -1;
  return {s, t};
}

MatGroup family_d4n(int n) {
  auto g = d4n_generators(n);
  const IntMatrix &s = g[0], &t = g[1];
  const std::size_t d = s.rows();
  require(mat_pow(s, 4 * n).is_identity() && (t * t).is_identity(), "d4n");
  require(exactla::unimodular_inverse(t) * s * t == exactla::unimodular_inverse(s), "d4n");
  return close_checked(d, g, 8 * n, "d4n");
}

// basis x_1, y_1, ..., x_2n, y_2n
std::vector<IntMatrix> qd8n_generators(int n) {
  require_positive(n, "qd8n");
  const std::size_t m = 2 * n, d = 2 * m;
  IntMatrix s(d, d), t(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) s(i, i + 1) = 1;
  s(d - 1, 0) = -1;
  // x_i, y_i -> sum_{l <= 2n-i} (x_l - y_l) + (x|y)_{2n+1-i} - sum_{l >= 2n+2-i} (x_l - y_l)
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t half = 0; half < 2; ++half) {
      const std::size_t r = 2 * (i - 1) + half;
      for (std::size_t l = 1; l <= m; ++l) {
        const std::size_t cx = 2 * (l - 1), cy = cx + 1;
        if (l + i <= m) {
          t(r, cx) += 1;
          t(r, cy) -= 1;
        } else if (l + i == m + 1) {
          t(r, cx + half) += 1;
        } else {
          t(r, cx) -= 1;
          t(r, cy) += 1;
        }
      }
    }
  }
  return {s, t};
}

MatGroup family_qd8n(int n) {
  auto g = qd8n_generators(n);
  const IntMatrix &s = g[0], &t = g[1];
  require(mat_pow(s, 8 * n).is_identity() && (t * t).is_identity(), "qd8n");
  require(exactla::unimodular_inverse(t) * s * t == mat_pow(s, 4 * n - 1), "qd8n");
  return close_checked(s.rows(), g, 16 * n, "qd8n");
}

std::vector<IntMatrix> q8n_generators(int n) {
  auto g = qd8n_generators(n);
  return {g[0] * g[0], g[0] * g[1]};
}

MatGroup family_q8n(int n) {
  family_qd8n(n);  // relations of the ambient group
  auto g = q8n_generators(n);
  return close_checked(g[0].rows(), g, 8 * n, "q8n");
}

// basis x_j^(i), i = 0..p-1, j = 1..p-1, with x_0^(i) = -sum_j x_j^(i)
std::vector<IntMatrix> cp2p_generators(int p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (int q = 3; prime && q * q <= p; q += 2)
    if (p % q == 0) prime = false;
  if (!prime) throw NotOddPrime("cp2p: " + std::to_string(p) + " is not an odd prime");
  const std::size_t P = p, w = P - 1, d = P * w;
  auto add = [&](IntMatrix& m, std::size_t row, std::size_t i, std::size_t j, long c) {
    i %= P;
    j %= P;
    if (j == 0) {
      for (std::size_t jj = 1; jj < P; ++jj) m(row, i * w + jj - 1) -= c;
    } else {
      m(row, i * w + j - 1) += c;
    }
  };
  IntMatrix s(d, d), t(d, d);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 1; j < P; ++j) {
      const std::size_t row = i * w + j - 1;
      if (i + 1 < P)
        add(s, row, i + 1, j, 1);
      else
        add(s, row, 0, j + 1, 1);
      if (i == 0) {
        for (std::size_t k = 1; k < P; ++k) add(t, row, k, j, -1);
      } else if (i + 1 < P) {
        for (std::size_t k = 0; k < i; ++k) add(t, row, k, j + i + 1, -1);
        for (std::size_t k = i + 1; k < P; ++k) add(t, row, k, j + i, -1);
      } else {
        for (std::size_t k = 0; k + 1 < P; ++k) add(t, row, k, j, -1);
      }
    }
  return {s, t};
}

MatGroup family_cp2p(int p) {
  auto g = cp2p_generators(p);
  const IntMatrix &s = g[0], &t = g[1];
  require(mat_pow(s, long(p) * p).is_identity() && mat_pow(t, p).is_identity(), "cp2p");
  require(exactla::unimodular_inverse(t) * s * t == mat_pow(s, p + 1), "cp2p");
  return close_checked(s.rows(), g, std::size_t(p) * p * p, "cp2p");
}

MatGroup family(const std::string& name, int n) {
  if (name == "d4n") return family_d4n(n);
  if (name == "qd8n") return family_qd8n(n);
  if (name == "q8n") return family_q8n(n);
  if (name == "cp2p") return family_cp2p(n);
  throw UnknownBuiltin("unknown family '" + name + "' (expected d4n, qd8n, q8n, cp2p)");
}

std::vector<std::string> family_names() { return {"d4n", "qd8n", "q8n", "cp2p"}; }

namespace {

using Rows7 = std::array<std::array<int, 7>, 7>;

// Generator triples of the nine rank-7 elementary abelian groups.
const std::array<std::array<Rows7, 3>, 9> kG7 = {{
    {{  // G1
        {{
         { 0,  1, -1,  0,  0,  0,  0},
         { 1,  0,  1,  0,  0,  0,  0},
         { 0,  0,  1,  0,  0,  0,  0},
         { 0,  0,  0,  1,  0,  0,  0},
         { 0,  0, -1,  0, -1,  0,  1},
         { 0,  0,  0,  0,  0, -1,  1},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         { 0, -1,  0,  0,  0,  0,  0},
         {-1,  0,  0,  0,  0,  0,  0},
         { 0,  0,  1,  0,  0,  0,  0},
         { 0,  0,  1, -1,  0,  0,  0},
         { 0,  0,  0,  0,  1,  0, -1},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         {-1,  0,  0,  0,  0,  0,  0},
         { 0, -1,  0,  0,  0,  0,  0},
         { 0,  0, -1,  0,  0,  0,  0},
         { 0,  0, -1,  1,  0,  0, -1},
         { 0,  0,  1,  0,  1,  0, -1},
         { 0,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G2
        {{
         { 0, -1,  0,  0,  0,  0,  1},
         {-1,  0,  0,  0,  0,  0, -1},
         { 0,  0, -1,  0,  0,  0,  0},
         { 0,  0,  1,  0, -1,  0, -1},
         { 0,  0, -1, -1,  0,  0,  1},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 0, -1,  0,  0,  0,  0,  1},
         {-1,  0,  0,  0,  0,  0, -1},
         { 0,  0,  0,  1,  1,  0,  0},
         { 0,  0,  1,  0, -1,  0, -1},
         { 0,  0,  0,  0,  1,  0,  1},
         { 0,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 0,  1,  0,  0,  0,  0,  0},
         { 1,  0,  0,  0,  0,  0,  0},
         { 0,  0,  0,  1,  1,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  1,  1,  0,  0,  0},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G3
        {{
         {-1,  0,  0,  0,  0,  0,  0},
         { 0,  0, -1, -1,  0,  0,  0},
         { 0,  0, -1,  0,  0,  0,  0},
         { 0, -1,  1,  0,  0,  0,  0},
         { 0,  0,  0,  0,  0,  1,  1},
         { 0,  0,  0,  0,  1,  0, -1},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         {-1,  0,  0,  0,  0,  0,  0},
         { 0,  0, -1, -1,  0,  0,  0},
         { 0, -1,  0, -1, -1,  1,  1},
         { 0,  0,  0,  1,  1, -1, -1},
         { 0,  0,  0,  0, -1,  0,  0},
         { 0,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 1,  0,  0,  0,  0,  0,  0},
         { 0,  0,  1,  1,  0,  0,  0},
         { 1,  0,  1,  0, -1,  1,  1},
         {-1,  1, -1,  0,  1, -1, -1},
         { 1,  0,  0,  0,  0,  1,  1},
         {-1,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  1,  1,  0}}},
    }},
    {{  // G4
        {{
         {-1,  0,  0,  0,  0,  0, -1},
         { 0, -1,  0,  0,  0,  0,  1},
         { 0,  0, -1,  0,  0,  0, -1},
         { 0,  0, -1,  0, -1,  0, -1},
         { 0,  0,  1, -1,  0,  0,  0},
         { 0,  0,  0,  0,  0,  1,  0},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         { 0, -1,  0,  0,  0,  0,  0},
         {-1,  0,  0,  0,  0,  0,  0},
         { 0,  0, -1,  0,  0,  0, -1},
         { 0,  0,  0, -1,  0,  0, -1},
         { 0,  0,  0,  0, -1,  0,  0},
         { 0,  0,  0,  0,  0, -1,  1},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         { 1,  0,  0,  0,  0,  0,  1},
         { 0,  1,  0,  0,  0,  0, -1},
         { 0,  0,  0,  1,  1,  0,  1},
         { 0,  0,  0,  1,  0,  0,  1},
         { 0,  0,  1, -1,  0,  0,  0},
         { 0,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G5
        {{
         { 0, -1,  0,  0,  0,  0,  0},
         {-1,  0,  0,  0,  0,  0,  0},
         { 0,  0, -1,  0,  0,  0,  1},
         { 0,  0,  1,  0, -1,  0,  0},
         { 0,  0, -1, -1,  0,  0,  1},
         { 0,  0,  0,  0,  0, -1,  1},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         {-1,  0,  0,  0,  0,  0,  1},
         { 0, -1,  0,  0,  0,  0, -1},
         { 0,  0, -1,  0,  0,  0,  1},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  0,  0, -1,  0,  1},
         { 0,  0,  0,  0,  0,  1,  0},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         { 0,  1,  0,  0,  0,  0,  0},
         { 1,  0,  0,  0,  0,  0,  0},
         { 0,  0,  0,  1,  1,  0, -1},
         { 0,  0,  1,  0, -1,  0,  0},
         { 0,  0,  0,  0,  1,  0, -1},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G6
        {{
         { 0,  1,  1,  1,  0,  0,  0},
         { 1,  0,  1,  0,  0,  0,  0},
         { 0,  0, -1, -1,  0,  0,  0},
         { 0,  0,  0,  1,  0,  0,  0},
         { 0,  0,  0, -1, -1,  0,  0},
         { 0,  0,  0, -1, -1,  0,  1},
         { 0,  0,  0,  0, -1,  1,  0}}},
        {{
         { 0, -1, -1,  0,  1,  1, -1},
         { 0, -1,  0, -1,  0,  0,  0},
         {-1,  1,  0, -1, -1, -1,  1},
         { 0,  0,  0,  1,  0,  0,  0},
         { 0,  0,  0, -1, -1,  0,  0},
         { 0,  0,  0, -1,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 0, -1, -1, -1,  0,  0,  0},
         {-1,  0, -1,  0,  0,  0,  0},
         { 0,  0,  1,  1,  0,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  0,  1,  0,  1, -1},
         { 0,  0,  0,  1,  0,  1,  0},
         { 0,  0,  0,  0, -1,  1,  0}}},
    }},
    {{  // G7
        {{
         { 0,  1,  0,  0,  0,  0,  0},
         { 1,  0,  0,  0,  0,  0,  0},
         { 0,  0, -1,  0,  0,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  0,  0, -1,  0,  0},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 0,  1,  0,  0,  0,  0,  0},
         { 1,  0,  0,  0,  0,  0,  0},
         { 0,  0,  0,  1,  1,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  1,  1,  0,  0,  0},
         { 0,  0,  0,  0,  0, -1,  0},
         { 0,  0,  0,  0,  0,  0, -1}}},
        {{
         { 0, -1,  0,  0,  0,  0,  1},
         {-1,  0,  0,  0,  0,  0, -1},
         { 0,  0,  0,  1,  1,  0,  0},
         { 0,  0,  1,  0, -1,  0, -1},
         { 0,  0,  0,  0,  1,  0,  1},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G8
        {{
         {-1,  0,  0,  0,  0,  0, -1},
         { 0, -1,  0,  0,  0,  0,  1},
         { 0,  0, -1,  0,  0,  0, -1},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0,  0,  0, -1,  0,  1},
         { 0,  0,  0,  0,  0,  1,  0},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         {-1,  0,  0,  0,  0,  0, -1},
         { 0, -1,  0,  0,  0,  0,  1},
         { 0,  0,  0, -1, -1,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  0, -1,  1,  0,  0,  0},
         { 0,  0,  0,  0,  0, -1,  1},
         { 0,  0,  0,  0,  0,  0,  1}}},
        {{
         { 0, -1,  0,  0,  0,  0,  1},
         {-1,  0,  0,  0,  0,  0, -1},
         { 0,  0,  0, -1, -1,  0,  1},
         { 0,  0, -1,  0, -1,  0,  0},
         { 0,  0,  0,  0,  1,  0, -1},
         { 0,  0,  0,  0,  0,  1, -1},
         { 0,  0,  0,  0,  0,  0, -1}}},
    }},
    {{  // G9
        {{
         { 1, -1, -1,  1,  0,  1,  0},
         {-1,  0,  0,  0, -1, -1,  0},
         {-1,  0, -1, -1,  0,  1, -1},
         {-1,  1,  0, -1, -1, -1,  0},
         { 0,  0,  1,  0,  0, -1,  1},
         {-1,  0,  0, -1,  0,  0, -1},
         { 0,  0,  1,  0,  1, -1,  0}}},
        {{
         { 0,  1,  1,  0,  0,  0,  1},
         { 1,  1,  0, -1,  0,  1,  1},
         { 1,  0,  0,  1, -1,  0,  0},
         { 0,  0,  0, -1,  0,  0,  0},
         { 0,  1,  0, -1,  0,  0,  1},
         { 0,  0, -1,  0, -1,  0, -1},
         {-1, -1,  0,  0,  1, -1, -1}}},
        {{
         { 0,  1,  0,  0, -1, -1,  0},
         { 1,  0,  1,  0,  0,  0,  1},
         { 0,  1,  1, -1,  1,  0,  1},
         { 1,  0,  0,  0,  0,  1,  1},
         { 0,  0,  0,  0, -1,  0,  0},
         { 0,  0,  1,  0,  1,  0,  1},
         { 0, -1, -1,  1,  0,  1, -1}}},
    }},
}};

IntMatrix from7(const Rows7& r) {
  IntMatrix m(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) m(i, j) = r[i][j];
  return m;
}

std::vector<IntMatrix> sign_diag_generators(int n) {
  if (n < 1 || n > 16) throw InputError("sign_diag: n must be in 1..16");
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) {
    IntMatrix m = IntMatrix::identity(n);
    m(i, i) = -1;
    gens.push_back(m);
  }
  return gens;
}

}  // namespace

std::vector<IntMatrix> builtin_generators(const std::string& name) {
  if (name.size() == 4 && name.rfind("g7_", 0) == 0 && name[3] >= '1' && name[3] <= '9') {
    const auto& trip = kG7[name[3] - '1'];
    return {from7(trip[0]), from7(trip[1]), from7(trip[2])};
  }
  if (name == "d4_equiv") {
    // exponent vectors of sigma(x_i) and tau(x_i)
    return {IntMatrix{{0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
            IntMatrix{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}};
  }
  if (name == "carat_5_100_11") {
    return {IntMatrix{{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}},
            IntMatrix{{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 1, -1}, {0, 0, 0, -1, 0}, {0, 0, -1, -1, 0}}};
  }
  if (name == "hurwitz_sl23") {
    // left multiplication by i and j on (1, i, j, k), and i -> j -> k -> i
    return {IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
            IntMatrix{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}},
            IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}};
  }
  if (name == "a6_norm1") return a6_norm1_generators();
  if (name.rfind("sign_diag_", 0) == 0) {
    const std::string tail = name.substr(10);
    if (!tail.empty() && tail.size() <= 2 && std::all_of(tail.begin(), tail.end(), ::isdigit))
      return sign_diag_generators(std::stoi(tail));
  }
  throw UnknownBuiltin("unknown builtin '" + name + "'");
}

MatGroup builtin(const std::string& name) {
  auto gens = builtin_generators(name);
  const std::size_t d = gens[0].rows();
  std::size_t expect = 0;
  if (name.rfind("g7_", 0) == 0 || name == "d4_equiv" || name == "carat_5_100_11") expect = 8;
  if (name == "hurwitz_sl23") expect = 24;
  if (name == "a6_norm1") expect = 360;
  if (name.rfind("sign_diag_", 0) == 0) expect = std::size_t(1) << gens.size();
  return close_checked(d, std::move(gens), expect, name);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> v;
  for (int i = 1; i <= 9; ++i) v.push_back("g7_" + std::to_string(i));
  v.insert(v.end(), {"d4_equiv", "carat_5_100_11", "a6_norm1", "hurwitz_sl23", "sign_diag_n"});
  return v;
}

}  // namespace unram::catalog
