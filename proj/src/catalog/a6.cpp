#include <array>
#include <optional>

#include "unram/catalog/families.hpp"

namespace unram::catalog {

namespace {

// F_9 = F_3[u]/(u^2 + 1), element a + b u stored as (a, b).
struct F9 {
  int a = 0, b = 0;
  bool operator==(const F9&) const = default;
};

F9 add(F9 x, F9 y) { return {(x.a + y.a) % 3, (x.b + y.b) % 3}; }
F9 mul(F9 x, F9 y) { return {((x.a * y.a - x.b * y.b) % 3 + 3) % 3, (x.a * y.b + x.b * y.a) % 3}; }
F9 inv(F9 x) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (mul(x, {a, b}) == F9{1, 0}) return {a, b};
  return {};
}

// Points of P^1(F_9): infinity, then a + b u in lexicographic (a, b) order.
using Point = std::optional<F9>;

std::array<Point, 10> points() {
  std::array<Point, 10> p;
  p[0] = std::nullopt;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) p[1 + 3 * a + b] = F9{a, b};
  return p;
}

std::size_t point_index(const Point& z) { return z ? 1 + 3 * z->a + z->b : 0; }

// z -> (a z + b) / (c z + d)
Point moebius(const std::array<F9, 4>& m, const Point& z) {
  const F9 zero{};
  if (!z) return m[2] == zero ? Point{} : Point{mul(m[0], inv(m[2]))};
  F9 num = add(mul(m[0], *z), m[1]);
  F9 den = add(mul(m[2], *z), m[3]);
  if (den == zero) return std::nullopt;
  return mul(num, inv(den));
}

// Action on N / Z(x_1 + ... + x_10) in the basis of the first nine points.
IntMatrix norm_one_matrix(const std::array<F9, 4>& m) {
  auto pts = points();
  IntMatrix r(9, 9);
  for (std::size_t i = 0; i < 9; ++i) {
    std::size_t j = point_index(moebius(m, pts[i]));
    if (j == 9)
      for (std::size_t c = 0; c < 9; ++c) r(i, c) = -1;
    else
      r(i, j) = 1;
  }
  return r;
}

}  // namespace

std::vector<IntMatrix> a6_norm1_generators() {
  const F9 o{1, 0}, z{0, 0}, u{0, 1};
  // [[1,1],[0,1]] and [[1,u],[0,1]] * [[1,0],[1,1]] = [[1+u,u],[1,1]]
  return {norm_one_matrix({o, o, z, o}), norm_one_matrix({add(o, u), u, o, o})};
}

MatGroup a6_norm1() { return builtin("a6_norm1"); }

}  // namespace unram::catalog
