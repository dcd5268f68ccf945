#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "unram/catalog/families.hpp"
#include "unram/cohomology/glattice.hpp"

namespace testsupport {

using unram::cohomology::GLattice;
using unram::group::GroupPtr;
using unram::group::MatGroup;

inline GroupPtr share(MatGroup g) { return std::make_shared<const MatGroup>(std::move(g)); }

inline MatGroup perm_cycle(std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, (i + 1) % n) = 1;
  return MatGroup::close(n, {c});
}

// C_n acting trivially on Z^d.
inline GLattice trivial_cyclic(std::size_t n, std::size_t d = 1) {
  return GLattice(share(perm_cycle(n)), {IntMatrix::identity(d)});
}

inline GLattice natural(MatGroup g) { return GLattice(share(std::move(g))); }

struct NamedLattice {
  std::string name;
  GLattice lattice;
};

// Small lattices, |G| <= 16 and d <= 4, with and without faithful action.
inline std::vector<NamedLattice> small_lattices() {
  std::vector<NamedLattice> v;
  auto add = [&](std::string n, GLattice l) { v.push_back({std::move(n), std::move(l)}); };
  add("c2_sign", natural(MatGroup::close(1, {IntMatrix{{-1}}})));
  add("c2_trivial", trivial_cyclic(2));
  add("c3_trivial", trivial_cyclic(3));
  add("c4_trivial", trivial_cyclic(4));
  add("c6_trivial_z2", trivial_cyclic(6, 2));
  add("c2xc2_trivial", GLattice(share(unram::catalog::builtin("sign_diag_2")),
                                {IntMatrix::identity(1), IntMatrix::identity(1)}));
  add("c4_rot", natural(MatGroup::close(2, {IntMatrix{{0, 1}, {-1, 0}}})));
  add("c3_hex", natural(MatGroup::close(2, {IntMatrix{{0, 1}, {-1, -1}}})));
  add("c6_hex", natural(MatGroup::close(2, {IntMatrix{{1, 1}, {-1, 0}}})));
  add("d4_square", natural(MatGroup::close(2, {IntMatrix{{0, 1}, {-1, 0}}, IntMatrix{{1, 0}, {0, -1}}})));
  add("d6_hex", natural(MatGroup::close(2, {IntMatrix{{1, 1}, {-1, 0}}, IntMatrix{{0, 1}, {1, 0}}})));
  add("sign_diag_2", natural(unram::catalog::builtin("sign_diag_2")));
  add("sign_diag_3", natural(unram::catalog::builtin("sign_diag_3")));
  add("c3_perm", natural(perm_cycle(3)));
  add("c4_perm", natural(perm_cycle(4)));
  add("s3_perm", natural(MatGroup::close(3, {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                                             IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}})));
  add("s3_perm_sign", natural(MatGroup::close(3, {IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                                                  IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}})));
  add("klein_perm", natural(MatGroup::close(4, {IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
                                                IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}})));
  add("d4_perm", natural(MatGroup::close(4, {IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}},
                                             IntMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}})));
  add("d4n_1", natural(unram::catalog::family_d4n(1)));
  add("q8n_1", natural(unram::catalog::family_q8n(1)));
  add("qd8n_1", natural(unram::catalog::family_qd8n(1)));
  add("c2_on_z2_swap", natural(MatGroup::close(2, {IntMatrix{{0, 1}, {1, 0}}})));
  add("c2_on_z2_unipotent", natural(MatGroup::close(2, {IntMatrix{{1, 0}, {1, -1}}})));
  return v;
}

inline GLattice conjugated(const GLattice& l, std::mt19937& rng) {
  IntMatrix p = random_unimodular(rng, l.dim());
  IntMatrix pi = unram::exactla::unimodular_inverse(p);
  std::vector<IntMatrix> imgs;
  for (std::size_t s = 0; s < l.num_generators(); ++s) imgs.push_back(p * l.rho_generator(s) * pi);
  return GLattice(l.group_ptr(), std::move(imgs));
}

}  // namespace testsupport
