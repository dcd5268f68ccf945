#include "unram/group/mat_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "unram/errors.hpp"
#include "unram/exactla/normal_forms.hpp"

#include <omp.h>

namespace unram::group {

namespace {

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  auto fa = a.flat(), fb = b.flat();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    int c = cmp(fa[i], fb[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

MatGroup MatGroup::close(std::size_t dim, std::vector<IntMatrix> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw InputError("generator is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (!exactla::is_unimodular(g)) throw NotUnimodular("generator determinant is not +-1");
  }
  MatGroup G;
  G.dim_ = dim;
  G.generators_ = std::move(generators);

  std::vector<IntMatrix> found{IntMatrix::identity(dim)};
  std::unordered_map<IntMatrix, Index, exactla::IntMatrixHash> seen{{found[0], 0}};
  for (std::size_t q = 0; q < found.size(); ++q) {
    for (const auto& s : G.generators_) {
      IntMatrix y = found[q] * s;
      if (seen.count(y)) continue;
      if (found.size() >= cap)
        throw GroupTooLarge("closure exceeds " + std::to_string(cap) +
                            " elements (infinite or oversized group)");
      seen.emplace(y, static_cast<Index>(found.size()));
      found.push_back(std::move(y));
    }
  }
  std::sort(found.begin() + 1, found.end(), lex_less);
  G.elements_ = std::move(found);
  G.build_structure();
  return G;
}

void MatGroup::build_structure() {
  const std::size_t n = elements_.size();
  const std::size_t k = generators_.size();
  index_.clear();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<Index>(i));
  gen_idx_.clear();
  for (const auto& s : generators_) gen_idx_.push_back(index_of(s));

  std::vector<Index> right(n * k);  // element * generator
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < k; ++s) right[i * k + s] = index_of(elements_[i] * generators_[s]);

  parent_.assign(n, 0);
  parent_gen_.assign(n, -1);
  bfs_.clear();
  bfs_.push_back(0);
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  for (std::size_t q = 0; q < bfs_.size(); ++q) {
    Index x = bfs_[q];
    for (std::size_t s = 0; s < k; ++s) {
      Index y = right[x * k + s];
      if (reached[y]) continue;
      reached[y] = 1;
      parent_[y] = x;
      parent_gen_[y] = static_cast<int>(s);
      bfs_.push_back(y);
    }
  }
  if (bfs_.size() != n) throw InternalInconsistency("generators do not reach every element");

  table_.clear();
  if (n <= kTableThreshold) {
    table_.assign(n * n, 0);
    // a * b = (a * parent(b)) * gen, filled along the BFS order of b
    for (std::size_t a = 0; a < n; ++a) table_[a * n] = static_cast<Index>(a);
    for (std::size_t q = 1; q < n; ++q) {
      Index b = bfs_[q];
      Index p = parent_[b];
      std::size_t s = static_cast<std::size_t>(parent_gen_[b]);
      for (std::size_t a = 0; a < n; ++a) table_[a * n + b] = right[table_[a * n + p] * k + s];
    }
  }

  orders_.assign(n, 0);
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ord = 1;
    Index x = static_cast<Index>(a), prev = 0;
    while (x != 0) {
      prev = x;
      x = mul(x, static_cast<Index>(a));
      ++ord;
    }
    orders_[a] = ord;
    inverse_[a] = (a == 0) ? 0 : prev;
  }
}

Index MatGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

Index MatGroup::pow(Index a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  e %= static_cast<long>(orders_[a]);
  Index r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<Index> MatGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index MatGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InternalInconsistency("matrix is not a group element");
  return it->second;
}

bool MatGroup::is_abelian() const {
  for (std::size_t i = 0; i < gen_idx_.size(); ++i)
    for (std::size_t j = i + 1; j < gen_idx_.size(); ++j)
      if (mul(gen_idx_[i], gen_idx_[j]) != mul(gen_idx_[j], gen_idx_[i])) return false;
  return true;
}

MatGroup MatGroup::restricted_to(const std::vector<Index>& indices,
                                 const std::vector<Index>& generators) const {
  MatGroup h;
  h.dim_ = dim_;
  for (Index g : generators) h.generators_.push_back(elements_[g]);
  h.elements_.reserve(indices.size());
  for (Index i : indices) h.elements_.push_back(elements_[i]);
  if (indices.empty() || indices[0] != 0) throw InternalInconsistency("subgroup without identity");
  h.build_structure();
  return h;
}

Subgroup subgroup_generated(const MatGroup& g, const std::vector<Index>& gens) {
  Subgroup h;
  h.parent = &g;
  h.generators = gens;
  std::vector<char> in(g.order(), 0);
  std::vector<Index> list{0};
  in[0] = 1;
  for (std::size_t q = 0; q < list.size(); ++q)
    for (Index s : gens) {
      Index y = g.mul(list[q], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  h.elements = std::move(list);
  return h;
}

bool is_closed_subset(const MatGroup& g, const std::vector<Index>& sorted) {
  std::vector<char> in(g.order(), 0);
  for (Index i : sorted) in[i] = 1;
  if (sorted.empty() || !in[0]) return false;
  for (Index a : sorted)
    for (Index b : sorted)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_abelian(const MatGroup& g, const std::vector<Index>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (g.mul(elements[i], elements[j]) != g.mul(elements[j], elements[i])) return false;
  return true;
}

bool is_bicyclic(const Subgroup& h) {
  const MatGroup& g = *h.parent;
  if (!is_abelian(g, h.elements)) return false;
  // For abelian H the p-torsion has p^rank_p elements.
  std::size_t n = h.order();
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (std::size_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    std::size_t count = 0;
    for (Index x : h.elements)
      if (g.element_order(x) == 1 || g.element_order(x) == p) ++count;
    if (count > p * p) return false;
  }
  return true;
}

namespace {

std::vector<Index> cyclic_set(const MatGroup& g, Index a) {
  std::vector<Index> s;
  Index x = 0;
  do {
    s.push_back(x);
    x = g.mul(x, a);
  } while (x != 0);
  std::sort(s.begin(), s.end());
  return s;
}

using PairMap = std::map<std::vector<Index>, std::pair<Index, Index>>;

bool order_key(const Subgroup& a, const Subgroup& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() > b.elements.size();
  return a.elements < b.elements;
}

}  // namespace

std::vector<Subgroup> bicyclic_subgroups(const MatGroup& g, bool maximal_only, Exec exec) {
  const std::size_t n = g.order();
  std::vector<std::vector<Index>> cyc(n);
  for (std::size_t a = 0; a < n; ++a) cyc[a] = cyclic_set(g, static_cast<Index>(a));

  PairMap found;  // element set -> smallest generating pair (b == a for cyclic)
  for (std::size_t a = 1; a < n; ++a) {
    auto [it, fresh] = found.emplace(cyc[a], std::make_pair(Index(a), Index(a)));
    (void)it;
    (void)fresh;
  }

  const long nn = static_cast<long>(n);
  std::vector<PairMap> partial(exec == Exec::parallel ? max_threads() : 1);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel)
  for (long a = 1; a < nn; ++a) {
    int tid = 0;
#ifdef _OPENMP
    if (exec == Exec::parallel) tid = omp_get_thread_num();
#endif
    PairMap& local = partial[tid];
    std::vector<char> in_a(n, 0);
    for (Index x : cyc[a]) in_a[x] = 1;
    for (long b = a + 1; b < nn; ++b) {
      if (in_a[b]) continue;
      Index ia = static_cast<Index>(a), ib = static_cast<Index>(b);
      if (g.mul(ia, ib) != g.mul(ib, ia)) continue;
      if (std::binary_search(cyc[b].begin(), cyc[b].end(), ia)) continue;
      std::vector<Index> s;
      s.reserve(cyc[a].size() * cyc[b].size());
      for (Index x : cyc[a])
        for (Index y : cyc[b]) s.push_back(g.mul(x, y));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      auto it = local.find(s);
      if (it == local.end())
        local.emplace(std::move(s), std::make_pair(ia, ib));
      else if (std::make_pair(ia, ib) < it->second)
        it->second = {ia, ib};
    }
  }
  for (auto& local : partial)
    for (auto& [s, pr] : local) {
      auto it = found.find(s);
      if (it == found.end())
        found.emplace(s, pr);
      else if (it->second.first != it->second.second && pr < it->second)
        it->second = pr;
    }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [s, pr] : found) {
    Subgroup h;
    h.parent = &g;
    h.elements = s;
    // cyclic: smallest generating element
    for (Index x : s)
      if (g.element_order(x) == s.size()) {
        h.generators = {x};
        break;
      }
    if (h.generators.empty()) h.generators = {pr.first, pr.second};
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), order_key);

  if (maximal_only) {
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits;
    std::vector<Subgroup> kept;
    for (auto& h : out) {
      std::vector<std::uint64_t> b(words, 0);
      for (Index x : h.elements) b[x / 64] |= std::uint64_t(1) << (x % 64);
      bool contained = false;
      for (std::size_t i = 0; i < kept.size() && !contained; ++i) {
        if (kept[i].order() <= h.order()) continue;
        bool sub = true;
        for (std::size_t w = 0; w < words && sub; ++w)
          if ((b[w] & ~bits[i][w]) != 0) sub = false;
        contained = sub;
      }
      if (!contained) {
        kept.push_back(std::move(h));
        bits.push_back(std::move(b));
      }
    }
    out = std::move(kept);
  }
  return out;
}

namespace {

Subgroup conjugate_by(const MatGroup& g, const Subgroup& h, Index s) {
  Subgroup c;
  c.parent = &g;
  Index si = g.inv(s);
  for (Index x : h.elements) c.elements.push_back(g.mul(g.mul(si, x), s));
  std::sort(c.elements.begin(), c.elements.end());
  for (Index x : h.generators) c.generators.push_back(g.mul(g.mul(si, x), s));
  return c;
}

std::vector<Subgroup> orbit(const MatGroup& g, const Subgroup& h) {
  std::vector<Subgroup> orb{h};
  std::set<std::vector<Index>> seen{h.elements};
  for (std::size_t q = 0; q < orb.size(); ++q)
    for (Index s : g.generator_indices()) {
      Subgroup c = conjugate_by(g, orb[q], s);
      if (seen.insert(c.elements).second) orb.push_back(std::move(c));
    }
  return orb;
}

}  // namespace

std::vector<Subgroup> conjugacy_reduce(const MatGroup& g, const std::vector<Subgroup>& subs) {
  std::set<std::vector<Index>> covered;
  std::vector<Subgroup> reps;
  for (const auto& h : subs) {
    if (covered.count(h.elements)) continue;
    reps.push_back(h);
    for (auto& c : orbit(g, h)) covered.insert(std::move(c.elements));
  }
  return reps;
}

std::vector<Subgroup> all_conjugates(const MatGroup& g, const std::vector<Subgroup>& subs) {
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> out;
  for (const auto& h : subs)
    for (auto& c : orbit(g, h))
      if (seen.insert(c.elements).second) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), order_key);
  return out;
}

Abelianization abelianization(const MatGroup& g) {
  const std::size_t n = g.order();
  const auto& gens = g.generator_indices();
  std::vector<Index> kg;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Index a = gens[i], b = gens[j];
      Index c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0) kg.push_back(c);
    }
  Subgroup k = subgroup_generated(g, kg);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<char> in(n, 0);
    for (Index x : k.elements) in[x] = 1;
    std::vector<Index> extra;
    for (Index x : kg)
      for (Index s : gens) {
        Index c = g.mul(g.mul(g.inv(s), x), s);
        if (!in[c]) {
          extra.push_back(c);
          in[c] = 1;
        }
      }
    if (!extra.empty()) {
      kg.insert(kg.end(), extra.begin(), extra.end());
      k = subgroup_generated(g, kg);
      changed = true;
    }
  }

  // cosets of the normal subgroup k
  std::vector<long> coset(n, -1);
  std::vector<Index> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (Index y : k.elements) coset[g.mul(static_cast<Index>(x), y)] = static_cast<long>(rep.size());
    rep.push_back(static_cast<Index>(x));
  }
  const std::size_t m = rep.size(), r = gens.size();

  // spanning tree of the coset graph; non-tree edges give the relations
  std::vector<IntVector> vec(m);
  std::vector<char> done(m, 0);
  vec[0] = IntVector(r);
  done[0] = 1;
  std::vector<std::size_t> queue{0};
  std::vector<IntVector> rel;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t c = queue[q];
    for (std::size_t s = 0; s < r; ++s) {
      std::size_t c2 = static_cast<std::size_t>(coset[g.mul(rep[c], gens[s])]);
      if (!done[c2]) {
        done[c2] = 1;
        vec[c2] = vec[c];
        vec[c2][s] += 1;
        queue.push_back(c2);
      } else {
        pending.push_back({c, s});
      }
    }
  }
  for (auto [c, s] : pending) {
    std::size_t c2 = static_cast<std::size_t>(coset[g.mul(rep[c], gens[s])]);
    IntVector v = vec[c];
    v[s] += 1;
    for (std::size_t j = 0; j < r; ++j) v[j] -= vec[c2][j];
    if (!exactla::is_zero(v)) rel.push_back(std::move(v));
  }

  Abelianization out;
  out.commutator = k.elements;
  out.image.assign(n, IntVector());
  if (r == 0 || m == 1) return out;
  exactla::SnfResult s = exactla::snf_col_transforms(IntMatrix::from_rows(rel, r));
  if (s.rank != r) throw InternalInconsistency("abelianization is infinite");
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < r; ++i)
    if (s.normal(i, i) > 1) {
      pos.push_back(i);
      out.invariants.push_back(s.normal(i, i));
    }
  std::vector<IntVector> coset_image(m);
  for (std::size_t c = 0; c < m; ++c) {
    IntVector w = exactla::row_times(vec[c], s.col_transform);
    IntVector img(pos.size());
    for (std::size_t t = 0; t < pos.size(); ++t)
      mpz_fdiv_r(img[t].get_mpz_t(), w[pos[t]].get_mpz_t(), out.invariants[t].get_mpz_t());
    coset_image[c] = std::move(img);
  }
  for (std::size_t x = 0; x < n; ++x) out.image[x] = coset_image[static_cast<std::size_t>(coset[x])];
  return out;
}

MatGroup conjugate_group(const MatGroup& g, const IntMatrix& p) {
  IntMatrix pinv = exactla::unimodular_inverse(p);
  std::vector<IntMatrix> gens;
  for (const auto& s : g.generators()) gens.push_back(p * s * pinv);
  return MatGroup::close(g.dim(), std::move(gens));
}

MatGroup block_sum_action(const std::vector<IntMatrix>& gens1, const std::vector<IntMatrix>& gens2) {
  if (gens1.size() != gens2.size())
    throw LengthMismatch("block_sum_action: generator lists have different lengths");
  if (gens1.empty()) throw InputError("block_sum_action: empty generator lists");
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < gens1.size(); ++i)
    gens.push_back(exactla::block_diagonal(gens1[i], gens2[i]));
  const std::size_t d = gens[0].rows();
  return MatGroup::close(d, std::move(gens));
}

std::vector<std::vector<std::size_t>> coordinate_blocks(const MatGroup& g) {
  const std::size_t d = g.dim();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : g.generators())
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(s(i, j)) != 0) parent[root(i)] = root(j);
  std::map<std::size_t, std::vector<std::size_t>> comp;
  for (std::size_t i = 0; i < d; ++i) comp[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, v] : comp) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

MatGroup block_image(const MatGroup& g, const std::vector<std::size_t>& block) {
  std::vector<IntMatrix> gens;
  for (const auto& s : g.generators()) gens.push_back(s.select_rows(block).select_cols(block));
  return MatGroup::close(block.size(), std::move(gens));
}

Fingerprint fingerprint(const MatGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.abelian_invariants = abelianization(g).invariants;
  for (Index i = 0; i < g.order(); ++i) {
    std::size_t o = g.element_order(i);
    ++f.order_histogram[o];
    f.exponent = std::lcm(f.exponent, o);
  }
  return f;
}

}  // namespace unram::group
