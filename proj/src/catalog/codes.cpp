#include "unram/catalog/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "unram/errors.hpp"

namespace unram::catalog {

using exactla::IntMatrix;

BinaryCode BinaryCode::span(int n, const std::vector<Word>& gens) {
  if (n < 1 || n > 16) throw InputError("code length must be in 1..16");
  std::vector<Word> words{0};
  std::vector<char> in(std::size_t(1) << n, 0);
  in[0] = 1;
  for (Word g : gens) {
    if (g >> n) throw InputError("codeword longer than the code length");
    if (in[g]) continue;
    const std::size_t m = words.size();
    for (std::size_t i = 0; i < m; ++i) {
      words.push_back(words[i] ^ g);
      in[words.back()] = 1;
    }
  }
  std::sort(words.begin(), words.end());
  return {n, std::move(words)};
}

int BinaryCode::k() const { return std::countr_zero(words.size()); }

TraceVector trace_vector(const BinaryCode& c) {
  TraceVector t(c.n + 1, 0);
  for (Word w : c.words) ++t[c.n - std::popcount(w)];
  return t;
}

std::vector<int> t_invariant(const BinaryCode& c, int trace) {
  std::vector<Word> sel;
  for (Word w : c.words)
    if (c.n - 2 * std::popcount(w) == trace) sel.push_back(w);
  if (sel.size() < 2) throw NotEnoughElements("fewer than two codewords of trace " + std::to_string(trace));
  std::vector<int> out;
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = i + 1; j < sel.size(); ++j) out.push_back(c.n - 2 * std::popcount(sel[i] ^ sel[j]));
  std::sort(out.begin(), out.end());
  return out;
}

TKey t_key(const BinaryCode& c) {
  TKey key;
  TraceVector tv = trace_vector(c);
  for (int i = 0; i <= c.n; ++i)
    if (tv[i] >= 2) key[-c.n + 2 * i] = t_invariant(c, -c.n + 2 * i);
  return key;
}

std::size_t C2kReport::total_subspaces() const {
  std::size_t s = 0;
  for (auto x : subspaces) s += x;
  return s;
}

std::size_t gaussian_binomial2(int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod (2^(n-i) - 1) / (2^(i+1) - 1)
  unsigned long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1ull << (n - i)) - 1;
    den *= (1ull << (i + 1)) - 1;
  }
  return static_cast<std::size_t>(num / den);
}

namespace {

// Set of words of F_2^n, n <= 7, as a 128-bit membership mask.
struct Mask {
  std::uint64_t lo = 0, hi = 0;
  void set(Word w) { (w < 64 ? lo : hi) |= std::uint64_t(1) << (w & 63); }
  bool test(Word w) const { return ((w < 64 ? lo : hi) >> (w & 63)) & 1; }
  bool operator==(const Mask&) const = default;
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept {
    return std::hash<std::uint64_t>()(m.lo * 0x9e3779b97f4a7c15ull ^ m.hi);
  }
};

std::vector<Word> words_of(const Mask& m) {
  std::vector<Word> out;
  for (Word w = 0; w < 128; ++w)
    if (m.test(w)) out.push_back(w);
  return out;
}

Word swap_bits(Word w, int i) {
  Word a = (w >> i) & 1, b = (w >> (i + 1)) & 1;
  if (a != b) w ^= (Word(1) << i) | (Word(1) << (i + 1));
  return w;
}

Mask apply_swap(const Mask& m, int i) {
  Mask out;
  for (Word w : words_of(m)) out.set(swap_bits(w, i));
  return out;
}

}  // namespace

C2kReport classify_c2k(int n) {
  if (n < 1 || n > 7) throw InputError("classify_c2k supports 1 <= n <= 7");
  const Word top = Word(1) << n;

  // all subspaces by adjoining vectors, level by level
  std::vector<std::vector<Mask>> levels(n + 1);
  Mask zero;
  zero.set(0);
  levels[0].push_back(zero);
  for (int k = 0; k < n; ++k) {
    std::unordered_map<Mask, char, MaskHash> seen;
    for (const Mask& s : levels[k]) {
      std::vector<Word> ws = words_of(s);
      for (Word v = 1; v < top; ++v) {
        if (s.test(v)) continue;
        Mask t = s;
        for (Word w : ws) t.set(w ^ v);
        if (seen.emplace(t, 1).second) levels[k + 1].push_back(t);
      }
    }
  }

  C2kReport rep;
  rep.n = n;
  for (int k = 0; k <= n; ++k) {
    rep.subspaces.push_back(levels[k].size());
    std::unordered_map<Mask, char, MaskHash> visited;
    std::size_t orbits = 0;
    std::set<TraceVector> traces;
    std::set<std::pair<TraceVector, TKey>> keys;
    for (const Mask& s : levels[k]) {
      if (visited.count(s)) continue;
      ++orbits;
      std::vector<Mask> orbit{s};
      visited.emplace(s, 1);
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (int i = 0; i + 1 < n; ++i) {
          Mask t = apply_swap(orbit[q], i);
          if (visited.emplace(t, 1).second) orbit.push_back(t);
        }
      CodeClass cls;
      cls.k = k;
      cls.orbit_size = orbit.size();
      std::vector<Word> best;
      for (const Mask& m : orbit) {
        std::vector<Word> w = words_of(m);
        if (best.empty() || w < best) best = std::move(w);
      }
      cls.representative = {n, std::move(best)};
      cls.trace = trace_vector(cls.representative);
      cls.t = t_key(cls.representative);
      traces.insert(cls.trace);
      keys.insert({cls.trace, cls.t});
      rep.classes.push_back(std::move(cls));
    }
    rep.orbits.push_back(orbits);
    rep.trace_classes.push_back(traces.size());
    rep.key_classes.push_back(keys.size());
  }
  std::sort(rep.classes.begin(), rep.classes.end(), [](const CodeClass& a, const CodeClass& b) {
    return std::tie(a.k, a.trace, a.t, a.representative.words) <
           std::tie(b.k, b.trace, b.t, b.representative.words);
  });
  return rep;
}

std::map<TraceVector, std::vector<TKey>> split_trace_classes(const C2kReport& r, int k) {
  std::map<TraceVector, std::vector<TKey>> all;
  for (const auto& c : r.classes)
    if (c.k == k) all[c.trace].push_back(c.t);
  std::erase_if(all, [](const auto& kv) { return kv.second.size() < 2; });
  return all;
}

group::Subgroup subgroup_of_code(const group::MatGroup& g, const BinaryCode& c) {
  if (static_cast<int>(g.dim()) != c.n) throw LengthMismatch("code length differs from the group dimension");
  group::Subgroup h;
  h.parent = &g;
  for (Word w : c.words) {
    IntMatrix m = IntMatrix::identity(c.n);
    for (int i = 0; i < c.n; ++i)
      if ((w >> i) & 1) m(i, i) = -1;
    auto idx = g.find(m);
    if (!idx) throw InputError("codeword outside the sign group");
    h.elements.push_back(*idx);
  }
  std::sort(h.elements.begin(), h.elements.end());
  std::vector<Word> basis;
  std::set<Word> spanned{0};
  for (Word w : c.words)
    if (!spanned.count(w)) {
      basis.push_back(w);
      std::set<Word> more;
      for (Word s : spanned) more.insert(s ^ w);
      spanned.insert(more.begin(), more.end());
    }
  for (Word w : basis) {
    IntMatrix m = IntMatrix::identity(c.n);
    for (int i = 0; i < c.n; ++i)
      if ((w >> i) & 1) m(i, i) = -1;
    h.generators.push_back(*g.find(m));
  }
  return h;
}

BinaryCode code_of_subgroup(const group::Subgroup& h) {
  const group::MatGroup& g = *h.parent;
  const int n = static_cast<int>(g.dim());
  std::vector<Word> words;
  for (group::Index x : h.elements) {
    const IntMatrix& m = g.element(x);
    Word w = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (i != j && sgn(m(i, j)) != 0) throw InputError("element is not diagonal");
      if (m(i, i) == -1) w |= Word(1) << i;
      else if (m(i, i) != 1) throw InputError("element is not a sign matrix");
    }
    words.push_back(w);
  }
  return BinaryCode::span(n, words);
}

}  // namespace unram::catalog
