#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "unram/catalog/codes.hpp"
#include "unram/catalog/families.hpp"
#include "unram/errors.hpp"

using namespace unram;
using namespace unram::catalog;

namespace {

Word permute(Word w, const std::vector<int>& p) {
  Word out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((w >> i) & 1) out |= Word(1) << p[i];
  return out;
}

// Orbit count by minimizing over all n! permutations.
std::vector<std::size_t> brute_orbits(int n) {
  std::vector<std::set<std::vector<Word>>> canon(n + 1);
  const Word top = Word(1) << n;
  // every subspace is the span of some list of at most n words; walk all
  // subsets of F_2^n that are closed under addition (n <= 4)
  for (unsigned long long s = 0; s < (1ull << top); ++s) {
    if (!(s & 1)) continue;
    bool closed = true;
    for (Word a = 0; a < top && closed; ++a)
      if ((s >> a) & 1)
        for (Word b = 0; b < top; ++b)
          if (((s >> b) & 1) && !((s >> (a ^ b)) & 1)) {
            closed = false;
            break;
          }
    if (!closed) continue;
    std::vector<Word> words;
    for (Word a = 0; a < top; ++a)
      if ((s >> a) & 1) words.push_back(a);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Word> best;
    do {
      std::vector<Word> img;
      for (Word w : words) img.push_back(permute(w, p));
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    } while (std::next_permutation(p.begin(), p.end()));
    canon[std::countr_zero(words.size())].insert(best);
  }
  std::vector<std::size_t> out;
  for (const auto& c : canon) out.push_back(c.size());
  return out;
}

}  // namespace

TEST_CASE("code spans and traces") {
  BinaryCode c = BinaryCode::span(4, {0b0011, 0b0110, 0b0101});
  CHECK(c.k() == 2);
  CHECK(c.words == std::vector<Word>{0, 0b0011, 0b0101, 0b0110});
  // traces 4 once and 0 three times
  CHECK(trace_vector(c) == TraceVector{0, 0, 3, 0, 1});
  CHECK(t_invariant(c, 0) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(t_invariant(c, 4), NotEnoughElements);
  CHECK_THROWS_AS(t_invariant(c, 2), NotEnoughElements);
  CHECK(t_key(c) == TKey{{0, {0, 0, 0}}});
  CHECK_THROWS_AS(BinaryCode::span(3, {0b1000}), InputError);
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial2(4, 2) == 35);
  CHECK(gaussian_binomial2(7, 3) == 11811);
  CHECK(gaussian_binomial2(5, 0) == 1);
  CHECK(gaussian_binomial2(5, 6) == 0);
}

TEST_CASE("subspace counts and orbit sums") {
  for (int n = 1; n <= 7; ++n) {
    C2kReport r = classify_c2k(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(r.subspaces[k] == gaussian_binomial2(n, k));
      std::size_t sum = 0, cnt = 0;
      for (const auto& c : r.classes)
        if (c.k == k) {
          sum += c.orbit_size;
          ++cnt;
        }
      CHECK(sum == r.subspaces[k]);
      CHECK(cnt == r.orbits[k]);
      CHECK(r.trace_classes[k] <= r.key_classes[k]);
      CHECK(r.key_classes[k] <= r.orbits[k]);
    }
  }
  CHECK(classify_c2k(7).total_subspaces() == 29212);
  CHECK_THROWS_AS(classify_c2k(8), InputError);
}

TEST_CASE("orbit counts against exhaustive permutation") {
  for (int n = 1; n <= 4; ++n) CHECK(classify_c2k(n).orbits == brute_orbits(n));
}

TEST_CASE("classification of subgroups of sign_diag_6 and sign_diag_7") {
  C2kReport r6 = classify_c2k(6);
  CHECK(r6.orbits == std::vector<std::size_t>{1, 6, 16, 22, 16, 6, 1});
  CHECK(r6.trace_classes[3] == 21);
  CHECK(r6.key_classes == r6.orbits);

  C2kReport r7 = classify_c2k(7);
  CHECK(r7.orbits == std::vector<std::size_t>{1, 7, 23, 43, 43, 23, 7, 1});
  CHECK(r7.trace_classes == std::vector<std::size_t>{1, 7, 23, 41, 41, 23, 7, 1});
  CHECK(r7.key_classes == r7.orbits);

  // the n = 6, k = 3 trace class holding two orbits is split by T
  std::map<TraceVector, std::vector<const CodeClass*>> by_trace;
  for (const auto& c : r6.classes)
    if (c.k == 3) by_trace[c.trace].push_back(&c);
  std::size_t shared = 0;
  for (const auto& [t, cs] : by_trace)
    if (cs.size() > 1) {
      ++shared;
      REQUIRE(cs.size() == 2);
      CHECK(cs[0]->t != cs[1]->t);
    }
  CHECK(shared == 1);
}

TEST_CASE("class data is permutation invariant") {
  C2kReport r = classify_c2k(5);
  std::vector<int> p{2, 0, 4, 1, 3};
  for (const auto& c : r.classes) {
    std::vector<Word> img;
    for (Word w : c.representative.words) img.push_back(permute(w, p));
    BinaryCode d = BinaryCode::span(5, img);
    CHECK(trace_vector(d) == c.trace);
    CHECK(t_key(d) == c.t);
    CHECK(d.k() == c.k);
    // the representative is least in its orbit
    CHECK_FALSE(d.words < c.representative.words);
  }
}

TEST_CASE("codes and subgroups of the sign group") {
  MatGroup g = builtin("sign_diag_4");
  CHECK(g.order() == 16);
  for (const auto& c : classify_c2k(4).classes) {
    group::Subgroup h = subgroup_of_code(g, c.representative);
    CHECK(h.order() == c.representative.words.size());
    CHECK(h.generators.size() == std::size_t(c.k));
    CHECK(group::subgroup_generated(g, h.generators) == h);
    CHECK(code_of_subgroup(h) == c.representative);
  }
  CHECK_THROWS_AS(subgroup_of_code(g, BinaryCode::span(3, {1})), LengthMismatch);
}

TEST_CASE("T invariants split the two exceptional classes at n = 7, k = 3") {
  C2kReport r = classify_c2k(7);
  auto split = split_trace_classes(r, 3);
  REQUIRE(split.size() == 2);
  const TraceVector a{0, 1, 2, 1, 2, 1, 0, 1}, b{0, 1, 0, 3, 0, 3, 0, 1};
  REQUIRE(split.count(a));
  REQUIRE(split.count(b));
  std::set<std::vector<int>> ta, tb;
  for (const auto& key : split[a]) ta.insert(key.at(1));
  for (const auto& key : split[b]) tb.insert(key.at(3));
  CHECK(ta == std::set<std::vector<int>>{{-1}, {3}});
  CHECK(tb == std::set<std::vector<int>>{{-1, -1, -1}, {3, 3, 3}});
  // k = 4 splits the same way, by the complementary invariants
  CHECK(split_trace_classes(r, 4).size() == 2);
  for (int k : {0, 1, 2, 5, 6, 7}) CHECK(split_trace_classes(r, k).empty());
}

TEST_CASE("class counts for n <= 5") {
  using V = std::vector<std::size_t>;
  CHECK(classify_c2k(2).orbits == V{1, 2, 1});
  CHECK(classify_c2k(3).orbits == V{1, 3, 3, 1});
  CHECK(classify_c2k(4).orbits == V{1, 4, 6, 4, 1});
  CHECK(classify_c2k(5).orbits == V{1, 5, 10, 10, 5, 1});
  CHECK(classify_c2k(1).orbits == V{1, 1});
}
