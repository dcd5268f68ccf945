#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unram/group/mat_group.hpp"

namespace unram::catalog {

using Word = std::uint32_t;

// Linear binary code of length n <= 16: a subspace of F_2^n, stored as its
// sorted list of codewords (bit i set <=> coordinate i is -1).
struct BinaryCode {
  int n = 0;
  std::vector<Word> words;

  // Span of the given words (throws InputError if a word has bits >= n).
  static BinaryCode span(int n, const std::vector<Word>& gens);
  int k() const;
  bool operator==(const BinaryCode&) const = default;
  bool operator<(const BinaryCode& o) const { return words < o.words; }
};

// t[i] = number of codewords with trace -n + 2i, i.e. weight n - i.
using TraceVector = std::vector<std::size_t>;
TraceVector trace_vector(const BinaryCode& c);

// Sorted traces n - 2 wt(u + v) over unordered pairs of distinct codewords
// of trace `trace`. Throws NotEnoughElements when fewer than two exist.
std::vector<int> t_invariant(const BinaryCode& c, int trace);

// trace -> T multiset, for every trace carried by at least two codewords
using TKey = std::map<int, std::vector<int>>;
TKey t_key(const BinaryCode& c);

struct CodeClass {
  int k = 0;
  TraceVector trace;
  TKey t;
  BinaryCode representative;  // numerically least word set in the orbit
  std::size_t orbit_size = 0;
};

struct C2kReport {
  int n = 0;
  std::vector<std::size_t> subspaces;    // per k = 0..n
  std::vector<std::size_t> orbits;       // per k = 0..n
  std::vector<std::size_t> trace_classes;  // distinct trace vectors per k
  std::vector<std::size_t> key_classes;    // distinct (trace, T) keys per k
  std::vector<CodeClass> classes;        // sorted by (k, trace, T, representative)
  std::size_t total_subspaces() const;
};

// All subspaces of F_2^n up to coordinate permutation, 1 <= n <= 7.
C2kReport classify_c2k(int n);

// Trace vectors at level k carried by more than one orbit, with the T keys
// of those orbits in class order.
std::map<TraceVector, std::vector<TKey>> split_trace_classes(const C2kReport& r, int k);

// Number of k-dimensional subspaces of F_2^n (Gaussian binomial).
std::size_t gaussian_binomial2(int n, int k);

// Bridge to sign_diag_n: the subgroup of diagonal sign matrices with the
// given code, and the code of a subgroup of a diagonal sign group.
group::Subgroup subgroup_of_code(const group::MatGroup& sign_diag, const BinaryCode& c);
BinaryCode code_of_subgroup(const group::Subgroup& h);

}  // namespace unram::catalog
