#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "unram/exactla/int_matrix.hpp"
#include "unram/parallel.hpp"

namespace unram::group {

using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;
using Index = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 20000;
inline constexpr std::size_t kTableThreshold = 1024;

// Finite subgroup of GL_d(Z) acting on row vectors from the right.
// Elements are stored in canonical order: identity first, then
// lexicographic on the flattened entries.
class MatGroup {
 public:
  static MatGroup close(std::size_t dim, std::vector<IntMatrix> generators,
                        std::size_t cap = kDefaultCap);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<IntMatrix>& generators() const noexcept { return generators_; }
  // Element index of each generator.
  const std::vector<Index>& generator_indices() const noexcept { return gen_idx_; }
  const IntMatrix& element(Index i) const { return elements_[i]; }
  const std::vector<IntMatrix>& elements() const noexcept { return elements_; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, long e) const;
  std::size_t element_order(Index a) const { return orders_[a]; }
  std::optional<Index> find(const IntMatrix& m) const;
  Index index_of(const IntMatrix& m) const;

  bool has_table() const noexcept { return !table_.empty(); }
  bool is_abelian() const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  // A word in the generators reaching each element: element i equals
  // element(word_parent(i)) * generator(word_gen(i)); the identity has
  // parent 0 and generator -1.
  Index word_parent(Index i) const { return parent_[i]; }
  int word_gen(Index i) const { return parent_gen_[i]; }
  // Elements in breadth-first order from the identity.
  const std::vector<Index>& bfs_order() const noexcept { return bfs_; }

  // Sub-MatGroup on a closed index set. Its canonical order coincides with
  // the sorted parent indices, so element k is parent element indices[k].
  MatGroup restricted_to(const std::vector<Index>& indices,
                         const std::vector<Index>& generators) const;

 private:
  void build_structure();

  std::size_t dim_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<Index> gen_idx_;
  std::vector<IntMatrix> elements_;
  std::unordered_map<IntMatrix, Index, exactla::IntMatrixHash> index_;
  std::vector<Index> table_;  // order x order when cached
  std::vector<Index> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<Index> parent_;
  std::vector<int> parent_gen_;
  std::vector<Index> bfs_;
};

using GroupPtr = std::shared_ptr<const MatGroup>;

struct Subgroup {
  const MatGroup* parent = nullptr;
  std::vector<Index> elements;    // sorted parent indices
  std::vector<Index> generators;  // parent indices

  std::size_t order() const noexcept { return elements.size(); }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup subgroup_generated(const MatGroup& g, const std::vector<Index>& gens);
bool is_closed_subset(const MatGroup& g, const std::vector<Index>& sorted);
bool is_abelian(const MatGroup& g, const std::vector<Index>& elements);

bool is_bicyclic(const Subgroup& h);
// Cyclic and two-generator subgroups, deduplicated, trivial dropped, in
// order of (size descending, element set). Commuting pairs are scanned in
// parallel unless exec is serial.
std::vector<Subgroup> bicyclic_subgroups(const MatGroup& g, bool maximal_only,
                                         Exec exec = Exec::parallel);
// First member of each conjugacy orbit, in input order.
std::vector<Subgroup> conjugacy_reduce(const MatGroup& g, const std::vector<Subgroup>& subs);
// The full set of conjugates of each subgroup, deduplicated.
std::vector<Subgroup> all_conjugates(const MatGroup& g, const std::vector<Subgroup>& subs);

struct Abelianization {
  IntVector invariants;             // divisor chain of G/[G,G]
  std::vector<IntVector> image;     // per element, residues mod invariants
  std::vector<Index> commutator;    // sorted element indices of [G,G]
};
Abelianization abelianization(const MatGroup& g);

MatGroup conjugate_group(const MatGroup& g, const IntMatrix& p);
MatGroup block_sum_action(const std::vector<IntMatrix>& gens1,
                          const std::vector<IntMatrix>& gens2);

// Connected components of the coordinate graph joining i and j whenever a
// generator has a nonzero (i, j) entry. For a group that is block diagonal
// up to ordering these are the blocks.
std::vector<std::vector<std::size_t>> coordinate_blocks(const MatGroup& g);
// The group generated by the generators restricted to one coordinate block.
MatGroup block_image(const MatGroup& g, const std::vector<std::size_t>& block);

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  IntVector abelian_invariants;
  std::map<std::size_t, std::size_t> order_histogram;
  std::size_t exponent = 1;
  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const MatGroup& g);

}  // namespace unram::group
