#pragma once

#include <memory>
#include <vector>

#include "unram/group/mat_group.hpp"

namespace unram::cohomology {

using exactla::Int;
using exactla::IntMatrix;
using exactla::IntVector;
using group::GroupPtr;
using group::Index;
using group::MatGroup;
using group::Subgroup;

// A G-lattice Z^d with G acting from the right through rho, not
// necessarily faithfully. rho is stored for every element.
class GLattice {
 public:
  // The natural lattice of a matrix group.
  explicit GLattice(GroupPtr g);
  // rho(generator i) = images[i]; throws InputError when the images do not
  // define a homomorphism from g.
  GLattice(GroupPtr g, std::vector<IntMatrix> generator_images);

  const MatGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return group_->order(); }
  std::size_t num_generators() const noexcept { return group_->generators().size(); }
  const IntMatrix& rho(Index g) const { return action_[g]; }
  const IntMatrix& rho_generator(std::size_t s) const {
    return action_[group_->generator_indices()[s]];
  }

  // The same abstract action on the coordinate sublattice spanned by
  // `coords`; every rho must preserve it (checked).
  GLattice block(const std::vector<std::size_t>& coords) const;
  // Restriction to a subgroup, on a freshly materialized sub-MatGroup whose
  // element k is parent element h.elements[k].
  GLattice restrict_to(const Subgroup& h) const;
  // Direct sum with another lattice over the same group object.
  GLattice direct_sum(const GLattice& other) const;

 private:
  GLattice() = default;
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<IntMatrix> action_;
};

}  // namespace unram::cohomology
