#include "unram/cohomology/glattice.hpp"

#include "unram/errors.hpp"

namespace unram::cohomology {

GLattice::GLattice(GroupPtr g) : group_(std::move(g)), dim_(group_->dim()) {
  action_ = group_->elements();
}

GLattice::GLattice(GroupPtr g, std::vector<IntMatrix> images) : group_(std::move(g)) {
  const MatGroup& G = *group_;
  if (images.size() != G.generators().size())
    throw LengthMismatch("one image matrix is needed per generator");
  dim_ = images.empty() ? 0 : images[0].rows();
  for (const auto& m : images)
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("image matrices differ in shape");
  action_.assign(G.order(), IntMatrix::identity(dim_));
  for (Index x : G.bfs_order()) {
    if (x == 0) continue;
    action_[x] = action_[G.word_parent(x)] * images[G.word_gen(x)];
  }
  for (Index x = 0; x < G.order(); ++x)
    for (std::size_t s = 0; s < images.size(); ++s)
      if (action_[G.mul(x, G.generator_indices()[s])] != action_[x] * images[s])
        throw InputError("generator images do not define an action of the group");
}

GLattice GLattice::block(const std::vector<std::size_t>& coords) const {
  std::vector<char> in(dim_, 0);
  for (std::size_t c : coords) {
    if (c >= dim_) throw InputError("block coordinate out of range");
    in[c] = 1;
  }
  GLattice b;
  b.group_ = group_;
  b.dim_ = coords.size();
  for (const auto& m : action_) {
    for (std::size_t r : coords)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!in[c] && sgn(m(r, c)) != 0) throw InputError("coordinate block is not invariant");
    b.action_.push_back(m.select_rows(coords).select_cols(coords));
  }
  return b;
}

GLattice GLattice::restrict_to(const Subgroup& h) const {
  if (h.parent != group_.get()) throw InputError("subgroup of a different group");
  auto sub = std::make_shared<const MatGroup>(group_->restricted_to(h.elements, h.generators));
  GLattice r;
  r.group_ = std::move(sub);
  r.dim_ = dim_;
  for (Index x : h.elements) r.action_.push_back(action_[x]);
  return r;
}

GLattice GLattice::direct_sum(const GLattice& other) const {
  if (other.group_ != group_) throw InputError("direct sum over different group objects");
  GLattice s;
  s.group_ = group_;
  s.dim_ = dim_ + other.dim_;
  for (std::size_t i = 0; i < action_.size(); ++i)
    s.action_.push_back(exactla::block_diagonal(action_[i], other.action_[i]));
  return s;
}

}  // namespace unram::cohomology
