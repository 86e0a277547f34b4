#include "hecke/pair_context.hpp"

namespace hecke {

PairContext::PairContext(const GroupTable& G, SubgroupRef H)
    : group_(&G), H_(std::move(H)) {
  if (&H_.parent() != &G) throw ValidationError("subgroup belongs to a different group");
  right_ = coset_space(H_, CosetKind::right);
  double_ = coset_space(H_, CosetKind::twosided);

  R_.resize(static_cast<size_t>(double_.count()));
  for (int b = 0; b < double_.count(); ++b) {
    int x = double_.reps[static_cast<size_t>(b)];
    R_[static_cast<size_t>(b)] = static_cast<int>(sx_family(x).size());
    // |HxH| = R(x) * |H| (each double coset splits into R(x) right cosets)
    if (static_cast<int>(double_.blocks[static_cast<size_t>(b)].size()) !=
        R_[static_cast<size_t>(b)] * H_.size())
      throw TheoremContradiction("double coset size != R(x) * |H|");
  }
  delta_.resize(static_cast<size_t>(double_.count()));
  for (int b = 0; b < double_.count(); ++b) {
    int x = double_.reps[static_cast<size_t>(b)];
    int rx = R_[static_cast<size_t>(b)];
    int rxinv = R_[static_cast<size_t>(double_block(group_->inv(x)))];
    delta_[static_cast<size_t>(b)] = Rational(rx, rxinv);
  }
}

std::vector<int> PairContext::sx_family(int x) const {
  const GroupTable& G = *group_;
  if (x < 0 || x >= G.order()) throw ValidationError("element index out of range");
  SubgroupRef Hx = conjugate_subgroup(H_, x);
  std::vector<int> inter;
  for (int h : H_.elements())
    if (Hx.contains(h)) inter.push_back(h);
  SubgroupRef K(G, std::move(inter));
  return rep_family(H_, K);
}

}  // namespace hecke
