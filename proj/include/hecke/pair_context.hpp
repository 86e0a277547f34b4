#ifndef HECKE_PAIR_CONTEXT_HPP
#define HECKE_PAIR_CONTEXT_HPP

#include <memory>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/rational.hpp"

namespace hecke {

/// Shared immutable data for one pair (G, H): the right-coset basis of the
/// module F(G/H), the double-coset space, R(x) = |H/(H cap H^x)| and
/// Delta(x) = R(x)/R(x^{-1}) per double coset, plus cached rep families.
/// Everything downstream (operators, Hecke elements, reports) hangs off one
/// of these.
class PairContext {
 public:
  PairContext(const GroupTable& G, SubgroupRef H);

  const GroupTable& group() const { return *group_; }
  const SubgroupRef& subgroup() const { return H_; }

  const CosetSpace& right_cosets() const { return right_; }
  const CosetSpace& double_cosets() const { return double_; }

  /// Module dimension [G:H].
  int dim() const { return right_.count(); }
  int num_double_cosets() const { return double_.count(); }

  int right_block(int g) const { return right_.block_of[static_cast<size_t>(g)]; }
  int double_block(int g) const { return double_.block_of[static_cast<size_t>(g)]; }
  int right_rep(int block) const { return right_.reps[static_cast<size_t>(block)]; }
  int double_rep(int block) const { return double_.reps[static_cast<size_t>(block)]; }

  /// Rep family S_x for H/(H cap H^x), computed from the actual x (not its
  /// double-coset representative; operator equality across a double coset is
  /// a theorem, not an assumption).
  std::vector<int> sx_family(int x) const;

  /// |H/(H cap H^x)| = number of right cosets inside HxH.
  int R(int x) const { return R_[static_cast<size_t>(double_block(x))]; }
  Rational delta(int x) const { return delta_[static_cast<size_t>(double_block(x))]; }

  /// R and Delta indexed by double-coset block, in rep order.
  const std::vector<int>& R_by_block() const { return R_; }
  const std::vector<Rational>& delta_by_block() const { return delta_; }

 private:
  const GroupTable* group_;
  SubgroupRef H_;
  CosetSpace right_;
  CosetSpace double_;
  std::vector<int> R_;
  std::vector<Rational> delta_;
};

}  // namespace hecke

#endif
