#ifndef HECKE_GROUP_HPP
#define HECKE_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// A finite group as a dense multiplication table over element indices
/// 0..n-1. The identity is always index 0 (builders relabel to enforce it)
/// and the full group axioms, associativity included, are verified at
/// construction.
class GroupTable {
 public:
  /// Empty placeholder (order 0); assign a real table before use.
  GroupTable() = default;

  /// Validates a raw table. If the identity is not at index 0 the elements
  /// are relabeled by swapping it there first.
  static GroupTable from_table(std::vector<std::vector<int>> mul,
                               std::vector<std::string> labels = {});

  int order() const { return order_; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * order_ + y]; }
  int inv(int x) const { return inv_[static_cast<size_t>(x)]; }
  static constexpr int identity() { return 0; }

  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^{-1} x g

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int order_ = 0;
  std::vector<int> mul_;  // row-major order_ x order_
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// A verified subgroup: strictly sorted element indices inside a parent
/// GroupTable, with O(1) membership. Construction checks identity, closure
/// and inverses.
class SubgroupRef {
 public:
  SubgroupRef(const GroupTable& parent, std::vector<int> elements);

  const GroupTable& parent() const { return *parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const { return member_[static_cast<size_t>(x)] != 0; }

  bool same_parent(const SubgroupRef& o) const { return parent_ == o.parent_; }
  bool operator==(const SubgroupRef& o) const {
    return parent_ == o.parent_ && elements_ == o.elements_;
  }

  bool is_subset_of(const SubgroupRef& o) const;
  bool is_normal_in_parent() const;
  /// Whether g normalizes this subgroup: g^{-1} H g = H.
  bool normalized_by(int g) const;

 private:
  const GroupTable* parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

enum class CosetKind { right, left, twosided };

/// A full coset partition of the parent group: right cosets Hg, left cosets
/// gH, or double cosets HgH. Blocks are ordered by their minimal element,
/// which is also the chosen representative.
struct CosetSpace {
  CosetKind kind;
  std::vector<std::vector<int>> blocks;  // each sorted ascending
  std::vector<int> reps;                 // block minima, ascending
  std::vector<int> block_of;             // element index -> block index

  int count() const { return static_cast<int>(blocks.size()); }
};

// ---- group-core operations ----

/// Smallest subgroup of G containing the given generators.
SubgroupRef generate_subgroup(const GroupTable& G, const std::vector<int>& gens);

/// H^x = x^{-1} H x as a verified subgroup.
SubgroupRef conjugate_subgroup(const SubgroupRef& H, int x);

/// Exact set product AB = {ab : a in A, b in B}, sorted and deduplicated.
std::vector<int> set_product(const GroupTable& G, const std::vector<int>& A,
                             const std::vector<int>& B);

struct CommuteResult {
  bool commute = false;
  // On failure: lexicographically minimal (a, b) with ab not in BA.
  std::optional<std::pair<int, int>> witness;
};

/// Whether AB = BA as sets (set-equality semantics).
CommuteResult subgroups_commute(const SubgroupRef& A, const SubgroupRef& B);

CosetSpace coset_space(const SubgroupRef& H, CosetKind kind);

/// One element of H per right coset of K in H (K must be a subgroup of H);
/// deterministic: the minimal element index per coset, ascending.
std::vector<int> rep_family(const SubgroupRef& H, const SubgroupRef& K);

/// Products { b*c } of rep families for B/A and C/B along a chain A <= B <= C;
/// verified to be a rep family for C/A of size |C/A| (Lemma: index is
/// multiplicative along chains).
std::vector<int> chain_rep_product(const SubgroupRef& A, const SubgroupRef& B,
                                   const SubgroupRef& C);

/// Smallest normal subgroup of G containing H: closure of all conjugates.
SubgroupRef normal_closure(const SubgroupRef& H);

/// Every subgroup of G, ordered by (size, elements). Intended for small
/// orders (the corpus cap); cost grows with the subgroup lattice.
std::vector<SubgroupRef> all_subgroups(const GroupTable& G);

}  // namespace hecke

#endif
