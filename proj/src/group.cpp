#include "hecke/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hecke {

GroupTable GroupTable::from_table(std::vector<std::vector<int>> mul,
                                  std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n <= 0) throw ValidationError("group table must be non-empty");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
  }

  // locate the identity, relabel it to index 0 if needed
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (mul[e][x] != x || mul[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) id = e;
  }
  if (id < 0) throw ValidationError("group table has no identity element");
  if (id != 0) {
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    relabel[0] = id;
    relabel[id] = 0;
    std::vector<std::vector<int>> remapped(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        remapped[x][y] = relabel[mul[relabel[x]][relabel[y]]];  // relabel is an involution
    mul = std::move(remapped);
    if (!labels.empty()) std::swap(labels[0], labels[static_cast<size_t>(id)]);
  }

  GroupTable g;
  g.order_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.mul_[static_cast<size_t>(x) * n + y] = mul[x][y];

  g.inv_.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        g.inv_[static_cast<size_t>(x)] = y;
        break;
      }
    if (g.inv_[static_cast<size_t>(x)] < 0)
      throw ValidationError("group table element " + std::to_string(x) + " has no inverse");
  }

  // full associativity sweep
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z)))
          throw ValidationError("group table is not associative at (" + std::to_string(x) +
                                "," + std::to_string(y) + "," + std::to_string(z) + ")");
    }

  if (!labels.empty()) g.set_labels(std::move(labels));
  return g;
}

std::string GroupTable::label(int x) const {
  if (x >= 0 && x < order_ && !labels_.empty()) return labels_[static_cast<size_t>(x)];
  return "g" + std::to_string(x);
}

void GroupTable::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != order_)
    throw ValidationError("label array length does not match group order");
  labels_ = std::move(labels);
}

SubgroupRef::SubgroupRef(const GroupTable& parent, std::vector<int> elements)
    : parent_(&parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const int n = parent.order();
  member_.assign(static_cast<size_t>(n), 0);
  for (int x : elements_) {
    if (x < 0 || x >= n) throw ValidationError("subgroup element index out of range");
    member_[static_cast<size_t>(x)] = 1;
  }
  if (elements_.empty() || !contains(GroupTable::identity()))
    throw ValidationError("subgroup must contain the identity");
  for (int a : elements_) {
    if (!contains(parent.inv(a))) throw ValidationError("subgroup not closed under inverse");
    for (int b : elements_)
      if (!contains(parent.mul(a, b)))
        throw ValidationError("subgroup not closed under multiplication");
  }
}

bool SubgroupRef::is_subset_of(const SubgroupRef& o) const {
  if (!same_parent(o)) return false;
  for (int x : elements_)
    if (!o.contains(x)) return false;
  return true;
}

bool SubgroupRef::is_normal_in_parent() const {
  const GroupTable& G = *parent_;
  for (int g = 0; g < G.order(); ++g)
    for (int h : elements_)
      if (!contains(G.conjugate(h, g))) return false;
  return true;
}

bool SubgroupRef::normalized_by(int g) const {
  for (int h : elements_)
    if (!contains(parent_->conjugate(h, g))) return false;
  return true;
}

namespace {

std::vector<int> closure(const GroupTable& G, std::vector<int> seed) {
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      work.push_back(x);
    }
  };
  push(GroupTable::identity());
  for (int g : seed) {
    if (g < 0 || g >= G.order()) throw ValidationError("generator index out of range");
    push(g);
  }
  for (size_t i = 0; i < work.size(); ++i) {
    int a = work[i];
    push(G.inv(a));
    for (size_t j = 0; j < work.size(); ++j) {
      push(G.mul(a, work[j]));
      push(G.mul(work[j], a));
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace

SubgroupRef generate_subgroup(const GroupTable& G, const std::vector<int>& gens) {
  return SubgroupRef(G, closure(G, gens));
}

SubgroupRef conjugate_subgroup(const SubgroupRef& H, int x) {
  const GroupTable& G = H.parent();
  if (x < 0 || x >= G.order()) throw ValidationError("conjugating element out of range");
  std::vector<int> elems;
  elems.reserve(H.elements().size());
  for (int h : H.elements()) elems.push_back(G.conjugate(h, x));
  return SubgroupRef(G, std::move(elems));
}

std::vector<int> set_product(const GroupTable& G, const std::vector<int>& A,
                             const std::vector<int>& B) {
  std::vector<char> seen(static_cast<size_t>(G.order()), 0);
  for (int a : A) {
    if (a < 0 || a >= G.order()) throw ValidationError("set element out of range");
    for (int b : B) {
      if (b < 0 || b >= G.order()) throw ValidationError("set element out of range");
      seen[static_cast<size_t>(G.mul(a, b))] = 1;
    }
  }
  std::vector<int> out;
  for (int x = 0; x < G.order(); ++x)
    if (seen[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

CommuteResult subgroups_commute(const SubgroupRef& A, const SubgroupRef& B) {
  if (!A.same_parent(B)) throw ValidationError("subgroups live in different groups");
  const GroupTable& G = A.parent();
  CommuteResult res;
  res.commute = set_product(G, A.elements(), B.elements()) ==
                set_product(G, B.elements(), A.elements());
  if (!res.commute) {
    std::vector<int> BA = set_product(G, B.elements(), A.elements());
    std::vector<char> in_BA(static_cast<size_t>(G.order()), 0);
    for (int x : BA) in_BA[static_cast<size_t>(x)] = 1;
    for (int a : A.elements()) {
      for (int b : B.elements())
        if (!in_BA[static_cast<size_t>(G.mul(a, b))]) {
          res.witness = {a, b};
          return res;
        }
      if (res.witness) break;
    }
    // AB != BA with AB subset of BA cannot happen for finite subgroups
    // (both products have |A||B|/|A cap B| elements)
    throw TheoremContradiction("set products differ but no witness found");
  }
  return res;
}

CosetSpace coset_space(const SubgroupRef& H, CosetKind kind) {
  const GroupTable& G = H.parent();
  const int n = G.order();
  CosetSpace cs;
  cs.kind = kind;
  cs.block_of.assign(static_cast<size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (cs.block_of[static_cast<size_t>(g)] >= 0) continue;
    std::vector<int> block;
    switch (kind) {
      case CosetKind::right:  // Hg
        for (int h : H.elements()) block.push_back(G.mul(h, g));
        break;
      case CosetKind::left:  // gH
        for (int h : H.elements()) block.push_back(G.mul(g, h));
        break;
      case CosetKind::twosided:  // HgH
        for (int h : H.elements())
          for (int k : H.elements()) block.push_back(G.mul(G.mul(h, g), k));
        break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    int idx = cs.count();
    for (int x : block) cs.block_of[static_cast<size_t>(x)] = idx;
    cs.reps.push_back(block.front());  // g is minimal: all smaller indices already assigned
    cs.blocks.push_back(std::move(block));
  }
  return cs;
}

std::vector<int> rep_family(const SubgroupRef& H, const SubgroupRef& K) {
  if (!H.same_parent(K)) throw ValidationError("rep_family across different groups");
  if (!K.is_subset_of(H)) throw ValidationError("rep_family requires K to be a subgroup of H");
  const GroupTable& G = H.parent();
  std::vector<char> covered(static_cast<size_t>(G.order()), 0);
  std::vector<int> reps;
  for (int h : H.elements()) {
    if (covered[static_cast<size_t>(h)]) continue;
    reps.push_back(h);
    for (int k : K.elements()) covered[static_cast<size_t>(G.mul(k, h))] = 1;
  }
  return reps;
}

std::vector<int> chain_rep_product(const SubgroupRef& A, const SubgroupRef& B,
                                   const SubgroupRef& C) {
  if (!A.is_subset_of(B) || !B.is_subset_of(C))
    throw ValidationError("chain_rep_product requires A <= B <= C");
  const GroupTable& G = A.parent();
  std::vector<int> b_reps = rep_family(B, A);
  std::vector<int> c_reps = rep_family(C, B);
  std::vector<int> fam;
  fam.reserve(b_reps.size() * c_reps.size());
  for (int b : b_reps)
    for (int c : c_reps) fam.push_back(G.mul(b, c));

  // verify: exactly one member per right coset of A in C
  std::vector<char> hit(static_cast<size_t>(G.order()), 0);
  size_t covered = 0;
  for (int f : fam) {
    for (int a : A.elements()) {
      int x = G.mul(a, f);
      if (hit[static_cast<size_t>(x)])
        throw TheoremContradiction("chain rep product hit a coset twice");
      hit[static_cast<size_t>(x)] = 1;
      ++covered;
    }
  }
  if (covered != C.elements().size())
    throw TheoremContradiction("chain rep product does not cover C");
  return fam;
}

SubgroupRef normal_closure(const SubgroupRef& H) {
  const GroupTable& G = H.parent();
  std::vector<int> gens;
  for (int x = 0; x < G.order(); ++x)
    for (int h : H.elements()) gens.push_back(G.mul(G.mul(x, h), G.inv(x)));  // x h x^{-1}
  return generate_subgroup(G, gens);
}

std::vector<SubgroupRef> all_subgroups(const GroupTable& G) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  auto add = [&](std::vector<int> elems) {
    if (known.insert(elems).second) frontier.push_back(std::move(elems));
  };
  add(closure(G, {}));
  for (int g = 1; g < G.order(); ++g) add(closure(G, {g}));
  for (size_t i = 0; i < frontier.size(); ++i) {
    std::vector<int> base = frontier[i];  // copy: frontier may reallocate
    if (static_cast<int>(base.size()) == G.order()) continue;
    std::vector<char> in(static_cast<size_t>(G.order()), 0);
    for (int x : base) in[static_cast<size_t>(x)] = 1;
    for (int g = 1; g < G.order(); ++g) {
      if (in[static_cast<size_t>(g)]) continue;
      std::vector<int> seed = base;
      seed.push_back(g);
      add(closure(G, seed));
    }
  }
  std::vector<std::vector<int>> sorted(known.begin(), known.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupRef> out;
  out.reserve(sorted.size());
  for (auto& elems : sorted) out.emplace_back(G, std::move(elems));
  return out;
}

}  // namespace hecke
