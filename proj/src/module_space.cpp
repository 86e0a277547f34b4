#include "hecke/module_space.hpp"

#include <algorithm>

namespace hecke {

ModuleVector ModuleVector::basis(const PairContext& c, int g) {
  ModuleVector v = zero(c);
  v.coeffs[static_cast<size_t>(c.right_block(g))] = Rational(1);
  return v;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

ModuleVector ModuleVector::operator*(const Rational& s) const {
  ModuleVector r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

ModuleOperator ModuleOperator::operator+(const ModuleOperator& o) const {
  ModuleOperator r = *this;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r.m[i][j] += o.m[i][j];
  return r;
}

ModuleOperator ModuleOperator::operator-(const ModuleOperator& o) const {
  ModuleOperator r = *this;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r.m[i][j] -= o.m[i][j];
  return r;
}

ModuleOperator ModuleOperator::operator*(const Rational& s) const {
  ModuleOperator r = *this;
  for (auto& row : r.m)
    for (auto& c : row) c *= s;
  return r;
}

namespace {

ModuleOperator averaged_left_mul(const PairContext& ctx, int x,
                                 const std::vector<int>& family) {
  const GroupTable& G = ctx.group();
  ModuleOperator op = ModuleOperator::zero(ctx);
  Rational weight(1, static_cast<std::int64_t>(family.size()));
  for (int col = 0; col < ctx.dim(); ++col) {
    int t = ctx.right_rep(col);
    for (int h : family) {
      int image = G.mul(G.mul(x, h), t);
      op.m[static_cast<size_t>(ctx.right_block(image))][static_cast<size_t>(col)] += weight;
    }
  }
  return op;
}

}  // namespace

ModuleOperator sigma_op(const PairContext& ctx, int x) {
  return averaged_left_mul(ctx, x, ctx.sx_family(x));
}

ModuleOperator sigma_op_with_family(const PairContext& ctx, int x,
                                    const std::vector<int>& family) {
  // validate: family must hit each right coset of H cap H^x in H exactly once
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  SubgroupRef Hx = conjugate_subgroup(H, x);
  std::vector<char> hit(static_cast<size_t>(G.order()), 0);
  size_t covered = 0;
  for (int f : family) {
    if (!H.contains(f)) throw ValidationError("rep family member outside H");
    for (int h : H.elements()) {
      if (!Hx.contains(h)) continue;
      int y = G.mul(h, f);
      if (hit[static_cast<size_t>(y)]) throw ValidationError("rep family hits a coset twice");
      hit[static_cast<size_t>(y)] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(H.size()))
    throw ValidationError("rep family does not cover H");
  return averaged_left_mul(ctx, x, family);
}

ModuleOperator sigma_op_alt(const PairContext& ctx, int x) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  SubgroupRef Hx = conjugate_subgroup(H, x);
  auto comm = subgroups_commute(Hx, H);
  if (!comm.commute)
    throw ValidationError("sigma_op_alt requires H^x and H to commute (H protonormal at x)");
  SubgroupRef HxH(G, set_product(G, Hx.elements(), H.elements()));
  std::vector<int> family = rep_family(HxH, Hx);  // one element per H^x k inside H^x H
  return averaged_left_mul(ctx, x, family);
}

ModuleOperator rho_op(const PairContext& ctx, int g) {
  const GroupTable& G = ctx.group();
  ModuleOperator op = ModuleOperator::zero(ctx);
  for (int col = 0; col < ctx.dim(); ++col) {
    int t = ctx.right_rep(col);
    op.m[static_cast<size_t>(ctx.right_block(G.mul(t, g)))][static_cast<size_t>(col)] =
        Rational(1);
  }
  return op;
}

Rational hermitian_form(const ModuleVector& xi, const ModuleVector& eta) {
  const PairContext& ctx = *xi.ctx;
  if (eta.ctx != xi.ctx) throw ValidationError("hermitian form across different contexts");
  Rational acc;
  for (int b = 0; b < ctx.dim(); ++b) {
    const auto i = static_cast<size_t>(b);
    if (xi.coeffs[i].is_zero() || eta.coeffs[i].is_zero()) continue;
    acc += xi.coeffs[i] * eta.coeffs[i] * ctx.delta(ctx.right_rep(b));
  }
  return acc;
}

ModuleVector mu_average(const PairContext& ctx, const std::vector<int>& coset_elements) {
  if (coset_elements.empty()) throw ValidationError("mu_average of an empty set");
  std::vector<int> blocks;
  for (int g : coset_elements) blocks.push_back(ctx.right_block(g));
  std::sort(blocks.begin(), blocks.end());
  if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
    throw ValidationError("mu_average given two elements of the same coset");
  ModuleVector v = ModuleVector::zero(ctx);
  Rational weight(1, static_cast<std::int64_t>(blocks.size()));
  for (int b : blocks) v.coeffs[static_cast<size_t>(b)] = weight;
  return v;
}

namespace {

// Rep family for K/(H cap K); the cosets Hk for k in it are exactly HK/H.
std::vector<int> hk_coset_reps(const PairContext& ctx, const SubgroupRef& K) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  auto comm = subgroups_commute(H, K);
  if (!comm.commute) throw ValidationError("K does not commute with H");
  std::vector<int> inter;
  for (int k : K.elements())
    if (H.contains(k)) inter.push_back(k);
  SubgroupRef HcapK(G, std::move(inter));
  return rep_family(K, HcapK);
}

}  // namespace

ModuleVector q_element(const PairContext& ctx, const SubgroupRef& K) {
  return mu_average(ctx, hk_coset_reps(ctx, K));
}

ModuleOperator Q_operator(const PairContext& ctx, const SubgroupRef& K) {
  const GroupTable& G = ctx.group();
  std::vector<int> reps = hk_coset_reps(ctx, K);
  Rational weight(1, static_cast<std::int64_t>(reps.size()));
  ModuleOperator op = ModuleOperator::zero(ctx);
  for (int col = 0; col < ctx.dim(); ++col) {
    int t = ctx.right_rep(col);
    for (int k : reps)
      op.m[static_cast<size_t>(ctx.right_block(G.mul(k, t)))][static_cast<size_t>(col)] +=
          weight;
  }
  if (!(op * op == op)) throw TheoremContradiction("Q_K is not idempotent");
  return op;
}

PiTilde pi_tilde(const PairContext& ctx, const SubgroupRef& K) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  auto comm = subgroups_commute(H, K);
  if (!comm.commute) throw ValidationError("HK is not a group: K does not commute with H");
  SubgroupRef HK(G, set_product(G, H.elements(), K.elements()));
  CosetSpace hk_cosets = coset_space(HK, CosetKind::right);

  RationalMatrix m = mat_zero(hk_cosets.count(), ctx.dim());
  for (int col = 0; col < ctx.dim(); ++col) {
    int t = ctx.right_rep(col);
    m[static_cast<size_t>(hk_cosets.block_of[static_cast<size_t>(t)])]
     [static_cast<size_t>(col)] = Rational(1);
  }

  ModuleOperator qk = Q_operator(ctx, K);
  if (mat_mul(m, qk.m) != m)
    throw TheoremContradiction("pi_tilde o Q_K != pi_tilde");
  if (mat_rank(mat_mul(m, qk.m)) != hk_cosets.count() || mat_rank(qk.m) != hk_cosets.count())
    throw TheoremContradiction("pi_tilde is not injective on range(Q_K)");

  return PiTilde{std::move(HK), std::move(hk_cosets), std::move(m)};
}

}  // namespace hecke
