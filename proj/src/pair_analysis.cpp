#include "hecke/pair_analysis.hpp"

namespace hecke {

HeckeData hecke_data(const PairContext& ctx) {
  HeckeData d;
  d.dc_reps = ctx.double_cosets().reps;
  d.R = ctx.R_by_block();
  d.delta = ctx.delta_by_block();
  return d;
}

namespace {

bool commutes_at(const PairContext& ctx, int x, std::optional<std::pair<int, int>>* pair_out) {
  SubgroupRef Hx = conjugate_subgroup(ctx.subgroup(), x);
  auto res = subgroups_commute(Hx, ctx.subgroup());
  if (!res.commute && pair_out) *pair_out = res.witness;
  return res.commute;
}

}  // namespace

ProtonormalResult is_protonormal(const PairContext& ctx) {
  ProtonormalResult out;
  // Reps suffice: H^{hxk} = k^{-1} H^x k and conjugating the set equation
  // H^x H = H H^x by k in H preserves it (H^k = H).
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    int x = ctx.double_rep(b);
    std::optional<std::pair<int, int>> pair;
    if (!commutes_at(ctx, x, &pair)) {
      // report the minimal element of G violating commutation, not just the rep
      for (int g = 0; g < ctx.group().order(); ++g) {
        std::optional<std::pair<int, int>> gp;
        if (!commutes_at(ctx, g, &gp)) {
          out.failure_x = g;
          out.failure_pair = gp;
          break;
        }
      }
      out.protonormal = false;
      return out;
    }
  }
  out.protonormal = true;
  return out;
}

bool protonormal_reduction_sound(const PairContext& ctx) {
  bool over_reps = is_protonormal(ctx).protonormal;
  bool over_all = true;
  for (int g = 0; g < ctx.group().order() && over_all; ++g)
    over_all = commutes_at(ctx, g, nullptr);
  return over_reps == over_all;
}

SubnormalResult is_subnormal(const PairContext& ctx) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  SubgroupRef N = normal_closure(H);

  bool normal_in_N = true;
  for (int n : N.elements()) {
    if (!H.normalized_by(n)) {
      normal_in_N = false;
      break;
    }
  }

  SubnormalResult out{normal_in_N, std::move(N), std::nullopt};
  if (!normal_in_N) {
    // minimal (x, h, k) violating the closure-under-twisted-conjugation form
    for (int x = 0; x < G.order() && !out.failure_triple; ++x)
      for (int h : H.elements()) {
        int y = G.mul(G.mul(x, h), G.inv(x));  // x h x^{-1}
        for (int k : H.elements())
          if (!H.contains(G.mul(G.mul(y, k), G.inv(y)))) {
            out.failure_triple = {x, h, k};
            break;
          }
        if (out.failure_triple) break;
      }
    if (!out.failure_triple)
      throw TheoremContradiction("H not normal in its closure but no violating triple");
  }
  return out;
}

bool subnormal_consequences_hold(const PairContext& ctx) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  for (int x = 0; x < G.order(); ++x) {
    SubgroupRef Hx = conjugate_subgroup(H, x);
    std::vector<int> inter;
    for (int h : H.elements())
      if (Hx.contains(h)) inter.push_back(h);
    SubgroupRef HcapHx(G, std::move(inter));
    // H cap H^x normal in H
    for (int h : H.elements())
      for (int m : HcapHx.elements())
        if (!HcapHx.contains(G.conjugate(m, h))) return false;
    // H normal in the group H H^x
    SubgroupRef HHx(G, set_product(G, H.elements(), Hx.elements()));
    for (int g : HHx.elements())
      if (!H.normalized_by(g)) return false;
  }
  return true;
}

PairReport analyze_pair(const PairContext& ctx) {
  ProtonormalResult proto = is_protonormal(ctx);
  SubnormalResult subnorm = is_subnormal(ctx);
  PairReport rep{/*is_hecke=*/true,
                 hecke_data(ctx),
                 ctx.subgroup().is_normal_in_parent(),
                 proto.protonormal,
                 subnorm.subnormal,
                 std::move(proto),
                 std::move(subnorm)};
  if (rep.is_normal && !rep.is_subnormal)
    throw TheoremContradiction("normal subgroup reported non-subnormal");
  if (rep.is_subnormal && !rep.is_protonormal)
    throw TheoremContradiction("subnormal subgroup reported non-protonormal");
  return rep;
}

}  // namespace hecke
