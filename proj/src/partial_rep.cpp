#include "hecke/partial_rep.hpp"

namespace hecke {

ElementFamily sigma_family(const PairContext& ctx) {
  ElementFamily u;
  u.reserve(static_cast<size_t>(ctx.group().order()));
  for (int x = 0; x < ctx.group().order(); ++x) u.push_back(HeckeElement::sigma(ctx, x));
  return u;
}

ElementFamily indicator_family(const PairContext& ctx, const SubgroupRef& K) {
  if (&K.parent() != &ctx.group()) throw ValidationError("subgroup from a different group");
  ElementFamily u;
  HeckeElement one = HeckeElement::unit(ctx);
  HeckeElement nil = HeckeElement::zero(ctx);
  for (int x = 0; x < ctx.group().order(); ++x) u.push_back(K.contains(x) ? one : nil);
  return u;
}

namespace {

bool family_bi_invariant(const PairContext& ctx, const ElementFamily& u) {
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    const HeckeElement& ref = u[static_cast<size_t>(ctx.double_rep(b))];
    for (int g : ctx.double_cosets().blocks[static_cast<size_t>(b)])
      if (u[static_cast<size_t>(g)] != ref) return false;
  }
  return true;
}

// left: u(x^{-1}) u(x) u(y) == u(x^{-1}) u(xy)
// right: u(x) u(y) u(y^{-1}) == u(xy) u(y^{-1})
bool axiom_holds_at(const PairContext& ctx, const ElementFamily& u, int x, int y, bool left) {
  const GroupTable& G = ctx.group();
  int xy = G.mul(x, y);
  if (left) {
    const HeckeElement& uxinv = u[static_cast<size_t>(G.inv(x))];
    HeckeElement lhs = convolve(convolve(uxinv, u[static_cast<size_t>(x)]),
                                u[static_cast<size_t>(y)]);
    HeckeElement rhs = convolve(uxinv, u[static_cast<size_t>(xy)]);
    return lhs == rhs;
  }
  const HeckeElement& uyinv = u[static_cast<size_t>(G.inv(y))];
  HeckeElement lhs = convolve(convolve(u[static_cast<size_t>(x)], u[static_cast<size_t>(y)]),
                              uyinv);
  HeckeElement rhs = convolve(u[static_cast<size_t>(xy)], uyinv);
  return lhs == rhs;
}

AxiomCheck sweep_axiom(const PairContext& ctx, const ElementFamily& u, bool left,
                       bool bi_invariant, bool audit_full) {
  const GroupTable& G = ctx.group();
  AxiomCheck out;
  bool failed = false;
  if (bi_invariant && !audit_full) {
    // For bi-invariant u, (x, y) -> (h x0 k, h' y0 k') reduces the quantifier
    // to double-coset reps x0, y0 and the middle factor m = k h' in H: both
    // sides only depend on x0, y0 and the double coset of x0 m y0.
    for (int bx = 0; bx < ctx.num_double_cosets() && !failed; ++bx) {
      int x0 = ctx.double_rep(bx);
      for (int by = 0; by < ctx.num_double_cosets() && !failed; ++by) {
        int y0 = ctx.double_rep(by);
        for (int m : ctx.subgroup().elements())
          if (!axiom_holds_at(ctx, u, x0, G.mul(m, y0), left)) {
            failed = true;
            break;
          }
      }
    }
  } else {
    for (int x = 0; x < G.order() && !failed; ++x)
      for (int y = 0; y < G.order(); ++y)
        if (!axiom_holds_at(ctx, u, x, y, left)) {
          failed = true;
          break;
        }
  }
  if (failed) {
    out.passed = false;
    // report the minimal failing pair over all of G x G
    for (int x = 0; x < G.order() && !out.witness; ++x)
      for (int y = 0; y < G.order(); ++y)
        if (!axiom_holds_at(ctx, u, x, y, left)) {
          out.witness = {x, y};
          break;
        }
    if (!out.witness)
      throw TheoremContradiction("reduced partial-rep sweep failed but full sweep passes");
  }
  return out;
}

}  // namespace

PartialRepCheck check_partial_rep(const PairContext& ctx, const ElementFamily& u,
                                  bool audit_full) {
  if (static_cast<int>(u.size()) != ctx.group().order())
    throw ValidationError("family must be defined on every group element");
  PartialRepCheck out;
  out.unit_ok = (u[GroupTable::identity()] == HeckeElement::unit(ctx));
  out.bi_invariant = family_bi_invariant(ctx, u);
  out.left_absorption = sweep_axiom(ctx, u, /*left=*/true, out.bi_invariant, audit_full);
  out.right_absorption = sweep_axiom(ctx, u, /*left=*/false, out.bi_invariant, audit_full);
  out.is_partial_rep =
      out.unit_ok && out.left_absorption.passed && out.right_absorption.passed;
  return out;
}

CommutationCheck check_commutation(const PairContext& ctx, const ElementFamily& u,
                                   bool audit_full) {
  const GroupTable& G = ctx.group();
  auto e = [&](int g) {
    return convolve(u[static_cast<size_t>(g)], u[static_cast<size_t>(G.inv(g))]);
  };
  auto holds_at = [&](int x, int y) {
    return convolve(u[static_cast<size_t>(x)], e(y)) ==
           convolve(e(G.mul(x, y)), u[static_cast<size_t>(x)]);
  };
  CommutationCheck out;
  bool failed = false;
  if (family_bi_invariant(ctx, u) && !audit_full) {
    for (int bx = 0; bx < ctx.num_double_cosets() && !failed; ++bx)
      for (int by = 0; by < ctx.num_double_cosets() && !failed; ++by)
        for (int m : ctx.subgroup().elements())
          if (!holds_at(ctx.double_rep(bx), G.mul(m, ctx.double_rep(by)))) {
            failed = true;
            break;
          }
  } else {
    for (int x = 0; x < G.order() && !failed; ++x)
      for (int y = 0; y < G.order(); ++y)
        if (!holds_at(x, y)) {
          failed = true;
          break;
        }
  }
  if (failed) {
    out.passed = false;
    for (int x = 0; x < G.order() && !out.witness; ++x)
      for (int y = 0; y < G.order(); ++y)
        if (!holds_at(x, y)) {
          out.witness = {x, y};
          break;
        }
  }
  return out;
}

EquivalenceReport equivalence_suite(const PairContext& ctx, bool audit_full) {
  EquivalenceReport rep;
  rep.proto = is_protonormal(ctx);
  rep.protonormal = rep.proto.protonormal;

  ElementFamily u = sigma_family(ctx);
  rep.rep_check = check_partial_rep(ctx, u, audit_full);
  rep.sigma_partial_rep = rep.rep_check.is_partial_rep;

  rep.weak_identity = true;
  const GroupTable& G = ctx.group();
  // sigma_{hxk} etc. depend only on double cosets; reps cover every x
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    int x = ctx.double_rep(b);
    const HeckeElement& sx = u[static_cast<size_t>(x)];
    if (convolve(convolve(sx, u[static_cast<size_t>(G.inv(x))]), sx) != sx) {
      rep.weak_identity = false;
      for (int g = 0; g < G.order(); ++g) {
        const HeckeElement& sg = u[static_cast<size_t>(g)];
        if (convolve(convolve(sg, u[static_cast<size_t>(G.inv(g))]), sg) != sg) {
          rep.weak_identity_failure_x = g;
          break;
        }
      }
      break;
    }
  }

  rep.all_agree = (rep.protonormal == rep.sigma_partial_rep) &&
                  (rep.protonormal == rep.weak_identity);
  return rep;
}

std::vector<int> kernel_of(const PairContext& ctx, const ElementFamily& u) {
  HeckeElement one = HeckeElement::unit(ctx);
  std::vector<int> ker;
  for (int x = 0; x < ctx.group().order(); ++x)
    if (u[static_cast<size_t>(x)] == one) ker.push_back(x);
  return ker;
}

FurtherPropertiesReport further_properties(const PairContext& ctx) {
  auto sub = is_subnormal(ctx);
  if (!sub.subnormal) throw ValidationError("further_properties requires a subnormal subgroup");

  const GroupTable& G = ctx.group();
  ElementFamily u = sigma_family(ctx);
  HeckeElement one = HeckeElement::unit(ctx);

  FurtherPropertiesReport rep;
  rep.partial_rep = check_partial_rep(ctx, u).is_partial_rep;

  auto left_cosets_nested = [&](int x) {  // xH subset of Hx
    for (int h : ctx.subgroup().elements())
      if (ctx.right_block(G.mul(x, h)) != ctx.right_block(x)) return false;
    return true;
  };

  rep.left_global_ok = rep.right_global_ok = rep.normalizer_invertible = true;
  for (int x = 0; x < G.order(); ++x) {
    int xi = G.inv(x);
    const HeckeElement& sx = u[static_cast<size_t>(x)];
    const HeckeElement& sxi = u[static_cast<size_t>(xi)];
    if (left_cosets_nested(x)) {
      if (convolve(sx, sxi) != one) rep.left_global_ok = false;
      for (int y = 0; y < G.order() && rep.left_global_ok; ++y)
        if (convolve(sx, u[static_cast<size_t>(y)]) !=
            u[static_cast<size_t>(G.mul(x, y))])
          rep.left_global_ok = false;
    }
    if (left_cosets_nested(xi)) {  // Hx subset of xH  <=>  x^{-1} H subset of H x^{-1}
      if (convolve(sxi, sx) != one) rep.right_global_ok = false;
      for (int y = 0; y < G.order() && rep.right_global_ok; ++y)
        if (convolve(u[static_cast<size_t>(y)], sx) !=
            u[static_cast<size_t>(G.mul(y, x))])
          rep.right_global_ok = false;
    }
    if (ctx.subgroup().normalized_by(x)) {
      if (convolve(sx, sxi) != one || convolve(sxi, sx) != one)
        rep.normalizer_invertible = false;
    }
  }

  rep.bi_invariance_ok = true;
  for (int b = 0; b < ctx.num_double_cosets() && rep.bi_invariance_ok; ++b) {
    int x = ctx.double_rep(b);
    ModuleOperator sx = sigma_op(ctx, x);
    for (int h : ctx.subgroup().elements()) {
      for (int k : ctx.subgroup().elements())
        if (!(sigma_op(ctx, G.mul(G.mul(h, x), k)) == sx)) {
          rep.bi_invariance_ok = false;
          break;
        }
      if (!rep.bi_invariance_ok) break;
    }
  }

  rep.all_ok = rep.partial_rep && rep.left_global_ok && rep.right_global_ok &&
               rep.normalizer_invertible && rep.bi_invariance_ok;
  return rep;
}

}  // namespace hecke
