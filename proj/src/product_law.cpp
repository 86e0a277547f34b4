#include "hecke/product_law.hpp"

#include <algorithm>

namespace hecke {

TripleDecomposition triple_decompose_bruteforce(const PairContext& ctx, int x, int y) {
  const GroupTable& G = ctx.group();
  const auto& dc = ctx.double_cosets();
  const auto& HxH = dc.blocks[static_cast<size_t>(ctx.double_block(x))];

  // HxHyH = (HxH) y H since HxH is already right-H-closed
  std::vector<char> in_set(static_cast<size_t>(G.order()), 0);
  for (int u : HxH)
    for (int k : ctx.subgroup().elements())
      in_set[static_cast<size_t>(G.mul(G.mul(u, y), k))] = 1;

  TripleDecomposition out;
  out.x = x;
  out.y = y;
  std::vector<char> block_seen(static_cast<size_t>(dc.count()), 0);
  for (int g = 0; g < G.order(); ++g) {
    if (!in_set[static_cast<size_t>(g)]) continue;
    int b = ctx.double_block(g);
    if (!block_seen[static_cast<size_t>(b)]) {
      block_seen[static_cast<size_t>(b)] = 1;
      out.double_cosets.push_back(ctx.double_rep(b));
    }
  }
  std::sort(out.double_cosets.begin(), out.double_cosets.end());

  // one middle factor per block: minimal h in H with xhy in the block
  for (int z : out.double_cosets) {
    int target = ctx.double_block(z);
    for (int h : ctx.subgroup().elements())
      if (ctx.double_block(G.mul(G.mul(x, h), y)) == target) {
        out.s_xy.push_back(h);
        break;
      }
  }
  if (out.s_xy.size() != out.double_cosets.size())
    throw TheoremContradiction("a double coset of HxHyH contains no element xhy");
  return out;
}

TripleDecomposition triple_decompose(const PairContext& ctx, int x, int y) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();

  SubgroupRef Hx = conjugate_subgroup(H, x);
  SubgroupRef Hyinv = conjugate_subgroup(H, G.inv(y));
  std::vector<int> prod = set_product(G, Hx.elements(), Hyinv.elements());
  SubgroupRef HxHyinv = [&]() {
    try {
      return SubgroupRef(G, prod);
    } catch (const ValidationError&) {
      throw ValidationError(
          "H^x H^{y^-1} is not a subgroup; triple_decompose requires subnormal H");
    }
  }();
  std::vector<int> inter;
  for (int h : H.elements())
    if (HxHyinv.contains(h)) inter.push_back(h);
  SubgroupRef K(G, std::move(inter));

  TripleDecomposition out;
  out.x = x;
  out.y = y;
  out.s_xy = rep_family(H, K);
  for (int h : out.s_xy) out.double_cosets.push_back(G.mul(G.mul(x, h), y));

  // cross-check: same blocks, each exactly once, as the set-product oracle
  TripleDecomposition oracle = triple_decompose_bruteforce(ctx, x, y);
  std::vector<int> got;
  for (int z : out.double_cosets) got.push_back(ctx.double_rep(ctx.double_block(z)));
  std::sort(got.begin(), got.end());
  if (got != oracle.double_cosets ||
      std::adjacent_find(got.begin(), got.end()) != got.end())
    throw ValidationError(
        "rep-family triple decomposition disagrees with the set-product oracle "
        "(H is not subnormal)");
  return out;
}

ProductFormulaReport product_formula_check(const PairContext& ctx) {
  ProductFormulaReport rep;
  rep.all_pass = true;
  for (int bx = 0; bx < ctx.num_double_cosets(); ++bx)
    for (int by = 0; by < ctx.num_double_cosets(); ++by) {
      int x = ctx.double_rep(bx), y = ctx.double_rep(by);
      TripleDecomposition d = triple_decompose_bruteforce(ctx, x, y);
      HeckeElement avg = HeckeElement::zero(ctx);
      Rational w(1, static_cast<std::int64_t>(d.double_cosets.size()));
      for (int z : d.double_cosets) avg = avg + HeckeElement::sigma(ctx, z) * w;
      HeckeElement prod = convolve(HeckeElement::sigma(ctx, x), HeckeElement::sigma(ctx, y));
      ++rep.pairs_checked;
      if (prod != avg) {
        ++rep.pairs_failed;
        rep.all_pass = false;
        if (!rep.first_failure) rep.first_failure = {x, y};
      }
    }
  return rep;
}

bool triple_decomposition_audit(const PairContext& ctx) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y) {
      SubgroupRef Hx = conjugate_subgroup(H, x);
      SubgroupRef Hyinv = conjugate_subgroup(H, G.inv(y));
      SubgroupRef HxHyinv(G, set_product(G, Hx.elements(), Hyinv.elements()));
      std::vector<int> inter;
      for (int h : H.elements())
        if (HxHyinv.contains(h)) inter.push_back(h);
      SubgroupRef K(G, std::move(inter));
      size_t family = rep_family(H, K).size();
      size_t blocks = triple_decompose_bruteforce(ctx, x, y).double_cosets.size();
      if (family != blocks) return false;
    }
  return true;
}

std::vector<std::vector<RationalVector>> structure_constants(const PairContext& ctx) {
  std::vector<HeckeElement> basis = hecke_basis(ctx);
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<RationalVector>> table(
      static_cast<size_t>(n), std::vector<RationalVector>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HeckeElement p = convolve(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
      // sigma_z has value 1/R(z) on its block, so coefficient = value * R(z)
      RationalVector coeffs(static_cast<size_t>(n));
      for (int b = 0; b < n; ++b)
        coeffs[static_cast<size_t>(b)] =
            p[b] * Rational(ctx.R(ctx.double_rep(b)));
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(coeffs);
    }
  return table;
}

RationalVector FiniteAlgebra::mul(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[static_cast<size_t>(j)].is_zero()) continue;
      Rational f = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      const RationalVector& e = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k)
        if (!e[static_cast<size_t>(k)].is_zero())
          out[static_cast<size_t>(k)] += f * e[static_cast<size_t>(k)];
    }
  }
  return out;
}

RationalVector FiniteAlgebra::star_of(const RationalVector& a) const {
  if (star.empty()) throw ValidationError("algebra has no involution data");
  return mat_apply(star, a);
}

bool FiniteAlgebra::associative_on_basis() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        RationalVector ei(static_cast<size_t>(dim)), ej(static_cast<size_t>(dim)),
            ek(static_cast<size_t>(dim));
        ei[static_cast<size_t>(i)] = Rational(1);
        ej[static_cast<size_t>(j)] = Rational(1);
        ek[static_cast<size_t>(k)] = Rational(1);
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek))) return false;
      }
  return true;
}

UniversalHomResult universal_hom(const PairContext& ctx, const FiniteAlgebra& target,
                                 const std::vector<RationalVector>& tau) {
  const GroupTable& G = ctx.group();
  UniversalHomResult out;
  if (static_cast<int>(tau.size()) != G.order())
    throw ValidationError("tau must be defined on every group element");
  auto sub = is_subnormal(ctx);
  if (!sub.subnormal) throw ValidationError("universal_hom requires a subnormal subgroup");

  if (tau[GroupTable::identity()] != target.unit) {
    out.reason = "tau(1) != 1";
    return out;
  }

  // a doubly invariant tau makes the averaged relation independent of the
  // choice of S_xy; without it the map cannot factor through the basis
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    const RationalVector& ref = tau[static_cast<size_t>(ctx.double_rep(b))];
    for (int g : ctx.double_cosets().blocks[static_cast<size_t>(b)])
      if (tau[static_cast<size_t>(g)] != ref) {
        out.reason = "tau is not constant on double cosets";
        return out;
      }
  }

  for (int bx = 0; bx < ctx.num_double_cosets(); ++bx)
    for (int by = 0; by < ctx.num_double_cosets(); ++by) {
      int x = ctx.double_rep(bx), y = ctx.double_rep(by);
      TripleDecomposition d = triple_decompose(ctx, x, y);
      RationalVector rhs(static_cast<size_t>(target.dim));
      Rational w(1, static_cast<std::int64_t>(d.s_xy.size()));
      for (int h : d.s_xy) {
        const RationalVector& t = tau[static_cast<size_t>(G.mul(G.mul(x, h), y))];
        for (int k = 0; k < target.dim; ++k)
          rhs[static_cast<size_t>(k)] += w * t[static_cast<size_t>(k)];
      }
      if (target.mul(tau[static_cast<size_t>(x)], tau[static_cast<size_t>(y)]) != rhs) {
        out.violation = {x, y};
        out.reason = "averaged product relation fails";
        return out;
      }
    }

  // phi(sigma at rep i) = tau(rep i); verify multiplicativity through the
  // Hecke structure constants
  out.images.reserve(static_cast<size_t>(ctx.num_double_cosets()));
  for (int b = 0; b < ctx.num_double_cosets(); ++b)
    out.images.push_back(tau[static_cast<size_t>(ctx.double_rep(b))]);
  auto consts = structure_constants(ctx);
  for (int i = 0; i < ctx.num_double_cosets(); ++i)
    for (int j = 0; j < ctx.num_double_cosets(); ++j) {
      RationalVector lhs = target.mul(out.images[static_cast<size_t>(i)],
                                      out.images[static_cast<size_t>(j)]);
      RationalVector rhs(static_cast<size_t>(target.dim));
      const RationalVector& c = consts[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < ctx.num_double_cosets(); ++k) {
        if (c[static_cast<size_t>(k)].is_zero()) continue;
        for (int m = 0; m < target.dim; ++m)
          rhs[static_cast<size_t>(m)] +=
              c[static_cast<size_t>(k)] * out.images[static_cast<size_t>(k)][static_cast<size_t>(m)];
      }
      if (lhs != rhs)
        throw TheoremContradiction("relations hold but induced map is not multiplicative");
    }

  out.ok = true;
  if (!target.star.empty()) {
    out.star_map = true;
    for (int x = 0; x < G.order() && out.star_map; ++x)
      if (tau[static_cast<size_t>(G.inv(x))] != target.star_of(tau[static_cast<size_t>(x)]))
        out.star_map = false;
  }
  return out;
}

PresentationReport presentation_check(const PairContext& ctx) {
  auto sub = is_subnormal(ctx);
  if (!sub.subnormal) throw ValidationError("presentation_check requires a subnormal subgroup");

  PresentationReport rep;
  rep.unit_relation =
      (HeckeElement::sigma(ctx, GroupTable::identity()) == HeckeElement::unit(ctx));

  ProductFormulaReport pf = product_formula_check(ctx);
  rep.product_relations = pf.all_pass;

  RationalMatrix rows;
  for (const auto& f : hecke_basis(ctx)) rows.push_back(f.coeffs());
  rep.basis_free = (mat_rank(rows) == ctx.num_double_cosets());

  // structure constants predicted by the relations: sigma_x sigma_y =
  // (1/n) sum_i sigma_{z_i}; coefficient of basis element z is
  // (multiplicity of z's block) / n -- the partition is disjoint so it is 1/n
  auto consts = structure_constants(ctx);
  rep.relations_reproduce_table = true;
  for (int i = 0; i < ctx.num_double_cosets() && rep.relations_reproduce_table; ++i)
    for (int j = 0; j < ctx.num_double_cosets(); ++j) {
      int x = ctx.double_rep(i), y = ctx.double_rep(j);
      TripleDecomposition d = triple_decompose(ctx, x, y);
      RationalVector predicted(static_cast<size_t>(ctx.num_double_cosets()));
      Rational w(1, static_cast<std::int64_t>(d.double_cosets.size()));
      for (int z : d.double_cosets)
        predicted[static_cast<size_t>(ctx.double_block(z))] += w;
      if (consts[static_cast<size_t>(i)][static_cast<size_t>(j)] != predicted) {
        rep.relations_reproduce_table = false;
        break;
      }
    }

  // tau = sigma itself: the induced endomorphism must be the identity.
  // Coordinates are over the sigma basis, where the unit is sigma at the
  // identity's block.
  FiniteAlgebra self;
  self.dim = ctx.num_double_cosets();
  self.unit = RationalVector(static_cast<size_t>(self.dim));
  self.unit[static_cast<size_t>(ctx.double_block(GroupTable::identity()))] = Rational(1);
  self.table = structure_constants(ctx);
  std::vector<RationalVector> tau;
  for (int x = 0; x < ctx.group().order(); ++x) {
    RationalVector v(static_cast<size_t>(self.dim));
    v[static_cast<size_t>(ctx.double_block(x))] = Rational(1);
    tau.push_back(std::move(v));
  }
  auto uh = universal_hom(ctx, self, tau);
  rep.universal_roundtrip = uh.ok;
  if (uh.ok)
    for (int b = 0; b < self.dim && rep.universal_roundtrip; ++b) {
      RationalVector expect(static_cast<size_t>(self.dim));
      expect[static_cast<size_t>(b)] = Rational(1);
      if (uh.images[static_cast<size_t>(b)] != expect) rep.universal_roundtrip = false;
    }

  rep.all_ok = rep.unit_relation && rep.product_relations && rep.basis_free &&
               rep.relations_reproduce_table && rep.universal_roundtrip;
  return rep;
}

}  // namespace hecke
