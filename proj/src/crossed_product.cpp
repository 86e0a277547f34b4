#include "hecke/crossed_product.hpp"

#include <algorithm>

namespace hecke {

Quotient make_quotient(const GroupTable& ambient, const SubgroupRef& big,
                       const SubgroupRef& small) {
  if (!small.is_subset_of(big)) throw ValidationError("quotient: small is not inside big");
  for (int b : big.elements())
    if (!small.normalized_by(b))
      throw ValidationError("quotient: small is not normal in big");

  std::vector<int> class_of(static_cast<size_t>(ambient.order()), -1);
  std::vector<int> reps;
  for (int g : big.elements()) {
    if (class_of[static_cast<size_t>(g)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(g);  // ascending scan makes g the minimal rep
    for (int s : small.elements())
      class_of[static_cast<size_t>(ambient.mul(s, g))] = idx;
  }
  const int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          class_of[static_cast<size_t>(ambient.mul(reps[static_cast<size_t>(i)],
                                                   reps[static_cast<size_t>(j)]))];
  return Quotient{GroupTable::from_table(std::move(mul)), std::move(reps),
                  std::move(class_of)};
}

RationalVector TwistedActionData::fnh_unit() const {
  RationalVector v = fnh_zero();
  v[0] = Rational(1);  // the coset H itself is class 0 (contains the identity)
  return v;
}

RationalVector TwistedActionData::fnh_delta(int n) const {
  int c = nh.class_of[static_cast<size_t>(n)];
  if (c < 0) throw ValidationError("element outside N has no F(N/H) basis vector");
  RationalVector v = fnh_zero();
  v[static_cast<size_t>(c)] = Rational(1);
  return v;
}

RationalVector TwistedActionData::fnh_mul(const RationalVector& a,
                                          const RationalVector& b) const {
  RationalVector out = fnh_zero();
  const int k = fnh_dim();
  for (int i = 0; i < k; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < k; ++j) {
      if (b[static_cast<size_t>(j)].is_zero()) continue;
      out[static_cast<size_t>(nh.table.mul(i, j))] +=
          a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
  }
  return out;
}

RationalVector TwistedActionData::fnh_star(const RationalVector& a) const {
  RationalVector out = fnh_zero();
  for (int i = 0; i < fnh_dim(); ++i)
    out[static_cast<size_t>(nh.table.inv(i))] = a[static_cast<size_t>(i)];
  return out;
}

HeckeElement TwistedActionData::to_hecke(const RationalVector& a) const {
  HeckeElement f = HeckeElement::zero(*ctx);
  for (int i = 0; i < fnh_dim(); ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    int n = nh.reps[static_cast<size_t>(i)];
    // sigma_n is the plain indicator of HnH = Hn (R(n) = 1 for n in N)
    f[ctx->double_block(n)] += a[static_cast<size_t>(i)];
  }
  return f;
}

RationalVector TwistedActionData::from_hecke(const HeckeElement& f) const {
  RationalVector v = fnh_zero();
  for (int i = 0; i < fnh_dim(); ++i)
    v[static_cast<size_t>(i)] = f.at(nh.reps[static_cast<size_t>(i)]);
  if (!(to_hecke(v) == f))
    throw ValidationError("Hecke element is not supported in F(N/H)");
  return v;
}

RationalVector TwistedActionData::w(int r, int s) const {
  return fnh_delta(cocycle_n[static_cast<size_t>(r)][static_cast<size_t>(s)]);
}

RationalVector TwistedActionData::w_inv(int r, int s) const {
  return fnh_delta(ctx->group().inv(cocycle_n[static_cast<size_t>(r)][static_cast<size_t>(s)]));
}

bool TwistedActionData::in_ideal(int t, const RationalVector& v) const {
  return fnh_mul(e[static_cast<size_t>(t)], v) == v;
}

namespace {

HeckeElement sigma_of(const PairContext& ctx, int x) { return HeckeElement::sigma(ctx, x); }

}  // namespace

TwistedActionData build_action(const PairContext& ctx, SubgroupRef N,
                               std::optional<std::vector<int>> custom_section) {
  const GroupTable& G = ctx.group();
  const SubgroupRef& H = ctx.subgroup();
  if (&N.parent() != &G) throw ValidationError("N belongs to a different group");
  if (!H.is_subset_of(N)) throw ValidationError("H is not contained in N");
  if (!N.is_normal_in_parent()) throw ValidationError("N is not normal in G");
  for (int n : N.elements())
    if (!H.normalized_by(n)) throw ValidationError("H is not normal in N");

  std::vector<int> everyone(static_cast<size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) everyone[static_cast<size_t>(g)] = g;
  SubgroupRef whole(G, std::move(everyone));
  Quotient nh = make_quotient(G, N, H);
  Quotient gn = make_quotient(G, whole, N);
  const int q = gn.table.order();

  std::vector<int> section;
  if (custom_section) {
    if (static_cast<int>(custom_section->size()) != q)
      throw ValidationError("section must pick one element per N-coset");
    for (int t = 0; t < q; ++t)
      if (gn.class_of[static_cast<size_t>((*custom_section)[static_cast<size_t>(t)])] != t)
        throw ValidationError("section value lies in the wrong N-coset");
    if ((*custom_section)[0] != GroupTable::identity())
      throw ValidationError("section must send the trivial coset to the identity");
    section = *custom_section;
  } else {
    section = gn.reps;  // minimal reps; reps[0] = identity
  }

  TwistedActionData data(ctx, std::move(N), std::move(nh), std::move(gn),
                         std::move(section));
  const int k = data.fnh_dim();

  // iota injectivity: the k Hecke images must be linearly independent
  RationalMatrix iota_rows;
  for (int i = 0; i < k; ++i)
    iota_rows.push_back(data.to_hecke(data.fnh_delta(data.nh.reps[static_cast<size_t>(i)])).coeffs());
  if (mat_rank(iota_rows) != k)
    throw TheoremContradiction("iota is not injective on F(N/H)");

  // group-algebra product agrees with convolution through iota
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      RationalVector di = data.fnh_zero(), dj = data.fnh_zero();
      di[static_cast<size_t>(i)] = Rational(1);
      dj[static_cast<size_t>(j)] = Rational(1);
      if (!(data.to_hecke(data.fnh_mul(di, dj)) ==
            convolve(data.to_hecke(di), data.to_hecke(dj))))
        throw TheoremContradiction("F(N/H) product disagrees with convolution");
    }

  // Lemma: sigma_x sigma_y is supported in N whenever xy is in N
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y) {
      if (data.gn.class_of[static_cast<size_t>(G.mul(x, y))] != 0) continue;
      HeckeElement p = convolve(sigma_of(ctx, x), sigma_of(ctx, y));
      (void)data.from_hecke(p);  // throws if support leaves N
    }

  // e_t = sigma_{xi(t)} sigma_{xi(t)^{-1}}: central idempotents of F(N/H)
  data.e.resize(static_cast<size_t>(q));
  for (int t = 0; t < q; ++t) {
    int x = data.section[static_cast<size_t>(t)];
    data.e[static_cast<size_t>(t)] =
        data.from_hecke(convolve(sigma_of(ctx, x), sigma_of(ctx, G.inv(x))));
    const RationalVector& et = data.e[static_cast<size_t>(t)];
    if (!(data.fnh_mul(et, et) == et))
      throw TheoremContradiction("e_t is not idempotent");
    for (int i = 0; i < k; ++i) {
      RationalVector di = data.fnh_zero();
      di[static_cast<size_t>(i)] = Rational(1);
      if (!(data.fnh_mul(et, di) == data.fnh_mul(di, et)))
        throw TheoremContradiction("e_t is not central in F(N/H)");
    }
  }
  // e_x depends only on the coset Nx
  for (int x = 0; x < G.order(); ++x) {
    RationalVector ex = data.from_hecke(convolve(sigma_of(ctx, x), sigma_of(ctx, G.inv(x))));
    if (!(ex == data.e[static_cast<size_t>(data.gn.class_of[static_cast<size_t>(x)])]))
      throw TheoremContradiction("e_x differs from e_{xi(Nx)}");
  }

  // ideals D_t = e_t F(N/H), bases by deterministic column sweep
  data.ideal_basis.resize(static_cast<size_t>(q));
  for (int t = 0; t < q; ++t) {
    SpanBasis span(k);
    for (int i = 0; i < k; ++i) {
      RationalVector di = data.fnh_zero();
      di[static_cast<size_t>(i)] = Rational(1);
      span.add(data.fnh_mul(data.e[static_cast<size_t>(t)], di));
    }
    data.ideal_basis[static_cast<size_t>(t)] = span.rows();
  }

  // psi matrices and the inverse pairing of the partial isomorphisms
  data.psi.resize(static_cast<size_t>(q));
  data.psi_inv.resize(static_cast<size_t>(q));
  for (int t = 0; t < q; ++t) {
    int x = data.section[static_cast<size_t>(t)];
    auto conj_matrix = [&](int g) {
      RationalMatrix m = mat_zero(k, k);
      for (int j = 0; j < k; ++j) {
        HeckeElement image = convolve(
            convolve(sigma_of(ctx, g), sigma_of(ctx, data.nh.reps[static_cast<size_t>(j)])),
            sigma_of(ctx, G.inv(g)));
        RationalVector col = data.from_hecke(image);
        for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
      }
      return m;
    };
    data.psi[static_cast<size_t>(t)] = conj_matrix(x);
    data.psi_inv[static_cast<size_t>(t)] = conj_matrix(G.inv(x));
  }
  for (int t = 0; t < q; ++t) {
    int tinv = data.gn.table.inv(t);
    // psi_t carries F(N/H) onto D_t, and is inverted by psi_{x^{-1}} on D_{t^{-1}}
    SpanBasis image(k);
    for (int j = 0; j < k; ++j) {
      RationalVector dj = data.fnh_zero();
      dj[static_cast<size_t>(j)] = Rational(1);
      RationalVector img = mat_apply(data.psi[static_cast<size_t>(t)], dj);
      if (!data.in_ideal(t, img))
        throw TheoremContradiction("psi_t image leaves D_t");
      image.add(img);
    }
    if (image.rank() != static_cast<int>(data.ideal_basis[static_cast<size_t>(t)].size()))
      throw TheoremContradiction("psi_t is not onto D_t");
    for (const RationalVector& v : data.ideal_basis[static_cast<size_t>(tinv)])
      if (!(mat_apply(data.psi_inv[static_cast<size_t>(t)],
                      mat_apply(data.psi[static_cast<size_t>(t)], v)) == v))
        throw TheoremContradiction("psi_{x^{-1}} psi_x != id on D_{t^{-1}}");
    for (const RationalVector& v : data.ideal_basis[static_cast<size_t>(t)])
      if (!(mat_apply(data.psi[static_cast<size_t>(t)],
                      mat_apply(data.psi_inv[static_cast<size_t>(t)], v)) == v))
        throw TheoremContradiction("psi_x psi_{x^{-1}} != id on D_t");
  }

  // cocycle elements n_{r,s} = xi(r) xi(s) xi(rs)^{-1}, always in N
  data.cocycle_n.assign(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s) {
      int z = data.section[static_cast<size_t>(data.gn.table.mul(r, s))];
      int n = G.mul(G.mul(data.section[static_cast<size_t>(r)], data.section[static_cast<size_t>(s)]),
                    G.inv(z));
      if (data.gn.class_of[static_cast<size_t>(n)] != 0)
        throw TheoremContradiction("cocycle element fell outside N");
      data.cocycle_n[static_cast<size_t>(r)][static_cast<size_t>(s)] = n;
    }

  // the two cocycle product identities, in H(G,H)
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s) {
      int x = data.section[static_cast<size_t>(r)];
      int y = data.section[static_cast<size_t>(s)];
      int z = data.section[static_cast<size_t>(data.gn.table.mul(r, s))];
      HeckeElement eyinv = convolve(sigma_of(ctx, G.inv(y)), sigma_of(ctx, y));
      HeckeElement lhs1 = convolve(convolve(sigma_of(ctx, x), sigma_of(ctx, y)), eyinv);
      HeckeElement rhs1 = convolve(convolve(data.to_hecke(data.w(r, s)), sigma_of(ctx, z)), eyinv);
      if (!(lhs1 == rhs1))
        throw TheoremContradiction("cocycle identity (i) fails");
      HeckeElement lhs2 = convolve(convolve(eyinv, sigma_of(ctx, G.inv(y))), sigma_of(ctx, G.inv(x)));
      HeckeElement rhs2 = convolve(convolve(eyinv, sigma_of(ctx, G.inv(z))),
                                   data.to_hecke(data.w_inv(r, s)));
      if (!(lhs2 == rhs2))
        throw TheoremContradiction("cocycle identity (ii) fails");
    }

  return data;
}

HeckeElement embed_iota(const TwistedActionData& data, int n) {
  if (n < 0 || n >= data.ctx->group().order() ||
      data.gn.class_of[static_cast<size_t>(n)] != 0)
    throw ValidationError("iota argument is not an element of N");
  return data.to_hecke(data.fnh_delta(n));
}

namespace {

// basis of D_a cap D_b = (e_a e_b) F(N/H); central idempotents multiply to
// another central idempotent generating the intersection
std::vector<RationalVector> intersection_basis(const TwistedActionData& d,
                                               const std::vector<int>& parts) {
  RationalVector idem = d.fnh_unit();
  for (int t : parts) idem = d.fnh_mul(idem, d.e[static_cast<size_t>(t)]);
  SpanBasis span(d.fnh_dim());
  for (int i = 0; i < d.fnh_dim(); ++i) {
    RationalVector di = d.fnh_zero();
    di[static_cast<size_t>(i)] = Rational(1);
    span.add(d.fnh_mul(idem, di));
  }
  return span.rows();
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v, int width) {
  SpanBasis span(width);
  for (const auto& b : basis) span.add(b);
  return span.contains(v);
}

}  // namespace

TpaReport check_tpa_axioms(const TwistedActionData& d) {
  TpaReport rep;
  const int q = d.quotient_order();
  const int k = d.fnh_dim();

  // (i) D_1 = A and theta_1 = id
  if (static_cast<int>(d.ideal_basis[0].size()) != k || !(d.psi[0] == mat_identity(k))) {
    rep.full_unit_ideal.passed = false;
    rep.full_unit_ideal.witness = {0, -1, -1};
  }

  // (ii) theta_r(D_{r^-1} cap D_s) = D_r cap D_{rs}
  for (int r = 0; r < q && rep.domain_match.passed; ++r) {
    int rinv = d.gn.table.inv(r);
    for (int s = 0; s < q; ++s) {
      int rs = d.gn.table.mul(r, s);
      auto source = intersection_basis(d, {rinv, s});
      auto target = intersection_basis(d, {r, rs});
      SpanBasis image(k);
      bool ok = true;
      for (const auto& v : source) {
        RationalVector img = mat_apply(d.psi[static_cast<size_t>(r)], v);
        if (!in_span(target, img, k)) {
          ok = false;
          break;
        }
        image.add(img);
      }
      if (ok && image.rank() != static_cast<int>(target.size())) ok = false;
      if (!ok) {
        rep.domain_match.passed = false;
        rep.domain_match.witness = {r, s, -1};
        break;
      }
    }
  }

  // (iii) theta_r(theta_s(a)) = w_{r,s} theta_{rs}(a) w_{r,s}^{-1}
  for (int r = 0; r < q && rep.composition.passed; ++r)
    for (int s = 0; s < q; ++s) {
      int sinv = d.gn.table.inv(s);
      int rs = d.gn.table.mul(r, s);
      int rsinv = d.gn.table.inv(rs);
      auto domain = intersection_basis(d, {sinv, rsinv});
      for (const auto& a : domain) {
        RationalVector lhs = mat_apply(d.psi[static_cast<size_t>(r)],
                                       mat_apply(d.psi[static_cast<size_t>(s)], a));
        RationalVector rhs = d.fnh_mul(
            d.fnh_mul(d.w(r, s), mat_apply(d.psi[static_cast<size_t>(rs)], a)), d.w_inv(r, s));
        if (!(lhs == rhs)) {
          rep.composition.passed = false;
          rep.composition.witness = {r, s, -1};
          break;
        }
      }
      if (!rep.composition.passed) break;
    }

  // (iv) w_{1,t} = w_{t,1} = 1
  for (int t = 0; t < q && rep.unit_cocycle.passed; ++t)
    if (d.cocycle_n[0][static_cast<size_t>(t)] != GroupTable::identity() ||
        d.cocycle_n[static_cast<size_t>(t)][0] != GroupTable::identity()) {
      rep.unit_cocycle.passed = false;
      rep.unit_cocycle.witness = {t, -1, -1};
    }

  // (v) theta_r(a w_{s,t}) w_{r,st} = theta_r(a) w_{r,s} w_{rs,t}
  for (int r = 0; r < q && rep.cocycle_identity.passed; ++r) {
    int rinv = d.gn.table.inv(r);
    for (int s = 0; s < q && rep.cocycle_identity.passed; ++s)
      for (int t = 0; t < q; ++t) {
        int st = d.gn.table.mul(s, t);
        int rs = d.gn.table.mul(r, s);
        auto domain = intersection_basis(d, {rinv, s, st});
        bool ok = true;
        for (const auto& a : domain) {
          RationalVector lhs = d.fnh_mul(
              mat_apply(d.psi[static_cast<size_t>(r)], d.fnh_mul(a, d.w(s, t))), d.w(r, st));
          RationalVector rhs = d.fnh_mul(
              d.fnh_mul(mat_apply(d.psi[static_cast<size_t>(r)], a), d.w(r, s)), d.w(rs, t));
          if (!(lhs == rhs)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          rep.cocycle_identity.passed = false;
          rep.cocycle_identity.witness = {r, s, t};
          break;
        }
      }
  }

  // (vi) star(D_t) = D_t
  for (int t = 0; t < q && rep.star_ideals.passed; ++t)
    for (const auto& v : d.ideal_basis[static_cast<size_t>(t)])
      if (!in_span(d.ideal_basis[static_cast<size_t>(t)], d.fnh_star(v), k)) {
        rep.star_ideals.passed = false;
        rep.star_ideals.witness = {t, -1, -1};
        break;
      }

  // (vii) theta_t(a^*) = theta_t(a)^*
  for (int t = 0; t < q && rep.star_theta.passed; ++t) {
    int tinv = d.gn.table.inv(t);
    for (const auto& a : d.ideal_basis[static_cast<size_t>(tinv)])
      if (!(mat_apply(d.psi[static_cast<size_t>(t)], d.fnh_star(a)) ==
            d.fnh_star(mat_apply(d.psi[static_cast<size_t>(t)], a)))) {
        rep.star_theta.passed = false;
        rep.star_theta.witness = {t, -1, -1};
        break;
      }
  }

  // (viii) corner inverse of w equals its star
  for (int r = 0; r < q && rep.star_cocycle.passed; ++r)
    for (int s = 0; s < q; ++s) {
      int rs = d.gn.table.mul(r, s);
      RationalVector corner = d.fnh_mul(d.e[static_cast<size_t>(r)], d.e[static_cast<size_t>(rs)]);
      RationalVector w_corner = d.fnh_mul(corner, d.w(r, s));
      RationalVector winv_corner = d.fnh_mul(corner, d.w_inv(r, s));
      if (!(d.fnh_star(w_corner) == winv_corner) ||
          !(d.fnh_mul(w_corner, winv_corner) == corner) ||
          !(d.fnh_mul(winv_corner, w_corner) == corner)) {
        rep.star_cocycle.passed = false;
        rep.star_cocycle.witness = {r, s, -1};
        break;
      }
    }

  rep.all_passed = rep.full_unit_ideal.passed && rep.domain_match.passed &&
                   rep.composition.passed && rep.unit_cocycle.passed &&
                   rep.cocycle_identity.passed && rep.star_ideals.passed &&
                   rep.star_theta.passed && rep.star_cocycle.passed;
  return rep;
}

CrossedAlgebra crossed_product(const TwistedActionData& d) {
  const int q = d.quotient_order();
  const int k = d.fnh_dim();

  CrossedAlgebra cp;
  std::vector<SpanBasis> coords;  // per t: coordinates in the D_t basis
  coords.reserve(static_cast<size_t>(q));
  std::vector<int> offset(static_cast<size_t>(q), 0);
  int dim = 0;
  for (int t = 0; t < q; ++t) {
    offset[static_cast<size_t>(t)] = dim;
    SpanBasis span(k);
    for (const auto& v : d.ideal_basis[static_cast<size_t>(t)]) span.add(v);
    coords.push_back(std::move(span));
    for (int i = 0; i < static_cast<int>(d.ideal_basis[static_cast<size_t>(t)].size()); ++i)
      cp.basis_tags.emplace_back(t, i);
    dim += static_cast<int>(d.ideal_basis[static_cast<size_t>(t)].size());
  }

  cp.algebra.dim = dim;
  cp.algebra.unit = RationalVector(static_cast<size_t>(dim));
  {
    auto unit_coords = coords[0].coordinates(d.fnh_unit());
    if (!unit_coords) throw TheoremContradiction("unit of F(N/H) is outside D_1");
    for (size_t i = 0; i < unit_coords->size(); ++i)
      cp.algebra.unit[static_cast<size_t>(offset[0]) + i] = (*unit_coords)[i];
  }

  // (a delta_r)(b delta_s) = theta_r(theta_r^{-1}(a) b) w_{r,s} delta_{rs}
  auto component_product = [&](int r, const RationalVector& a, int s,
                               const RationalVector& b) {
    RationalVector inner = d.fnh_mul(mat_apply(d.psi_inv[static_cast<size_t>(r)], a), b);
    return d.fnh_mul(mat_apply(d.psi[static_cast<size_t>(r)], inner), d.w(r, s));
  };

  cp.algebra.table.assign(static_cast<size_t>(dim),
                          std::vector<RationalVector>(static_cast<size_t>(dim)));
  for (int i = 0; i < dim; ++i) {
    auto [r, bi] = cp.basis_tags[static_cast<size_t>(i)];
    const RationalVector& a = d.ideal_basis[static_cast<size_t>(r)][static_cast<size_t>(bi)];
    for (int j = 0; j < dim; ++j) {
      auto [s, bj] = cp.basis_tags[static_cast<size_t>(j)];
      const RationalVector& b = d.ideal_basis[static_cast<size_t>(s)][static_cast<size_t>(bj)];
      int rs = d.gn.table.mul(r, s);
      RationalVector prod = component_product(r, a, s, b);
      auto c = coords[static_cast<size_t>(rs)].coordinates(prod);
      if (!c) throw TheoremContradiction("crossed product left its target ideal");
      RationalVector full(static_cast<size_t>(dim));
      for (size_t m = 0; m < c->size(); ++m)
        full[static_cast<size_t>(offset[static_cast<size_t>(rs)]) + m] = (*c)[m];
      cp.algebra.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(full);
    }
  }

  if (!cp.algebra.associative_on_basis())
    throw TheoremContradiction("crossed product is not associative");
  return cp;
}

PhiReport phi_isomorphism(const TwistedActionData& d, const CrossedAlgebra& cp) {
  const PairContext& ctx = *d.ctx;
  const GroupTable& G = ctx.group();
  PhiReport rep;
  rep.dim_matches = (cp.dim() == ctx.num_double_cosets());

  // Phi on the crossed basis: (v, t) -> iota(v) * sigma_{xi(t)}
  std::vector<HeckeElement> phi;
  phi.reserve(static_cast<size_t>(cp.dim()));
  for (auto [t, bi] : cp.basis_tags) {
    const RationalVector& v = d.ideal_basis[static_cast<size_t>(t)][static_cast<size_t>(bi)];
    phi.push_back(convolve(d.to_hecke(v),
                           HeckeElement::sigma(ctx, d.section[static_cast<size_t>(t)])));
  }
  auto phi_of = [&](const RationalVector& coords) {
    HeckeElement out = HeckeElement::zero(ctx);
    for (int i = 0; i < cp.dim(); ++i)
      if (!coords[static_cast<size_t>(i)].is_zero())
        out = out + phi[static_cast<size_t>(i)] * coords[static_cast<size_t>(i)];
    return out;
  };

  rep.phi_unital = (phi_of(cp.algebra.unit) == HeckeElement::unit(ctx));

  rep.phi_multiplicative = true;
  for (int i = 0; i < cp.dim() && rep.phi_multiplicative; ++i)
    for (int j = 0; j < cp.dim(); ++j) {
      const RationalVector& prod =
          cp.algebra.table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!(phi_of(prod) == convolve(phi[static_cast<size_t>(i)], phi[static_cast<size_t>(j)]))) {
        rep.phi_multiplicative = false;
        break;
      }
    }

  // Psi through the universal property: tau(x) = e_x sigma_{x xi(pi(x))^{-1}} delta_{pi(x)}
  std::vector<SpanBasis> coords;
  std::vector<int> offset(static_cast<size_t>(d.quotient_order()), 0);
  int dim = 0;
  for (int t = 0; t < d.quotient_order(); ++t) {
    offset[static_cast<size_t>(t)] = dim;
    SpanBasis span(d.fnh_dim());
    for (const auto& v : d.ideal_basis[static_cast<size_t>(t)]) span.add(v);
    dim += static_cast<int>(d.ideal_basis[static_cast<size_t>(t)].size());
    coords.push_back(std::move(span));
  }
  std::vector<RationalVector> tau;
  tau.reserve(static_cast<size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) {
    int t = d.gn.class_of[static_cast<size_t>(x)];
    int n = G.mul(x, G.inv(d.section[static_cast<size_t>(t)]));
    RationalVector a = d.fnh_mul(d.e[static_cast<size_t>(t)], d.fnh_delta(n));
    auto c = coords[static_cast<size_t>(t)].coordinates(a);
    if (!c) throw TheoremContradiction("tau(x) is outside D_{pi(x)}");
    RationalVector full(static_cast<size_t>(cp.dim()));
    for (size_t m = 0; m < c->size(); ++m)
      full[static_cast<size_t>(offset[static_cast<size_t>(t)]) + m] = (*c)[m];
    tau.push_back(std::move(full));
  }
  auto uh = universal_hom(ctx, cp.algebra, tau);
  rep.psi_ok = uh.ok;

  if (uh.ok) {
    // Phi o Psi = id on the sigma basis
    rep.phi_psi_identity = true;
    for (int b = 0; b < ctx.num_double_cosets(); ++b) {
      HeckeElement back = phi_of(uh.images[static_cast<size_t>(b)]);
      if (!(back == HeckeElement::sigma(ctx, ctx.double_rep(b)))) {
        rep.phi_psi_identity = false;
        break;
      }
    }
    // Psi o Phi = id on the crossed basis; Psi is linear with
    // Psi(sigma at rep b) = images[b] and f = sum f[b] R(b) sigma_b
    rep.psi_phi_identity = true;
    for (int i = 0; i < cp.dim() && rep.psi_phi_identity; ++i) {
      const HeckeElement& f = phi[static_cast<size_t>(i)];
      RationalVector mapped(static_cast<size_t>(cp.dim()));
      for (int b = 0; b < ctx.num_double_cosets(); ++b) {
        Rational coeff = f[b] * Rational(ctx.R(ctx.double_rep(b)));
        if (coeff.is_zero()) continue;
        for (int m = 0; m < cp.dim(); ++m)
          mapped[static_cast<size_t>(m)] +=
              coeff * uh.images[static_cast<size_t>(b)][static_cast<size_t>(m)];
      }
      RationalVector expect(static_cast<size_t>(cp.dim()));
      expect[static_cast<size_t>(i)] = Rational(1);
      if (!(mapped == expect)) rep.psi_phi_identity = false;
    }
  }

  rep.all_ok = rep.dim_matches && rep.phi_unital && rep.phi_multiplicative && rep.psi_ok &&
               rep.phi_psi_identity && rep.psi_phi_identity;
  return rep;
}

UntwistResult untwist_detect(const TwistedActionData& d) {
  const GroupTable& G = d.ctx->group();
  const int q = d.quotient_order();

  auto section_is_homomorphic = [&](const std::vector<int>& sec) {
    for (int r = 0; r < q; ++r)
      for (int s = 0; s < q; ++s) {
        int z = sec[static_cast<size_t>(d.gn.table.mul(r, s))];
        if (G.mul(sec[static_cast<size_t>(r)], sec[static_cast<size_t>(s)]) != z) return false;
      }
    return true;
  };

  UntwistResult out;
  if (section_is_homomorphic(d.section)) {
    out.untwistable = true;
    out.homomorphic_section = d.section;
    return out;
  }

  // homomorphic sections are exactly complements of N: subgroups K with
  // |K| = [G:N] and K cap N = {1}
  for (const SubgroupRef& K : all_subgroups(G)) {
    if (K.size() != q) continue;
    bool trivial_meet = true;
    for (int x : K.elements())
      if (x != GroupTable::identity() && d.gn.class_of[static_cast<size_t>(x)] == 0) {
        trivial_meet = false;
        break;
      }
    if (!trivial_meet) continue;
    std::vector<int> sec(static_cast<size_t>(q), -1);
    bool covers = true;
    for (int x : K.elements()) {
      int t = d.gn.class_of[static_cast<size_t>(x)];
      if (sec[static_cast<size_t>(t)] >= 0) {
        covers = false;
        break;
      }
      sec[static_cast<size_t>(t)] = x;
    }
    if (!covers) continue;
    if (!section_is_homomorphic(sec))
      throw TheoremContradiction("complement subgroup gave a non-homomorphic section");
    // rebuilding with this section must make every cocycle element trivial
    TwistedActionData rebuilt = build_action(*d.ctx, d.N, sec);
    for (int r = 0; r < q; ++r)
      for (int s = 0; s < q; ++s)
        if (rebuilt.cocycle_n[static_cast<size_t>(r)][static_cast<size_t>(s)] !=
            GroupTable::identity())
          throw TheoremContradiction("homomorphic section left a nontrivial cocycle");
    out.untwistable = true;
    out.homomorphic_section = std::move(sec);
    return out;
  }
  return out;
}

}  // namespace hecke
