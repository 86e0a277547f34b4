#include "hecke/hecke_algebra.hpp"

#include <cmath>

namespace hecke {

HeckeElement HeckeElement::unit(const PairContext& ctx) {
  HeckeElement f(ctx);
  f[ctx.double_block(GroupTable::identity())] = Rational(1);
  return f;
}

HeckeElement HeckeElement::sigma(const PairContext& ctx, int x) {
  HeckeElement f(ctx);
  int b = ctx.double_block(x);
  f[b] = Rational(1, ctx.R(x));
  return f;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

HeckeElement HeckeElement::operator*(const Rational& s) const {
  HeckeElement r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

HeckeElement from_operator(const ModuleOperator& a) {
  const PairContext& ctx = *a.ctx;
  // f_a(t) is the delta_{Ht} coefficient of a(delta_H); read the column of
  // the coset H and check constancy across the right cosets of each double coset.
  int h_col = ctx.right_block(GroupTable::identity());
  HeckeElement f(ctx);
  std::vector<char> set(static_cast<size_t>(ctx.num_double_cosets()), 0);
  for (int row = 0; row < ctx.dim(); ++row) {
    int t = ctx.right_rep(row);
    int b = ctx.double_block(t);
    const Rational& v = a.m[static_cast<size_t>(row)][static_cast<size_t>(h_col)];
    if (!set[static_cast<size_t>(b)]) {
      f[b] = v;
      set[static_cast<size_t>(b)] = 1;
    } else if (f[b] != v) {
      throw ValidationError("operator is not constant on double cosets (not in the Hecke algebra)");
    }
  }
  return f;
}

ModuleOperator to_operator(const HeckeElement& f) {
  const PairContext& ctx = f.context();
  const GroupTable& G = ctx.group();
  ModuleOperator op = ModuleOperator::zero(ctx);
  for (int row = 0; row < ctx.dim(); ++row) {
    int t = ctx.right_rep(row);
    for (int col = 0; col < ctx.dim(); ++col) {
      int s = ctx.right_rep(col);
      op.m[static_cast<size_t>(row)][static_cast<size_t>(col)] = f.at(G.mul(t, G.inv(s)));
    }
  }
  return op;
}

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g) {
  const PairContext& ctx = f.context();
  if (&g.context() != &ctx) throw ValidationError("convolving across different pairs");
  const GroupTable& G = ctx.group();
  HeckeElement r(ctx);
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    int t = ctx.double_rep(b);
    Rational acc;
    for (int col = 0; col < ctx.dim(); ++col) {
      int s = ctx.right_rep(col);
      Rational gs = g.at(s);
      if (gs.is_zero()) continue;
      acc += f.at(G.mul(t, G.inv(s))) * gs;
    }
    r[b] = acc;
  }
  return r;
}

std::vector<HeckeElement> hecke_basis(const PairContext& ctx) {
  std::vector<HeckeElement> basis;
  basis.reserve(static_cast<size_t>(ctx.num_double_cosets()));
  RationalMatrix coeff_rows;
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    basis.push_back(HeckeElement::sigma(ctx, ctx.double_rep(b)));
    coeff_rows.push_back(basis.back().coeffs());
  }
  if (mat_rank(coeff_rows) != ctx.num_double_cosets())
    throw TheoremContradiction("sigma basis is not linearly independent");
  return basis;
}

HeckeElement star(const HeckeElement& f) {
  const PairContext& ctx = f.context();
  const GroupTable& G = ctx.group();
  HeckeElement r(ctx);
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    int t = ctx.double_rep(b);
    int tinv = G.inv(t);
    r[b] = ctx.delta(tinv) * f.at(tinv);
  }
  return r;
}

HeckeElement sharp(const HeckeElement& f) {
  const PairContext& ctx = f.context();
  const GroupTable& G = ctx.group();
  HeckeElement r(ctx);
  for (int b = 0; b < ctx.num_double_cosets(); ++b)
    r[b] = f.at(G.inv(ctx.double_rep(b)));
  return r;
}

HeckeElement LambdaIso::apply(const HeckeElement& f) const {
  const PairContext& ctx = f.context();
  HeckeElement r(ctx);
  for (int b = 0; b < ctx.num_double_cosets(); ++b) {
    int x = ctx.double_rep(b);
    r[b] = lambda[static_cast<size_t>(x)] * f[b];
  }
  return r;
}

LambdaIso lambda_isomorphism(const PairContext& ctx, RationalVector lambda) {
  const GroupTable& G = ctx.group();
  if (static_cast<int>(lambda.size()) != G.order())
    throw ValidationError("lambda must be defined on every group element");
  for (const auto& v : lambda)
    if (v.is_zero()) throw ValidationError("lambda takes the value zero");
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      if (lambda[static_cast<size_t>(G.mul(x, y))] !=
          lambda[static_cast<size_t>(x)] * lambda[static_cast<size_t>(y)])
        throw ValidationError("lambda is not multiplicative");
  for (int x = 0; x < G.order(); ++x)
    if (lambda[static_cast<size_t>(x)] * lambda[static_cast<size_t>(x)] != ctx.delta(x))
      throw ValidationError("lambda(x)^2 != Delta(x)");
  // lambda must be constant on double cosets for Lambda(f) to remain doubly
  // invariant, which for a homomorphism means lambda is trivial on H
  for (int h : ctx.subgroup().elements())
    if (!lambda[static_cast<size_t>(h)].is_one())
      throw ValidationError("lambda is nontrivial on H; Lambda would leave the algebra");

  LambdaIso iso{std::move(lambda)};
  // The map must carry star to sharp and preserve products; check on the basis.
  std::vector<HeckeElement> basis = hecke_basis(ctx);
  for (const auto& f : basis) {
    if (iso.apply(star(f)) != sharp(iso.apply(f)))
      throw TheoremContradiction("Lambda does not intertwine the involutions");
    for (const auto& g : basis)
      if (iso.apply(convolve(f, g)) != convolve(iso.apply(f), iso.apply(g)))
        throw TheoremContradiction("Lambda is not multiplicative on the basis");
  }
  return iso;
}

namespace {

std::optional<Rational> positive_rational_sqrt(const Rational& v) {
  if (v.sign() <= 0) return std::nullopt;
  auto isqrt = [](std::int64_t n) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c = r - 2; c <= r + 2; ++c)
      if (c >= 0 && c * c == n) return c;
    return std::nullopt;
  };
  auto n = isqrt(v.numerator());
  auto d = isqrt(v.denominator());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace

std::optional<LambdaIso> derive_lambda(const PairContext& ctx) {
  const GroupTable& G = ctx.group();
  RationalVector lambda(static_cast<size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) {
    auto root = positive_rational_sqrt(ctx.delta(x));
    if (!root) return std::nullopt;
    lambda[static_cast<size_t>(x)] = *root;
  }
  try {
    return lambda_isomorphism(ctx, std::move(lambda));
  } catch (const ValidationError&) {
    return std::nullopt;  // positive roots exist but fail multiplicativity
  }
}

}  // namespace hecke
