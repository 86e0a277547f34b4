#include <doctest.h>

#include <memory>

#include "hecke/group_spec.hpp"
#include "hecke/hecke_algebra.hpp"

using namespace hecke;

namespace {

struct OwnedPair {
  std::unique_ptr<GroupTable> group;
  std::unique_ptr<PairContext> ctx;
};

// contexts hold pointers into their group, so the group lives on the heap
std::vector<OwnedPair> small_pairs() {
  std::vector<OwnedPair> out;
  auto add = [&](GroupTable g, std::vector<int> h) {
    auto gp = std::make_unique<GroupTable>(std::move(g));
    auto cp = std::make_unique<PairContext>(*gp, SubgroupRef(*gp, std::move(h)));
    out.push_back({std::move(gp), std::move(cp)});
  };
  add(dihedral_group(4), {0, 4});
  add(symmetric_group(3), generate_subgroup(symmetric_group(3), {2}).elements());
  add(quaternion_group(), {0, 1, 4, 5});  // <i>
  add(cyclic_group(6), {0, 3});
  return out;
}

}  // namespace

TEST_CASE("dictionary: from_operator / to_operator") {
  GroupTable d4 = dihedral_group(4);
  PairContext ctx(d4, SubgroupRef(d4, {0, 4}));

  SUBCASE("identity operator maps to the unit function") {
    CHECK(from_operator(ModuleOperator::identity(ctx)) == HeckeElement::unit(ctx));
    CHECK(to_operator(HeckeElement::unit(ctx)).is_identity());
  }
  SUBCASE("sigma operators round-trip to sigma functions") {
    for (int x = 0; x < 8; ++x) {
      CHECK(from_operator(sigma_op(ctx, x)) == HeckeElement::sigma(ctx, x));
      CHECK(to_operator(HeckeElement::sigma(ctx, x)) == sigma_op(ctx, x));
    }
  }
  SUBCASE("sigma function form is the scaled indicator of its double coset") {
    HeckeElement sr = HeckeElement::sigma(ctx, 1);
    CHECK(sr.at(1) == Rational(1, 2));  // R(r) = 2
    CHECK(sr.at(3) == Rational(1, 2));  // same double coset
    CHECK(sr.at(0).is_zero());
    CHECK(sr.at(2).is_zero());
  }
  SUBCASE("rho(r) is not in the Hecke algebra here: constancy violation") {
    CHECK_THROWS_AS(from_operator(rho_op(ctx, 1)), ValidationError);
  }
  SUBCASE("linearity of to_operator") {
    HeckeElement f = HeckeElement::sigma(ctx, 1);
    HeckeElement g = HeckeElement::sigma(ctx, 2) * Rational(3, 7);
    ModuleOperator sum = to_operator(f + g);
    CHECK(sum == to_operator(f) + to_operator(g));
  }
}

TEST_CASE("convolution") {
  GroupTable d4 = dihedral_group(4);
  PairContext ctx(d4, SubgroupRef(d4, {0, 4}));

  SUBCASE("unit laws") {
    HeckeElement one = HeckeElement::unit(ctx);
    for (int b = 0; b < ctx.num_double_cosets(); ++b) {
      HeckeElement f = HeckeElement::sigma(ctx, ctx.double_rep(b));
      CHECK(convolve(f, one) == f);
      CHECK(convolve(one, f) == f);
    }
  }
  SUBCASE("golden case: sigma_r * sigma_r = (sigma_1 + sigma_{r^2})/2") {
    HeckeElement sr = HeckeElement::sigma(ctx, 1);
    HeckeElement expect =
        HeckeElement::sigma(ctx, 0) * Rational(1, 2) +
        HeckeElement::sigma(ctx, 2) * Rational(1, 2);
    CHECK(convolve(sr, sr) == expect);
  }
  SUBCASE("dictionary soundness: convolution = operator composition") {
    for (const OwnedPair& p : small_pairs()) {
      const PairContext& c = *p.ctx;
      std::vector<HeckeElement> basis = hecke_basis(c);
      for (const HeckeElement& f : basis) {
        CHECK(from_operator(to_operator(f)) == f);
        for (const HeckeElement& g : basis)
          CHECK(to_operator(convolve(f, g)) == to_operator(f) * to_operator(g));
      }
    }
  }
  SUBCASE("associativity on basis triples") {
    for (const OwnedPair& p : small_pairs()) {
      const PairContext& c = *p.ctx;
      std::vector<HeckeElement> basis = hecke_basis(c);
      for (const HeckeElement& f : basis)
        for (const HeckeElement& g : basis)
          for (const HeckeElement& h : basis)
            CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
    }
  }
}

TEST_CASE("basis") {
  GroupTable d4 = dihedral_group(4);
  SUBCASE("H = G: one element, the unit") {
    PairContext ctx(d4, SubgroupRef(d4, {0, 1, 2, 3, 4, 5, 6, 7}));
    auto basis = hecke_basis(ctx);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == HeckeElement::unit(ctx));
  }
  SUBCASE("H trivial: the group algebra") {
    PairContext ctx(d4, SubgroupRef(d4, {0}));
    CHECK(hecke_basis(ctx).size() == 8);
  }
  SUBCASE("D4 reflection pair: three double cosets") {
    PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
    CHECK(hecke_basis(ctx).size() == 3);
  }
}

TEST_CASE("involutions") {
  for (const OwnedPair& p : small_pairs()) {
    const PairContext& c = *p.ctx;
    const GroupTable& g = c.group();
    std::vector<HeckeElement> basis = hecke_basis(c);

    SUBCASE("star and sharp are involutive and swap sigma_x with sigma_{x^-1}") {
      for (int x = 0; x < g.order(); ++x) {
        HeckeElement sx = HeckeElement::sigma(c, x);
        CHECK(star(sx) == HeckeElement::sigma(c, g.inv(x)));
        CHECK(star(star(sx)) == sx);
        CHECK(sharp(sharp(sx)) == sx);
      }
      CHECK(star(HeckeElement::unit(c)) == HeckeElement::unit(c));
    }
    SUBCASE("anti-multiplicativity on basis pairs") {
      for (const HeckeElement& f : basis)
        for (const HeckeElement& h : basis) {
          CHECK(star(convolve(f, h)) == convolve(star(h), star(f)));
          CHECK(sharp(convolve(f, h)) == convolve(sharp(h), sharp(f)));
        }
    }
    SUBCASE("finite pairs have Delta = 1, so sharp equals star") {
      for (const HeckeElement& f : basis) CHECK(star(f) == sharp(f));
    }
    SUBCASE("star matches the Gram adjoint of the operator form") {
      // adjoint wrt the diagonal Gram matrix D: a* = D^{-1} a^T D
      RationalMatrix D = mat_zero(c.dim(), c.dim());
      for (int i = 0; i < c.dim(); ++i)
        D[static_cast<size_t>(i)][static_cast<size_t>(i)] = c.delta(c.right_rep(i));
      auto Dinv = mat_inverse(D);
      REQUIRE(Dinv.has_value());
      for (const HeckeElement& f : basis) {
        RationalMatrix a = to_operator(f).m;
        RationalMatrix at(a.size(), RationalVector(a.size()));
        for (size_t i = 0; i < a.size(); ++i)
          for (size_t j = 0; j < a.size(); ++j) at[j][i] = a[i][j];
        CHECK(mat_mul(*Dinv, mat_mul(at, D)) == to_operator(star(f)).m);
      }
    }
  }
}

TEST_CASE("partial isometry identity on protonormal pairs") {
  GroupTable d4 = dihedral_group(4);
  PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
  for (int x = 0; x < 8; ++x) {
    HeckeElement sx = HeckeElement::sigma(ctx, x);
    CHECK(convolve(convolve(sx, star(sx)), sx) == sx);
  }
}

TEST_CASE("lambda isomorphism") {
  GroupTable s3 = symmetric_group(3);

  SUBCASE("auto-derivation gives the identity map when Delta = 1") {
    PairContext ctx(s3, generate_subgroup(s3, {2}));
    auto iso = derive_lambda(ctx);
    REQUIRE(iso.has_value());
    for (const Rational& l : iso->lambda) CHECK(l.is_one());
    for (const HeckeElement& f : hecke_basis(ctx)) CHECK(iso->apply(f) == f);
  }

  SUBCASE("a nontrivial sign character works over the alternating subgroup") {
    // A3 = <3-cycle>; lambda = sign satisfies lambda^2 = 1 = Delta, lambda|_H = 1
    int three_cycle = -1;
    for (int x = 1; x < 6; ++x)
      if (s3.mul(x, x) != 0) {
        three_cycle = x;
        break;
      }
    REQUIRE(three_cycle > 0);
    SubgroupRef A3 = generate_subgroup(s3, {three_cycle});
    REQUIRE(A3.size() == 3);
    PairContext ctx(s3, A3);
    RationalVector sign(6);
    for (int x = 0; x < 6; ++x) sign[static_cast<size_t>(x)] = A3.contains(x) ? 1 : -1;
    LambdaIso iso = lambda_isomorphism(ctx, sign);
    std::vector<HeckeElement> basis = hecke_basis(ctx);
    REQUIRE(basis.size() == 2);
    CHECK(iso.apply(basis[0]) == basis[0]);
    CHECK(iso.apply(basis[1]) == basis[1] * Rational(-1));
  }

  SUBCASE("validation failures") {
    PairContext ctx(s3, generate_subgroup(s3, {2}));
    RationalVector not_mult(6, Rational(1));
    not_mult[3] = Rational(2);
    CHECK_THROWS_AS(lambda_isomorphism(ctx, not_mult), ValidationError);
    RationalVector zero(6, Rational(1));
    zero[0] = Rational(0);
    CHECK_THROWS_AS(lambda_isomorphism(ctx, zero), ValidationError);
    // sign character is nontrivial on this H = <transposition>
    RationalVector sign(6);
    SubgroupRef A3 = generate_subgroup(s3, {3});
    for (int x = 0; x < 6; ++x) sign[static_cast<size_t>(x)] = A3.contains(x) ? 1 : -1;
    CHECK_THROWS_AS(lambda_isomorphism(ctx, sign), ValidationError);
  }
}
