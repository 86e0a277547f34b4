#include <doctest.h>

#include "hecke/group_spec.hpp"
#include "hecke/partial_rep.hpp"

using namespace hecke;

TEST_CASE("check_partial_rep") {
  SUBCASE("a genuine quotient representation passes") {
    GroupTable z6 = cyclic_group(6);
    PairContext ctx(z6, SubgroupRef(z6, {0, 3}));
    PartialRepCheck res = check_partial_rep(ctx, sigma_family(ctx));
    CHECK(res.unit_ok);
    CHECK(res.bi_invariant);
    CHECK(res.is_partial_rep);
  }
  SUBCASE("sigma on the D4 reflection pair passes") {
    GroupTable d4 = dihedral_group(4);
    PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
    CHECK(check_partial_rep(ctx, sigma_family(ctx)).is_partial_rep);
    CHECK(check_partial_rep(ctx, sigma_family(ctx), /*audit_full=*/true).is_partial_rep);
  }
  SUBCASE("sigma on the S3 transposition pair fails with a checkable witness") {
    GroupTable s3 = symmetric_group(3);
    PairContext ctx(s3, generate_subgroup(s3, {2}));
    ElementFamily u = sigma_family(ctx);
    PartialRepCheck res = check_partial_rep(ctx, u);
    CHECK(!res.is_partial_rep);
    bool left_failed = !res.left_absorption.passed;
    bool right_failed = !res.right_absorption.passed;
    CHECK((left_failed || right_failed));
    if (left_failed) {
      REQUIRE(res.left_absorption.witness.has_value());
      auto [x, y] = *res.left_absorption.witness;
      int xi = s3.inv(x), xy = s3.mul(x, y);
      CHECK(convolve(convolve(u[static_cast<size_t>(xi)], u[static_cast<size_t>(x)]),
                     u[static_cast<size_t>(y)]) !=
            convolve(u[static_cast<size_t>(xi)], u[static_cast<size_t>(xy)]));
    }
    // the fast path and the audit path agree on the verdict
    CHECK(check_partial_rep(ctx, u, /*audit_full=*/true).is_partial_rep ==
          res.is_partial_rep);
  }
  SUBCASE("axiom (ii) and axiom (iii) verdicts coincide for sigma") {
    for (const auto& cg : builtin_corpus(12))
      for (const SubgroupRef& H : all_subgroups(cg.group)) {
        PairContext ctx(cg.group, H);
        PartialRepCheck res = check_partial_rep(ctx, sigma_family(ctx));
        CHECK(res.left_absorption.passed == res.right_absorption.passed);
      }
  }
}

TEST_CASE("the indicator family of any subgroup is a partial representation") {
  GroupTable s3 = symmetric_group(3);
  for (const SubgroupRef& K : all_subgroups(s3)) {
    PairContext ctx(s3, SubgroupRef(s3, K.elements()));
    ElementFamily u = indicator_family(ctx, K);
    CHECK(check_partial_rep(ctx, u).is_partial_rep);
    CHECK(kernel_of(ctx, u) == K.elements());
  }
}

TEST_CASE("commutation relation") {
  SUBCASE("trivial group: vacuous") {
    GroupTable z1 = cyclic_group(1);
    PairContext ctx(z1, SubgroupRef(z1, {0}));
    CHECK(check_commutation(ctx, sigma_family(ctx)).passed);
  }
  SUBCASE("genuine representation: e_y = 1 collapses the relation") {
    GroupTable z6 = cyclic_group(6);
    PairContext ctx(z6, SubgroupRef(z6, {0, 3}));
    CHECK(check_commutation(ctx, sigma_family(ctx)).passed);
  }
  SUBCASE("D4 reflection pair passes") {
    GroupTable d4 = dihedral_group(4);
    PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
    CHECK(check_commutation(ctx, sigma_family(ctx)).passed);
    CHECK(check_commutation(ctx, sigma_family(ctx), /*audit_full=*/true).passed);
  }
}

TEST_CASE("equivalence suite: protonormal <=> partial rep <=> weak identity") {
  SUBCASE("positive cases") {
    GroupTable d4 = dihedral_group(4);
    PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
    EquivalenceReport rep = equivalence_suite(ctx);
    CHECK(rep.protonormal);
    CHECK(rep.sigma_partial_rep);
    CHECK(rep.weak_identity);
    CHECK(rep.all_agree);
  }
  SUBCASE("negative control: S3 transposition pair") {
    GroupTable s3 = symmetric_group(3);
    PairContext ctx(s3, generate_subgroup(s3, {2}));
    EquivalenceReport rep = equivalence_suite(ctx);
    CHECK(!rep.protonormal);
    CHECK(!rep.sigma_partial_rep);
    CHECK(!rep.weak_identity);
    CHECK(rep.all_agree);
    REQUIRE(rep.weak_identity_failure_x.has_value());
    int x = *rep.weak_identity_failure_x;
    HeckeElement sx = HeckeElement::sigma(ctx, x);
    CHECK(convolve(convolve(sx, HeckeElement::sigma(ctx, s3.inv(x))), sx) != sx);
  }
  SUBCASE("the biconditional holds across the small corpus, both sweep modes") {
    for (const auto& cg : builtin_corpus(12))
      for (const SubgroupRef& H : all_subgroups(cg.group)) {
        PairContext ctx(cg.group, H);
        EquivalenceReport fast = equivalence_suite(ctx);
        CHECK(fast.all_agree);
        EquivalenceReport audit = equivalence_suite(ctx, /*audit_full=*/true);
        CHECK(audit.all_agree);
        CHECK(fast.sigma_partial_rep == audit.sigma_partial_rep);
      }
  }
}

TEST_CASE("kernel of sigma is exactly H") {
  for (const auto& cg : builtin_corpus(8))
    for (const SubgroupRef& H : all_subgroups(cg.group)) {
      PairContext ctx(cg.group, H);
      CHECK(kernel_of(ctx, sigma_family(ctx)) == H.elements());
    }
}

TEST_CASE("e_x = sigma_x sigma_{x^-1} is idempotent when sigma is a partial rep") {
  GroupTable d4 = dihedral_group(4);
  PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
  for (int x = 0; x < 8; ++x) {
    HeckeElement e = convolve(HeckeElement::sigma(ctx, x),
                              HeckeElement::sigma(ctx, d4.inv(x)));
    CHECK(convolve(e, e) == e);
  }
}

TEST_CASE("further properties under subnormality") {
  GroupTable d4 = dihedral_group(4);
  PairContext ctx(d4, SubgroupRef(d4, {0, 4}));
  FurtherPropertiesReport rep = further_properties(ctx);
  CHECK(rep.partial_rep);
  CHECK(rep.left_global_ok);
  CHECK(rep.right_global_ok);
  CHECK(rep.normalizer_invertible);
  CHECK(rep.bi_invariance_ok);
  CHECK(rep.all_ok);

  SUBCASE("sigma_{r^2} is invertible with inverse sigma_{r^2}, by matrix inverse") {
    // r^2 normalizes H = <s>
    ModuleOperator s2 = to_operator(HeckeElement::sigma(ctx, 2));
    auto inv = mat_inverse(s2.m);
    REQUIRE(inv.has_value());
    CHECK(*inv == to_operator(HeckeElement::sigma(ctx, d4.inv(2))).m);
  }
  SUBCASE("elements of H give the unit") {
    CHECK(HeckeElement::sigma(ctx, 4) == HeckeElement::unit(ctx));
  }
  SUBCASE("requires subnormality") {
    GroupTable s3 = symmetric_group(3);
    PairContext sctx(s3, generate_subgroup(s3, {2}));
    CHECK_THROWS_AS(further_properties(sctx), ValidationError);
  }
}

TEST_CASE("normal pairs: every sigma_x is invertible") {
  GroupTable z6 = cyclic_group(6);
  PairContext ctx(z6, SubgroupRef(z6, {0, 3}));
  FurtherPropertiesReport rep = further_properties(ctx);
  CHECK(rep.all_ok);
  for (int x = 0; x < 6; ++x)
    CHECK(mat_inverse(to_operator(HeckeElement::sigma(ctx, x)).m).has_value());
}
