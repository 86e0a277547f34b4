#include <doctest.h>

#include <random>

#include "hecke/axb.hpp"

using namespace hecke;
using namespace hecke::axb;

namespace {

// independent oracle: plain 2x2 rational matrices
struct Mat2 {
  Rational a11, a12, a21, a22;

  static Mat2 of(const Element& e) { return {Rational(1), e.b, Rational(0), e.a}; }
  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  bool operator==(const Mat2& o) const {
    return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
  }
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-64, 64);
  std::uniform_int_distribution<std::int64_t> den(1, 64);
  return Rational(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

Rational random_odd(std::mt19937_64& rng) {
  // odd numerator and denominator: an element of A_{2}^*
  std::uniform_int_distribution<std::int64_t> v(0, 512);
  return Rational(2 * v(rng) + 1, 2 * v(rng) + 1);
}

}  // namespace

TEST_CASE("group law matches 2x2 matrix arithmetic") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 500; ++i) {
    Element x{random_rational(rng), random_nonzero(rng)};
    Element y{random_rational(rng), random_nonzero(rng)};
    Element z{random_rational(rng), random_nonzero(rng)};
    CHECK(Mat2::of(mul(x, y)) == Mat2::of(x) * Mat2::of(y));
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, inverse(x)) == identity());
    CHECK(mul(inverse(x), x) == identity());
  }
}

TEST_CASE("conjugation formula: lower entry xi, upper entry eta a + (1 - xi) b") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 500; ++i) {
    Element x{random_rational(rng), random_nonzero(rng)};
    Element h{random_rational(rng), random_nonzero(rng)};
    Element c = conjugate(h, x);
    CHECK(c.a == h.a);
    CHECK(c.b == h.b * x.a + (Rational(1) - h.a) * x.b);
    CHECK(Mat2::of(c) == Mat2::of(inverse(x)) * Mat2::of(h) * Mat2::of(x));
  }
}

TEST_CASE("membership in A_P and H_P") {
  PrimeSet two({2});
  CHECK(in_HP(identity(), two));
  CHECK(in_HP({Rational(1, 3), Rational(5, 7)}, two));
  CHECK(!in_HP({Rational(1, 2), Rational(1)}, two));
  CHECK(!in_HP({Rational(0), Rational(2)}, two));  // numerator of a is even
  CHECK(in_AP(Rational(4), two));
  CHECK(in_AP_star(Rational(3, 5), two));
  CHECK(!in_AP_star(Rational(0), two));
  CHECK(!in_AP_star(Rational(6, 5), two));

  PrimeSet p23({3, 2, 2});  // dedup + sort
  CHECK(p23.primes == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(PrimeSet({4}), ValidationError);
  CHECK_THROWS_AS(PrimeSet({1}), ValidationError);
}

TEST_CASE("prop 14.2 witness") {
  SUBCASE("P = {2}, p = 2: the result is exactly (1/2, -1)") {
    auto cert = prop142_witness(PrimeSet({2}), 2);
    CHECK(cert.result.b == Rational(1, 2));
    CHECK(cert.result.a == Rational(-1));
    CHECK(!cert.result_in_HP);
    CHECK(cert.x.a == Rational(1, 4));  // a = 1/(2p)
  }
  SUBCASE("P = {3}, p = 3: the result is (1/3, -1)") {
    auto cert = prop142_witness(PrimeSet({3}), 3);
    CHECK(cert.result.b == Rational(1, 3));
    CHECK(cert.result.a == Rational(-1));
    CHECK(!cert.result_in_HP);
  }
  SUBCASE("sanity: with a = 1 the same triple stays inside H_P") {
    PrimeSet two({2});
    Element x{Rational(0), Rational(1)};
    Element h{Rational(1), Rational(1)};
    Element k{Rational(0), Rational(-1)};
    Element u = conjugate(h, x);
    Element result = mul(mul(inverse(u), k), u);
    CHECK(result.b == Rational(2));
    CHECK(result.a == Rational(-1));
    CHECK(in_HP(result, two));
  }
  SUBCASE("p must be in P") {
    CHECK_THROWS_AS(prop142_witness(PrimeSet({2}), 3), ValidationError);
  }
}

TEST_CASE("star solver") {
  PrimeSet two({2});

  SUBCASE("identity inputs give identity outputs") {
    Element x{Rational(3, 7), Rational(1, 2)};
    StarSolution sol = star_solve(x, identity(), identity(), two);
    CHECK(sol.h_prime == identity());
    CHECK(sol.k_prime == identity());
    CHECK(sol.memberships_ok);
    CHECK(sol.identity_ok);
  }
  SUBCASE("mu = 1 keeps xi and trivializes mu'") {
    Element x{Rational(0), Rational(1, 2)};
    Element h{Rational(1), Rational(3)};
    Element k{Rational(5, 3), Rational(1)};
    StarSolution sol = star_solve(x, h, k, two);
    CHECK(sol.h_prime.a == h.a);
    CHECK(sol.k_prime.a == Rational(1));
    CHECK(sol.identity_ok);
    CHECK(sol.memberships_ok);
  }
  SUBCASE("seeded odd-rational fuzz: identity and memberships always hold") {
    std::mt19937_64 rng(20240229);
    std::uniform_int_distribution<std::int64_t> num(-512, 512);
    std::uniform_int_distribution<std::int64_t> odd(0, 256);
    for (int i = 0; i < 1000; ++i) {
      Element x{random_rational(rng), random_nonzero(rng)};
      Element h{Rational(num(rng), 2 * odd(rng) + 1), random_odd(rng)};
      Element k{Rational(num(rng), 2 * odd(rng) + 1), random_odd(rng)};
      StarSolution sol = star_solve(x, h, k, two);
      CHECK(sol.identity_ok);
      CHECK(sol.memberships_ok);
      // the parity argument: xi' has odd numerator and denominator
      CHECK((sol.h_prime.a.numerator() % 2 != 0));
      CHECK((sol.h_prime.a.denominator() % 2 != 0));
    }
  }
  SUBCASE("inputs must lie in H_P") {
    Element x{Rational(0), Rational(1, 2)};
    CHECK_THROWS_AS(
        star_solve(x, Element{Rational(1, 2), Rational(1)}, identity(), two),
        ValidationError);
  }
  SUBCASE("for odd primes the system can degenerate to xi' = 0") {
    // xi = 2, mu = -1 gives xi' = 1 + (2-1)(-1) = 0; impossible when 2 is in P
    PrimeSet three({3});
    Element x{Rational(0), Rational(1, 3)};
    CHECK_THROWS_AS(star_solve(x, Element{Rational(0), Rational(2)},
                               Element{Rational(0), Rational(-1)}, three),
                    ValidationError);
  }
}

TEST_CASE("hecke witness sampling") {
  PrimeSet two({2});

  SUBCASE("x = (0, 1/2): q = 2 and all samples pass") {
    HeckeWitnessReport rep = hecke_witness_141({Rational(0), Rational(1, 2)}, two, 100, 7);
    CHECK(rep.q == 2);
    CHECK(rep.Gq_order == 2);  // 2 * phi(2)
    CHECK(rep.samples_total == 100);
    CHECK(rep.samples_pass == 100);
    CHECK(rep.phi_hom_pass == rep.phi_hom_checks);
  }
  SUBCASE("x = (1/4, 1/2): lcm normalization gives q = 4") {
    HeckeWitnessReport rep =
        hecke_witness_141({Rational(1, 4), Rational(1, 2)}, two, 50, 11);
    CHECK(rep.q == 4);
    CHECK(rep.Gq_order == 8);
    CHECK(rep.samples_pass == rep.samples_total);
  }
  SUBCASE("x already in H_P: the degenerate q = 1 bound") {
    HeckeWitnessReport rep = hecke_witness_141({Rational(1, 3), Rational(3)}, two, 20, 3);
    CHECK(rep.q == 1);
    CHECK(rep.Gq_order == 1);
    CHECK(rep.samples_pass == rep.samples_total);
  }
  SUBCASE("deterministic for a fixed seed") {
    auto a = hecke_witness_141({Rational(0), Rational(1, 2)}, two, 25, 99);
    auto b = hecke_witness_141({Rational(0), Rational(1, 2)}, two, 25, 99);
    CHECK(a.samples_pass == b.samples_pass);
    CHECK(a.phi_hom_pass == b.phi_hom_pass);
  }
}

TEST_CASE("residue map") {
  CHECK(residue_mod(Rational(1, 3), 2) == 1);  // 3^{-1} = 1 mod 2
  CHECK(residue_mod(Rational(2, 3), 5) == 4);  // 2 * 2 = 4 since 3^{-1} = 2 mod 5
  CHECK(residue_mod(Rational(-1, 3), 4) == 1);
  CHECK(residue_mod(Rational(7), 1) == 0);
}
