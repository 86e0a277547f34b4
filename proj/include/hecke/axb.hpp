#ifndef HECKE_AXB_HPP
#define HECKE_AXB_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke::axb {

/// Element of the ax+b group over Q: the matrix [[1, b], [0, a]] with a != 0,
/// stored in (b, a) coordinates.
struct Element {
  Rational b;
  Rational a{1};

  bool operator==(const Element& o) const { return b == o.b && a == o.a; }
};

inline Element identity() { return {Rational(0), Rational(1)}; }

/// Matrix product [[1,b1],[0,a1]] [[1,b2],[0,a2]] = [[1, b2 + b1 a2],[0, a1 a2]].
Element mul(const Element& x, const Element& y);
Element inverse(const Element& x);
/// x^{-1} h x; upper entry eta*a + (1 - xi)*b, lower entry xi.
Element conjugate(const Element& h, const Element& x);

/// A finite set of primes (validated, sorted, deduplicated).
struct PrimeSet {
  std::vector<std::int64_t> primes;

  explicit PrimeSet(std::vector<std::int64_t> ps);
  bool contains_divisor_of(std::int64_t n) const;  // some p in P divides n
};

/// zeta in A_P: the reduced denominator is coprime to every prime of P.
bool in_AP(const Rational& zeta, const PrimeSet& P);
/// zeta invertible in A_P: numerator and denominator both coprime to P.
bool in_AP_star(const Rational& zeta, const PrimeSet& P);
/// g in H_P = [[1, A_P],[0, A_P*]].
bool in_HP(const Element& g, const PrimeSet& P);

/// Certificate that H_P is not subnormal: (x, h, k) with the twisted
/// conjugate outside H_P.
struct Prop142Certificate {
  Element x, h, k;
  Element conjugated;   // x^{-1} h x
  Element result;       // (x^{-1} h x)^{-1} k (x^{-1} h x) = [[1, 2a], [0, -1]]
  bool result_in_HP = true;  // must come out false
};

Prop142Certificate prop142_witness(const PrimeSet& P, std::int64_t p);

/// Solution of the (*) system: h', k' with x^{-1} h x k = k' x^{-1} h' x.
struct StarSolution {
  Element h_prime, k_prime;
  bool memberships_ok = false;  // eta', nu' in A_P and xi', mu' in A_P*
  bool identity_ok = false;     // the defining matrix identity, exact
};

/// For P = {2} the solution always exists (the protonormality theorem); for
/// other P the membership outcome is instance data. h and k must lie in H_P.
StarSolution star_solve(const Element& x, const Element& h, const Element& k,
                        const PrimeSet& P);

struct HeckeWitnessReport {
  std::int64_t q = 1;          // common P-part of the denominators of a and b
  std::int64_t Gq_order = 1;   // |G_q| = q * phi(q), the finite index bound
  int samples_total = 0;
  int samples_pass = 0;        // kernel samples that landed in H_P cap H_P^{x^{-1}}
  int phi_hom_checks = 0;
  int phi_hom_pass = 0;        // additive + multiplicative ring-hom samples for phi
  std::uint64_t seed = 0;
};

/// Sampled reproduction of the finite-index kernel argument: builds
/// phi: A_P -> Z_q, draws kernel elements eta = q eta0, xi = 1 + q xi0 and
/// verifies each lies in H_P cap H_P^{x^{-1}}.
HeckeWitnessReport hecke_witness_141(const Element& x, const PrimeSet& P, int samples,
                                     std::uint64_t seed);

/// phi(n/m) = n * m^{-1} mod q (m coprime to q); exposed for tests.
std::int64_t residue_mod(const Rational& zeta, std::int64_t q);

}  // namespace hecke::axb

#endif
