#include "hecke/axb.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hecke::axb {

Element mul(const Element& x, const Element& y) {
  return {y.b + x.b * y.a, x.a * y.a};
}

Element inverse(const Element& x) {
  // [[1,b],[0,a]]^{-1} = [[1, -b/a],[0, 1/a]]
  Rational ai = x.a.inverse();
  return {-x.b * ai, ai};
}

Element conjugate(const Element& h, const Element& x) {
  return mul(mul(inverse(x), h), x);
}

PrimeSet::PrimeSet(std::vector<std::int64_t> ps) : primes(std::move(ps)) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::int64_t p : primes) {
    if (p < 2) throw ValidationError("prime set entry below 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ValidationError(std::to_string(p) + " is not prime");
  }
}

bool PrimeSet::contains_divisor_of(std::int64_t n) const {
  if (n < 0) n = -n;
  for (std::int64_t p : primes)
    if (n % p == 0) return true;
  return false;
}

bool in_AP(const Rational& zeta, const PrimeSet& P) {
  return !P.contains_divisor_of(zeta.denominator());
}

bool in_AP_star(const Rational& zeta, const PrimeSet& P) {
  if (zeta.is_zero()) return false;
  return !P.contains_divisor_of(zeta.numerator()) &&
         !P.contains_divisor_of(zeta.denominator());
}

bool in_HP(const Element& g, const PrimeSet& P) {
  return in_AP(g.b, P) && in_AP_star(g.a, P);
}

Prop142Certificate prop142_witness(const PrimeSet& P, std::int64_t p) {
  if (P.primes.empty()) throw ValidationError("prop142 needs a nonempty prime set");
  if (std::find(P.primes.begin(), P.primes.end(), p) == P.primes.end())
    throw ValidationError("p must belong to P");

  Prop142Certificate cert;
  cert.x = {Rational(0), Rational(1, 2 * p)};
  cert.h = {Rational(1), Rational(1)};
  cert.k = {Rational(0), Rational(-1)};
  if (!in_HP(cert.h, P) || !in_HP(cert.k, P))
    throw TheoremContradiction("prop142 elements h, k left H_P");
  cert.conjugated = conjugate(cert.h, cert.x);
  cert.result = mul(mul(inverse(cert.conjugated), cert.k), cert.conjugated);
  cert.result_in_HP = in_HP(cert.result, P);
  // the construction gives exactly [[1, 2a],[0,-1]] with 2a = 1/p
  if (!(cert.result == Element{Rational(1, p), Rational(-1)}))
    throw TheoremContradiction("prop142 matrix algebra produced an unexpected result");
  if (cert.result_in_HP)
    throw TheoremContradiction("prop142 witness unexpectedly landed inside H_P");
  return cert;
}

StarSolution star_solve(const Element& x, const Element& h, const Element& k,
                        const PrimeSet& P) {
  if (!in_HP(h, P) || !in_HP(k, P))
    throw ValidationError("star_solve requires h and k in H_P");
  const Rational& eta = h.b;
  const Rational& xi = h.a;
  const Rational& nu = k.b;
  const Rational& mu = k.a;

  StarSolution sol;
  Rational xi_p = Rational(1) + (xi - Rational(1)) * mu;
  if (xi_p.is_zero())
    throw ValidationError("degenerate (*) system: xi' = 0");
  sol.h_prime = {eta * mu, xi_p};
  sol.k_prime = {nu * xi_p.inverse(), xi * mu * xi_p.inverse()};

  sol.memberships_ok = in_HP(sol.h_prime, P) && in_HP(sol.k_prime, P);
  Element lhs = mul(conjugate(h, x), k);
  Element rhs = mul(sol.k_prime, conjugate(sol.h_prime, x));
  sol.identity_ok = (lhs == rhs);
  return sol;
}

namespace {

// the P-part of n: the largest divisor made of primes in P
std::int64_t p_part(std::int64_t n, const PrimeSet& P) {
  if (n < 0) n = -n;
  std::int64_t out = 1;
  for (std::int64_t p : P.primes)
    while (n % p == 0) {
      out = detail::checked_mul(out, p);
      n /= p;
    }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t q) {
  std::int64_t t = 0, new_t = 1, r = q, new_r = ((a % q) + q) % q;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw ValidationError("element not invertible mod q");
  return ((t % q) + q) % q;
}

Rational random_AP(std::mt19937_64& rng, const PrimeSet& P) {
  // numerators/denominators bounded by 2^20 to keep 64-bit arithmetic safe
  std::uniform_int_distribution<std::int64_t> num_dist(-(1 << 20), 1 << 20);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 1 << 20);
  for (;;) {
    std::int64_t d = den_dist(rng);
    if (P.contains_divisor_of(d)) continue;
    return Rational(num_dist(rng), d);
  }
}

}  // namespace

std::int64_t residue_mod(const Rational& zeta, std::int64_t q) {
  if (q == 1) return 0;
  std::int64_t n = ((zeta.numerator() % q) + q) % q;
  std::int64_t m = ((zeta.denominator() % q) + q) % q;
  return (n * mod_inverse(m, q)) % q;
}

HeckeWitnessReport hecke_witness_141(const Element& x, const PrimeSet& P, int samples,
                                     std::uint64_t seed) {
  HeckeWitnessReport rep;
  rep.seed = seed;
  std::int64_t qa = p_part(x.a.denominator(), P);
  std::int64_t qb = p_part(x.b.denominator(), P);
  rep.q = std::lcm(qa, qb);
  rep.Gq_order = detail::checked_mul(rep.q, euler_phi(rep.q));

  std::mt19937_64 rng(seed);
  Rational qr(rep.q);
  for (int i = 0; i < samples; ++i) {
    Element h;
    do {  // xi can only miss A_P* for primes outside q's support; redraw then
      Rational eta0 = random_AP(rng, P);
      Rational xi0 = random_AP(rng, P);
      h = Element{qr * eta0, Rational(1) + qr * xi0};
    } while (!in_HP(h, P));
    ++rep.samples_total;
    // h in H_P^{x^{-1}} iff x^{-1} h x in H_P
    if (in_HP(conjugate(h, x), P)) ++rep.samples_pass;

    // ring-homomorphism spot checks for phi
    if (rep.q > 1) {
      Rational z1 = random_AP(rng, P), z2 = random_AP(rng, P);
      ++rep.phi_hom_checks;
      bool additive = residue_mod(z1 + z2, rep.q) ==
                      (residue_mod(z1, rep.q) + residue_mod(z2, rep.q)) % rep.q;
      bool multiplicative = residue_mod(z1 * z2, rep.q) ==
                            (residue_mod(z1, rep.q) * residue_mod(z2, rep.q)) % rep.q;
      if (additive && multiplicative) ++rep.phi_hom_pass;
    }
  }
  return rep;
}

}  // namespace hecke::axb
