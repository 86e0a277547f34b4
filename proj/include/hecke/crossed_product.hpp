#ifndef HECKE_CROSSED_PRODUCT_HPP
#define HECKE_CROSSED_PRODUCT_HPP

#include <array>
#include <optional>
#include <vector>

#include "hecke/product_law.hpp"

namespace hecke {

/// Quotient group big/small for small normal in big, with coset bookkeeping
/// against the ambient group.
struct Quotient {
  GroupTable table;          // the quotient as its own GroupTable
  std::vector<int> reps;     // minimal coset representative per quotient element
  std::vector<int> class_of; // ambient element -> quotient index, -1 outside big
};

Quotient make_quotient(const GroupTable& ambient, const SubgroupRef& big,
                       const SubgroupRef& small);

/// Everything defining the twisted partial action of G/N on F(N/H) for a
/// chain H <| N <| G: the section xi, the central idempotents e_t, the ideals
/// D_t with explicit bases, the partial isomorphisms theta_t (stored as the
/// full conjugation operators psi on F(N/H)), and the cocycle w.
///
/// Elements of F(N/H) are exact coordinate vectors over the coset basis
/// delta_{Hn}, n the N/H representatives; F(N/H) is the group algebra of the
/// quotient group N/H.
class TwistedActionData {
 public:
  TwistedActionData(const PairContext& c, SubgroupRef n, Quotient nh_quot, Quotient gn_quot,
                    std::vector<int> sec)
      : ctx(&c), N(std::move(n)), nh(std::move(nh_quot)), gn(std::move(gn_quot)),
        section(std::move(sec)) {}

  const PairContext* ctx;
  SubgroupRef N;
  Quotient nh;  // N/H
  Quotient gn;  // G/N
  std::vector<int> section;  // xi per G/N index; section[0] = identity

  int fnh_dim() const { return nh.table.order(); }
  int quotient_order() const { return gn.table.order(); }

  std::vector<RationalVector> e;          // e_t per G/N index
  std::vector<RationalMatrix> psi;        // psi_{xi(t)} on F(N/H)
  std::vector<RationalMatrix> psi_inv;    // psi_{xi(t)^{-1}}
  std::vector<std::vector<RationalVector>> ideal_basis;  // D_t bases
  std::vector<std::vector<int>> cocycle_n;  // n_{r,s} = xi(r) xi(s) xi(rs)^{-1}, in N

  // ---- F(N/H) group-algebra helpers ----
  RationalVector fnh_zero() const { return RationalVector(static_cast<size_t>(fnh_dim())); }
  RationalVector fnh_unit() const;
  RationalVector fnh_delta(int n) const;  // basis vector of the coset Hn, n in N
  RationalVector fnh_mul(const RationalVector& a, const RationalVector& b) const;
  RationalVector fnh_star(const RationalVector& a) const;  // delta_n -> delta_{n^{-1}}

  HeckeElement to_hecke(const RationalVector& a) const;
  /// Inverse of to_hecke; throws if the support leaves N.
  RationalVector from_hecke(const HeckeElement& f) const;

  RationalVector w(int r, int s) const;      // the cocycle value as a global unit of F(N/H)
  RationalVector w_inv(int r, int s) const;

  bool in_ideal(int t, const RationalVector& v) const;  // e_t v == v
};

/// Builds the action and asserts the structural lemmas on the way (iota
/// injective, products supported in N, e_t central idempotents depending only
/// on the N-coset, psi inverse pairs, the two cocycle identities). The
/// default section picks the minimal element per N-coset; a supplied section
/// must satisfy pi(xi(t)) = t and xi(N1) = 1.
TwistedActionData build_action(const PairContext& ctx, SubgroupRef N,
                               std::optional<std::vector<int>> custom_section = std::nullopt);

/// sigma_n for n in N, the image of the group-algebra basis vector delta_{Hn}.
HeckeElement embed_iota(const TwistedActionData& data, int n);

struct TpaAxiom {
  bool passed = true;
  std::optional<std::array<int, 3>> witness;  // offending (r, s, t); unused slots -1
};

struct TpaReport {
  TpaAxiom full_unit_ideal;    // (i)   D_1 = A, theta_1 = id
  TpaAxiom domain_match;       // (ii)  theta_r(D_{r^-1} cap D_s) = D_r cap D_{rs}
  TpaAxiom composition;        // (iii) theta_r theta_s = Ad_{w_{r,s}} theta_{rs}
  TpaAxiom unit_cocycle;       // (iv)  w_{1,t} = w_{t,1} = 1
  TpaAxiom cocycle_identity;   // (v)   theta_r(a w_{s,t}) w_{r,st} = theta_r(a) w_{r,s} w_{rs,t}
  TpaAxiom star_ideals;        // (vi)  D_t^* = D_t
  TpaAxiom star_theta;         // (vii) theta_t(a^*) = theta_t(a)^*
  TpaAxiom star_cocycle;       // (viii) w^{-1} = w^*
  bool all_passed = false;
};

/// Exhaustive axiom verification over all rep triples and ideal bases.
TpaReport check_tpa_axioms(const TwistedActionData& data);

/// The crossed product as a concrete finite-dimensional algebra: basis
/// tagged by (quotient element t, index into the D_t basis).
struct CrossedAlgebra {
  std::vector<std::pair<int, int>> basis_tags;
  FiniteAlgebra algebra;

  int dim() const { return algebra.dim; }
};

/// Assembles the twisted direct-sum algebra and verifies associativity on the whole
/// basis.
CrossedAlgebra crossed_product(const TwistedActionData& data);

struct PhiReport {
  bool dim_matches = false;       // dim crossed == #double cosets
  bool phi_unital = false;
  bool phi_multiplicative = false;
  bool psi_ok = false;            // universal_hom accepted tau
  bool phi_psi_identity = false;  // Phi o Psi = id on H(G,H)
  bool psi_phi_identity = false;  // Psi o Phi = id on the crossed product
  bool all_ok = false;
};

/// Thm 11.9: Phi(a delta_t) = a sigma_{xi(t)} and its universal-property
/// inverse Psi, both verified exactly.
PhiReport phi_isomorphism(const TwistedActionData& data, const CrossedAlgebra& cp);

struct UntwistResult {
  bool untwistable = false;
  std::optional<std::vector<int>> homomorphic_section;
};

/// Searches for a homomorphic section (equivalently a complement subgroup of
/// N) and certifies that it makes every cocycle value the unit.
UntwistResult untwist_detect(const TwistedActionData& data);

}  // namespace hecke

#endif
