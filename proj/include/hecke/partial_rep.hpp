#ifndef HECKE_PARTIAL_REP_HPP
#define HECKE_PARTIAL_REP_HPP

#include <optional>
#include <vector>

#include "hecke/hecke_algebra.hpp"
#include "hecke/pair_analysis.hpp"

namespace hecke {

/// A G-indexed family valued in the Hecke algebra: candidate partial
/// representation. Index = group element.
using ElementFamily = std::vector<HeckeElement>;

/// The canonical family x -> sigma_x.
ElementFamily sigma_family(const PairContext& ctx);

/// The scalar family u(x) = [x in K] * 1 (a partial representation for any
/// subgroup K, with kernel exactly K).
ElementFamily indicator_family(const PairContext& ctx, const SubgroupRef& K);

struct AxiomCheck {
  bool passed = true;
  std::optional<std::pair<int, int>> witness;  // minimal failing (x, y)
};

struct PartialRepCheck {
  bool unit_ok = true;            // u(1) = 1
  AxiomCheck left_absorption;     // u(x^{-1}) u(x) u(y) = u(x^{-1}) u(xy)
  AxiomCheck right_absorption;    // u(x) u(y) u(y^{-1}) = u(xy) u(y^{-1})
  bool bi_invariant = false;      // u constant on double cosets (enables the fast path)
  bool is_partial_rep = false;
};

/// Verifies the partial-representation axioms. When the family is constant on double cosets
/// the quantifier over G x G reduces to (reps x H x reps); with audit_full the
/// full |G|^2 sweep runs regardless. Witnesses are the minimal failing pair
/// over all of G x G either way.
PartialRepCheck check_partial_rep(const PairContext& ctx, const ElementFamily& u,
                                  bool audit_full = false);

struct CommutationCheck {
  bool passed = true;
  std::optional<std::pair<int, int>> witness;
};

/// u(x) e_y = e_{xy} u(x) with e_y = u(y) u(y^{-1}), over all pairs (reduced
/// as in check_partial_rep for bi-invariant families).
CommutationCheck check_commutation(const PairContext& ctx, const ElementFamily& u,
                                   bool audit_full = false);

struct EquivalenceReport {
  bool protonormal = false;      // pair-analysis side
  bool sigma_partial_rep = false;  // Def 2.1 side for sigma
  bool weak_identity = false;    // sigma_x sigma_{x^{-1}} sigma_x = sigma_x for all x
  bool all_agree = false;        // the theorem: all three coincide
  std::optional<int> weak_identity_failure_x;
  PartialRepCheck rep_check;
  ProtonormalResult proto;
};

/// The machine-checked biconditional: H protonormal <=> sigma is a partial
/// representation <=> the partial-isometry identity holds for every x.
EquivalenceReport equivalence_suite(const PairContext& ctx, bool audit_full = false);

/// {x : u(x) = 1}, ascending.
std::vector<int> kernel_of(const PairContext& ctx, const ElementFamily& u);

struct FurtherPropertiesReport {
  bool partial_rep = false;
  bool left_global_ok = false;    // xH <= Hx: sigma_x sigma_{x^{-1}} = 1 and sigma_x sigma_y = sigma_{xy}
  bool right_global_ok = false;   // Hx <= xH: mirrored
  bool normalizer_invertible = false;  // sigma_x invertible with inverse sigma_{x^{-1}}
  bool bi_invariance_ok = false;  // sigma_{hxk} = sigma_x as operators
  bool all_ok = false;
};

/// Consequences of the product relations for subnormal H (errors if H is not
/// subnormal).
FurtherPropertiesReport further_properties(const PairContext& ctx);

}  // namespace hecke

#endif
