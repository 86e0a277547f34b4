#ifndef HECKE_PRODUCT_LAW_HPP
#define HECKE_PRODUCT_LAW_HPP

#include <optional>
#include <vector>

#include "hecke/hecke_algebra.hpp"
#include "hecke/pair_analysis.hpp"

namespace hecke {

/// HxHyH as a disjoint union of double cosets: S_xy is the middle factor set
/// (one h in H per double coset HxhyH), double_cosets the block reps,
/// ascending.
struct TripleDecomposition {
  int x = 0;
  int y = 0;
  std::vector<int> s_xy;
  std::vector<int> double_cosets;
};

/// Rep-family route: S_xy = rep family for H/(H cap H^x H^{y^-1}). Requires H
/// subnormal (the quotient and the disjointness both need it); the result is
/// always cross-checked against the set-product route.
TripleDecomposition triple_decompose(const PairContext& ctx, int x, int y);

/// Oracle route valid for any pair: the set H x H y H computed elementwise
/// and partitioned into double cosets. s_xy holds one middle factor h per
/// block (minimal h with HxhyH = that block).
TripleDecomposition triple_decompose_bruteforce(const PairContext& ctx, int x, int y);

struct ProductFormulaReport {
  bool all_pass = false;
  int pairs_checked = 0;
  int pairs_failed = 0;
  // minimal rep pair where convolve(sigma_x, sigma_y) != average of sigma_{z_i}
  std::optional<std::pair<int, int>> first_failure;
};

/// averaged-product-law status over every double-coset rep pair (x, y): is
/// sigma_x * sigma_y the plain average of the sigma_z over the bruteforce
/// partition of HxHyH? Subnormal pairs must pass; for other pairs this is
/// survey data.
ProductFormulaReport product_formula_check(const PairContext& ctx);

/// triple-coset rep-family audit: |rep family| equals the bruteforce block count
/// for ALL (x, y) in G^2, not just reps. Requires subnormal H.
bool triple_decomposition_audit(const PairContext& ctx);

/// Canonical multiplication table of the Hecke algebra over the sigma basis:
/// table[i][j] = coefficients of sigma_{x_i} * sigma_{x_j} in the basis.
std::vector<std::vector<RationalVector>> structure_constants(const PairContext& ctx);

/// A finite-dimensional unital algebra given by structure constants; the
/// target type for universal_hom.
struct FiniteAlgebra {
  int dim = 0;
  RationalVector unit;                               // coordinates of 1
  std::vector<std::vector<RationalVector>> table;    // e_i e_j = table[i][j]
  // optional involution matrix (row-major dim x dim); empty if absent
  RationalMatrix star;

  RationalVector mul(const RationalVector& a, const RationalVector& b) const;
  RationalVector star_of(const RationalVector& a) const;
  bool associative_on_basis() const;
};

struct UniversalHomResult {
  bool ok = false;
  bool star_map = false;  // meaningful only when star data was supplied
  // basis images: phi(sigma at dc rep i) = images[i]
  std::vector<RationalVector> images;
  std::optional<std::pair<int, int>> violation;  // (x, y) where the relation fails
  std::string reason;
};

/// Universal property: checks tau(1) = 1 and the averaged product relation for every
/// rep pair, then returns the induced homomorphism on the sigma basis,
/// verified multiplicative on all basis pairs. When the target carries an
/// involution and tau(x^{-1}) = tau(x)^*, the map is certified a *-homomorphism.
/// Requires subnormal H.
UniversalHomResult universal_hom(const PairContext& ctx, const FiniteAlgebra& target,
                                 const std::vector<RationalVector>& tau);

struct PresentationReport {
  bool unit_relation = true;        // sigma_1 = 1
  bool product_relations = true;    // averaged product relations hold for sigma
  bool basis_free = true;           // dim = #double cosets (no extra linear relations)
  bool relations_reproduce_table = true;  // structure constants from relations == convolution
  bool universal_roundtrip = true;  // universal_hom with tau = sigma is the identity
  bool all_ok = false;
};

/// Soundness half of the generators-and-relations presentation plus round-trip universality probes.
PresentationReport presentation_check(const PairContext& ctx);

}  // namespace hecke

#endif
