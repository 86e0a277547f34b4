#ifndef HECKE_MODULE_SPACE_HPP
#define HECKE_MODULE_SPACE_HPP

#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/pair_context.hpp"

namespace hecke {

/// Element of the coset module F(G/H): dense exact coordinates over the
/// right-coset basis delta_{Ht}, t the block representatives in block order.
struct ModuleVector {
  const PairContext* ctx = nullptr;
  RationalVector coeffs;

  static ModuleVector zero(const PairContext& c) {
    return {&c, RationalVector(static_cast<size_t>(c.dim()))};
  }
  /// delta_{Hg} for any g (looked up through its coset block).
  static ModuleVector basis(const PairContext& c, int g);

  bool operator==(const ModuleVector& o) const { return coeffs == o.coeffs; }
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator*(const Rational& s) const;
};

/// Linear operator on F(G/H) as an exact [G:H] x [G:H] matrix; column j is
/// the image of the basis vector for right-coset block j.
struct ModuleOperator {
  const PairContext* ctx = nullptr;
  RationalMatrix m;

  static ModuleOperator zero(const PairContext& c) { return {&c, mat_zero(c.dim(), c.dim())}; }
  static ModuleOperator identity(const PairContext& c) { return {&c, mat_identity(c.dim())}; }

  bool operator==(const ModuleOperator& o) const { return m == o.m; }
  ModuleOperator operator*(const ModuleOperator& o) const { return {ctx, mat_mul(m, o.m)}; }
  ModuleVector operator()(const ModuleVector& v) const { return {ctx, mat_apply(m, v.coeffs)}; }
  ModuleOperator operator+(const ModuleOperator& o) const;
  ModuleOperator operator-(const ModuleOperator& o) const;
  ModuleOperator operator*(const Rational& s) const;
  bool is_identity() const { return m == mat_identity(ctx->dim()); }
};

/// The Hecke operator sigma_x: delta_{Ht} -> (1/|S_x|) sum_{h in S_x} delta_{Hxht},
/// S_x a rep family for H/(H cap H^x).
ModuleOperator sigma_op(const PairContext& ctx, int x);

/// Same operator built from an explicit rep family (validated); rep-choice
/// independence is a theorem the tests exercise through this overload.
ModuleOperator sigma_op_with_family(const PairContext& ctx, int x,
                                    const std::vector<int>& family);

/// Alternate form: averages over T_x, a rep family for H^xH / H^x. Requires
/// H^x and H to commute (otherwise that coset space does not exist).
ModuleOperator sigma_op_alt(const PairContext& ctx, int x);

/// Right multiplication rho(g): delta_{Ht} -> delta_{Htg}.
ModuleOperator rho_op(const PairContext& ctx, int g);

/// <<delta_{Ht}, delta_{Hs}>> = Delta(s) if Ht = Hs else 0, extended
/// bilinearly (the conjugation on rationals is the identity).
Rational hermitian_form(const ModuleVector& xi, const ModuleVector& eta);

/// Average (1/|S|) sum of basis vectors over the cosets of the given
/// elements. Elements mapping to the same coset are an error, as is an empty set.
ModuleVector mu_average(const PairContext& ctx, const std::vector<int>& coset_elements);

/// q_K = mu(HK/H) for a subgroup K commuting with H (checked).
ModuleVector q_element(const PairContext& ctx, const SubgroupRef& K);

/// Q_K(delta_{Hx}) = rho_x(q_K); idempotence is asserted at construction.
ModuleOperator Q_operator(const PairContext& ctx, const SubgroupRef& K);

/// Linearized quotient map F(G/H) -> F(G/HK) for commuting H, K. Construction
/// asserts pi_tilde o Q_K = pi_tilde and that pi_tilde restricted to
/// range(Q_K) has full rank [G:HK].
struct PiTilde {
  SubgroupRef hk;        // the subgroup HK
  CosetSpace hk_cosets;  // right cosets of HK in G
  RationalMatrix m;      // [G:HK] x [G:H]

  RationalVector apply(const ModuleVector& v) const { return mat_apply(m, v.coeffs); }
};
PiTilde pi_tilde(const PairContext& ctx, const SubgroupRef& K);

}  // namespace hecke

#endif
