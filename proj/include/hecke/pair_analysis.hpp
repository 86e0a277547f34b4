#ifndef HECKE_PAIR_ANALYSIS_HPP
#define HECKE_PAIR_ANALYSIS_HPP

#include <array>
#include <optional>
#include <vector>

#include "hecke/pair_context.hpp"

namespace hecke {

struct HeckeData {
  std::vector<int> dc_reps;      // double-coset representatives, ascending
  std::vector<int> R;            // R(x) per rep
  std::vector<Rational> delta;   // Delta(x) per rep
};

/// R and Delta per double coset. Every finite pair is a Hecke pair.
HeckeData hecke_data(const PairContext& ctx);

struct ProtonormalResult {
  bool protonormal = false;
  // minimal x with H^x H != H H^x, plus the minimal offending product pair
  std::optional<int> failure_x;
  std::optional<std::pair<int, int>> failure_pair;
};

/// H^x commutes with H for every x; quantified over double-coset reps
/// (protonormality at x depends only on HxH; the reduction is audited
/// separately by protonormal_reduction_sound).
ProtonormalResult is_protonormal(const PairContext& ctx);

/// Audit: the rep-quantified predicate agrees with the all-of-G predicate.
bool protonormal_reduction_sound(const PairContext& ctx);

struct SubnormalResult {
  bool subnormal = false;
  SubgroupRef closure;  // normal closure N of H; H <| N <| G iff subnormal
  // on failure: minimal (x, h, k) with (xhx^{-1}) k (xhx^{-1})^{-1} outside H
  std::optional<std::array<int, 3>> failure_triple;
};

/// H is (2-)subnormal iff H is normal in its normal closure N.
SubnormalResult is_subnormal(const PairContext& ctx);

/// Consequences of subnormality: for all x, H cap H^x <| H and H <| H H^x.
bool subnormal_consequences_hold(const PairContext& ctx);

struct PairReport {
  bool is_hecke;
  HeckeData hecke;
  bool is_normal;
  bool is_protonormal;
  bool is_subnormal;
  ProtonormalResult proto;
  SubnormalResult subnorm;
};

PairReport analyze_pair(const PairContext& ctx);

}  // namespace hecke

#endif
