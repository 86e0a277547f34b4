#ifndef HECKE_ANALYSIS_HPP
#define HECKE_ANALYSIS_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hecke/group_spec.hpp"

namespace hecke {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

struct AnalyzeOptions {
  bool audit_full = false;      // run the O(|G|^2) quantifier audits
  bool include_timings = false; // timings break byte-stability, so opt-in
  std::uint64_t seed = 0;
};

/// Full pipeline for one pair: classification, partial-rep equivalence,
/// product-formula survey and (for subnormal pairs) presentation and crossed
/// product verification. The JSON is byte-stable for fixed inputs unless
/// timings are requested. Theorem-level failures are collected under
/// "contradictions" (they indicate toolkit bugs, never expected data).
nlohmann::json analyze_to_json(const GroupSpec& spec, const AnalyzeOptions& opts);

/// Human-readable rendering derived from the JSON report.
std::string render_analysis_text(const nlohmann::json& report);

struct CorpusOptions {
  int max_order = 8;
  bool audit_full = false;
  bool with_crossed = false;  // also run the crossed-product pipeline per subnormal pair
};

/// Sweeps every subgroup of every builtin group up to max_order; tabulates
/// classification counts, the protonormal/partial-rep equivalence and product-formula
/// status.
nlohmann::json corpus_to_json(const CorpusOptions& opts);
std::string render_corpus_text(const nlohmann::json& summary);

}  // namespace hecke

#endif
