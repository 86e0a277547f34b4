#include "hecke/analysis.hpp"

#include <chrono>
#include <sstream>

#include "hecke/crossed_product.hpp"
#include "hecke/partial_rep.hpp"

namespace hecke {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json pair_report_json(const PairReport& rep) {
  json out;
  out["is_hecke"] = rep.is_hecke;
  json r_map = json::object(), d_map = json::object();
  for (size_t i = 0; i < rep.hecke.dc_reps.size(); ++i) {
    std::string key = std::to_string(rep.hecke.dc_reps[i]);
    r_map[key] = rep.hecke.R[i];
    d_map[key] = rep.hecke.delta[i].str();
  }
  out["R"] = r_map;
  out["delta"] = d_map;
  out["is_normal"] = rep.is_normal;
  out["is_protonormal"] = rep.is_protonormal;
  out["is_subnormal"] = rep.is_subnormal;
  out["subnormal_witness_N"] =
      rep.is_subnormal ? json(rep.subnorm.closure.elements()) : json(nullptr);
  if (rep.proto.failure_x) {
    out["protonormal_failure"] = {
        {"x", *rep.proto.failure_x},
        {"product_pair", {rep.proto.failure_pair->first, rep.proto.failure_pair->second}}};
  } else {
    out["protonormal_failure"] = nullptr;
  }
  out["subnormal_failure"] =
      rep.subnorm.failure_triple
          ? json({(*rep.subnorm.failure_triple)[0], (*rep.subnorm.failure_triple)[1],
                  (*rep.subnorm.failure_triple)[2]})
          : json(nullptr);
  return out;
}

json partial_rep_json(const PairContext& ctx, const EquivalenceReport& eq,
                      std::vector<std::string>* contradictions) {
  json out;
  out["protonormal"] = eq.protonormal;
  out["sigma_is_partial_rep"] = eq.sigma_partial_rep;
  out["weak_identity"] = eq.weak_identity;
  out["equivalence_holds"] = eq.all_agree;
  out["axiom_failure"] = eq.rep_check.left_absorption.witness
                             ? json({eq.rep_check.left_absorption.witness->first,
                                     eq.rep_check.left_absorption.witness->second})
                             : (eq.rep_check.right_absorption.witness
                                    ? json({eq.rep_check.right_absorption.witness->first,
                                            eq.rep_check.right_absorption.witness->second})
                                    : json(nullptr));
  out["weak_identity_failure_x"] =
      eq.weak_identity_failure_x ? json(*eq.weak_identity_failure_x) : json(nullptr);
  if (!eq.all_agree)
    contradictions->push_back("protonormal/partial-rep equivalence failed on this pair");

  ElementFamily u = sigma_family(ctx);
  bool kernel_ok = (kernel_of(ctx, u) == ctx.subgroup().elements());
  out["kernel_is_H"] = kernel_ok;
  if (!kernel_ok) contradictions->push_back("kernel of sigma differs from H");

  if (eq.sigma_partial_rep) {
    CommutationCheck comm = check_commutation(ctx, u);
    out["commutation_relation"] = comm.passed;
    if (!comm.passed) contradictions->push_back("commutation relation failed for sigma");
  } else {
    out["commutation_relation"] = nullptr;
  }
  return out;
}

json product_formula_json(const ProductFormulaReport& pf, bool subnormal,
                          std::vector<std::string>* contradictions) {
  json out;
  out["all_pass"] = pf.all_pass;
  out["pairs_checked"] = pf.pairs_checked;
  out["pairs_failed"] = pf.pairs_failed;
  out["first_failure"] = pf.first_failure
                             ? json({pf.first_failure->first, pf.first_failure->second})
                             : json(nullptr);
  if (subnormal && !pf.all_pass)
    contradictions->push_back("averaged product formula failed on a subnormal pair");
  return out;
}

json crossed_product_json(const PairContext& ctx, const SubgroupRef& N,
                          std::vector<std::string>* contradictions) {
  json out;
  TwistedActionData action = build_action(ctx, N);
  out["N"] = N.elements();
  out["quotient_order"] = action.quotient_order();
  out["fnh_dim"] = action.fnh_dim();

  TpaReport tpa = check_tpa_axioms(action);
  json axioms;
  axioms["full_unit_ideal"] = tpa.full_unit_ideal.passed;
  axioms["domain_match"] = tpa.domain_match.passed;
  axioms["composition"] = tpa.composition.passed;
  axioms["unit_cocycle"] = tpa.unit_cocycle.passed;
  axioms["cocycle_identity"] = tpa.cocycle_identity.passed;
  axioms["star_ideals"] = tpa.star_ideals.passed;
  axioms["star_theta"] = tpa.star_theta.passed;
  axioms["star_cocycle"] = tpa.star_cocycle.passed;
  out["tpa_axioms"] = axioms;
  out["tpa_all_passed"] = tpa.all_passed;
  if (!tpa.all_passed)
    contradictions->push_back("a twisted-partial-action axiom failed");

  CrossedAlgebra cp = crossed_product(action);
  out["crossed_dim"] = cp.dim();

  PhiReport phi = phi_isomorphism(action, cp);
  out["phi_isomorphism"] = {{"dim_matches", phi.dim_matches},
                            {"unital", phi.phi_unital},
                            {"multiplicative", phi.phi_multiplicative},
                            {"psi_ok", phi.psi_ok},
                            {"phi_psi_identity", phi.phi_psi_identity},
                            {"psi_phi_identity", phi.psi_phi_identity},
                            {"all_ok", phi.all_ok}};
  if (!phi.all_ok) contradictions->push_back("Phi/Psi isomorphism failed");

  UntwistResult untwist = untwist_detect(action);
  out["untwisted"] = untwist.untwistable;
  out["homomorphic_section"] = untwist.homomorphic_section
                                   ? json(*untwist.homomorphic_section)
                                   : json(nullptr);
  return out;
}

}  // namespace

json analyze_to_json(const GroupSpec& spec, const AnalyzeOptions& opts) {
  auto t_start = Clock::now();
  json report;
  report["schema_version"] = kSchemaVersion;
  report["toolkit_version"] = kToolkitVersion;
  report["seed"] = opts.seed;

  const GroupTable& G = spec.group;
  SubgroupRef H(G, spec.subgroup_elements);
  PairContext ctx(G, H);

  report["group"] = {{"order", G.order()}, {"description", spec.description}};
  report["subgroup"] = {{"order", H.size()},
                        {"elements", H.elements()},
                        {"index", ctx.dim()},
                        {"double_cosets", ctx.num_double_cosets()}};

  std::vector<std::string> contradictions;
  json timings = json::object();

  auto t0 = Clock::now();
  PairReport pair = analyze_pair(ctx);
  report["pair"] = pair_report_json(pair);
  timings["pair_analysis_ms"] = ms_since(t0);

  if (opts.audit_full && !protonormal_reduction_sound(ctx))
    contradictions.push_back("protonormality rep-reduction is unsound on this pair");
  if (opts.audit_full && pair.is_subnormal && !triple_decomposition_audit(ctx))
    contradictions.push_back("triple-coset rep-family size != block count for some (x,y)");
  if (pair.is_subnormal && !subnormal_consequences_hold(ctx))
    contradictions.push_back("subnormality consequences (H cap H^x <| H, H <| H H^x) failed");

  t0 = Clock::now();
  EquivalenceReport eq = equivalence_suite(ctx, opts.audit_full);
  report["partial_rep"] = partial_rep_json(ctx, eq, &contradictions);
  timings["partial_rep_ms"] = ms_since(t0);

  t0 = Clock::now();
  ProductFormulaReport pf = product_formula_check(ctx);
  report["product_formula"] = product_formula_json(pf, pair.is_subnormal, &contradictions);
  timings["product_formula_ms"] = ms_since(t0);

  if (pair.is_subnormal) {
    t0 = Clock::now();
    PresentationReport pres = presentation_check(ctx);
    report["presentation"] = {{"unit_relation", pres.unit_relation},
                              {"product_relations", pres.product_relations},
                              {"basis_free", pres.basis_free},
                              {"relations_reproduce_table", pres.relations_reproduce_table},
                              {"universal_roundtrip", pres.universal_roundtrip},
                              {"all_ok", pres.all_ok}};
    if (!pres.all_ok) contradictions.push_back("presentation check failed");
    timings["presentation_ms"] = ms_since(t0);

    t0 = Clock::now();
    SubgroupRef N = spec.n_generators
                        ? generate_subgroup(G, *spec.n_generators)
                        : pair.subnorm.closure;
    report["crossed_product"] = crossed_product_json(ctx, N, &contradictions);
    timings["crossed_product_ms"] = ms_since(t0);
  } else {
    report["presentation"] = nullptr;
    report["crossed_product"] = nullptr;
  }

  report["contradictions"] = contradictions;
  if (opts.include_timings) {
    timings["total_ms"] = ms_since(t_start);
    report["timings"] = timings;
  }
  return report;
}

std::string render_analysis_text(const json& r) {
  std::ostringstream os;
  os << std::boolalpha;
  os << "hecke-toolkit " << r["toolkit_version"].get<std::string>() << " analysis\n";
  os << "group: " << r["group"]["description"].get<std::string>() << " (order "
     << r["group"]["order"].get<int>() << ")\n";
  os << "subgroup: order " << r["subgroup"]["order"].get<int>() << ", index "
     << r["subgroup"]["index"].get<int>() << ", double cosets "
     << r["subgroup"]["double_cosets"].get<int>() << "\n";
  const auto& p = r["pair"];
  os << "pair: normal=" << p["is_normal"].get<bool>()
     << " subnormal=" << p["is_subnormal"].get<bool>()
     << " protonormal=" << p["is_protonormal"].get<bool>() << "\n";
  os << "R: ";
  for (auto it = p["R"].begin(); it != p["R"].end(); ++it)
    os << "R(" << it.key() << ")=" << it.value().get<int>() << " ";
  os << "\n";
  const auto& pr = r["partial_rep"];
  os << "sigma partial representation: " << pr["sigma_is_partial_rep"].get<bool>()
     << " (protonormal: " << pr["protonormal"].get<bool>()
     << ", weak identity: " << pr["weak_identity"].get<bool>()
     << ", equivalence holds: " << pr["equivalence_holds"].get<bool>() << ")\n";
  if (!pr["axiom_failure"].is_null())
    os << "  partial-rep axiom failure at (x,y) = (" << pr["axiom_failure"][0].get<int>()
       << "," << pr["axiom_failure"][1].get<int>() << ")\n";
  const auto& pf = r["product_formula"];
  os << "product formula: " << (pf["all_pass"].get<bool>() ? "holds" : "fails") << " on "
     << pf["pairs_checked"].get<int>() << " rep pairs";
  if (pf["pairs_failed"].get<int>() > 0)
    os << " (" << pf["pairs_failed"].get<int>() << " failures)";
  os << "\n";
  if (!r["presentation"].is_null())
    os << "presentation: "
       << (r["presentation"]["all_ok"].get<bool>() ? "verified" : "FAILED") << "\n";
  if (!r["crossed_product"].is_null()) {
    const auto& cp = r["crossed_product"];
    os << "crossed product: |N|=" << cp["N"].size() << " quotient=" << cp["quotient_order"].get<int>()
       << " dim=" << cp["crossed_dim"].get<int>()
       << " tpa=" << (cp["tpa_all_passed"].get<bool>() ? "pass" : "FAIL")
       << " phi=" << (cp["phi_isomorphism"]["all_ok"].get<bool>() ? "pass" : "FAIL")
       << " untwisted=" << cp["untwisted"].get<bool>() << "\n";
  }
  const auto& contra = r["contradictions"];
  if (!contra.empty()) {
    os << "THEOREM CONTRADICTIONS (toolkit bug):\n";
    for (const auto& c : contra) os << "  - " << c.get<std::string>() << "\n";
  } else {
    os << "no contradictions: every checked theorem holds on this pair\n";
  }
  return os.str();
}

json corpus_to_json(const CorpusOptions& opts) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["toolkit_version"] = kToolkitVersion;
  out["max_order"] = opts.max_order;

  int pairs = 0, n_normal = 0, n_subnormal = 0, n_protonormal = 0;
  int equivalence_confirmed = 0, product_formula_pass = 0, product_formula_fail = 0;
  int subnormal_product_failures = 0, crossed_checked = 0, crossed_ok = 0;
  json groups = json::array();
  // product-formula status per normality class: the empirical side of the
  // open question about which Hecke pairs satisfy the averaged product law
  const char* class_names[4] = {"normal", "subnormal_not_normal",
                                "protonormal_not_subnormal", "not_protonormal"};
  int class_pairs[4] = {0, 0, 0, 0}, class_pf_pass[4] = {0, 0, 0, 0};

  for (const CorpusGroup& cg : builtin_corpus(opts.max_order)) {
    json grec;
    grec["name"] = cg.name;
    grec["order"] = cg.group.order();
    int local_pairs = 0;
    json anomalies = json::array();
    json formula_failures = json::array();  // survey data on non-subnormal pairs
    for (const SubgroupRef& H : all_subgroups(cg.group)) {
      PairContext ctx(cg.group, H);
      PairReport pair = analyze_pair(ctx);
      EquivalenceReport eq = equivalence_suite(ctx, opts.audit_full);
      ProductFormulaReport pf = product_formula_check(ctx);
      if (opts.audit_full && !protonormal_reduction_sound(ctx))
        anomalies.push_back({{"subgroup", H.elements()}, {"issue", "proto_reduction"}});
      ++pairs;
      ++local_pairs;
      if (pair.is_normal) ++n_normal;
      if (pair.is_subnormal) ++n_subnormal;
      if (pair.is_protonormal) ++n_protonormal;
      if (eq.all_agree) ++equivalence_confirmed;
      else
        anomalies.push_back({{"subgroup", H.elements()}, {"issue", "equivalence"}});
      if (pf.all_pass) ++product_formula_pass;
      else {
        ++product_formula_fail;
        if (pair.is_subnormal) {
          ++subnormal_product_failures;
          anomalies.push_back({{"subgroup", H.elements()}, {"issue", "product_formula"}});
        } else {
          formula_failures.push_back(
              {{"subgroup", H.elements()},
               {"first_failure", {pf.first_failure->first, pf.first_failure->second}},
               {"pairs_failed", pf.pairs_failed}});
        }
      }
      int cls = pair.is_normal ? 0
                : pair.is_subnormal ? 1
                : pair.is_protonormal ? 2
                : 3;
      ++class_pairs[cls];
      if (pf.all_pass) ++class_pf_pass[cls];
      if (opts.with_crossed && pair.is_subnormal) {
        ++crossed_checked;
        TwistedActionData action = build_action(ctx, pair.subnorm.closure);
        TpaReport tpa = check_tpa_axioms(action);
        CrossedAlgebra cp = crossed_product(action);
        PhiReport phi = phi_isomorphism(action, cp);
        if (tpa.all_passed && phi.all_ok) ++crossed_ok;
        else
          anomalies.push_back({{"subgroup", H.elements()}, {"issue", "crossed_product"}});
      }
    }
    grec["pairs"] = local_pairs;
    grec["anomalies"] = anomalies;
    grec["product_formula_failures"] = formula_failures;
    groups.push_back(grec);
  }

  out["groups"] = groups;
  json classes = json::object();
  for (int c = 0; c < 4; ++c)
    classes[class_names[c]] = {{"pairs", class_pairs[c]},
                               {"product_formula_pass", class_pf_pass[c]},
                               {"product_formula_fail", class_pairs[c] - class_pf_pass[c]}};
  out["classes"] = classes;
  out["totals"] = {{"pairs", pairs},
                   {"normal", n_normal},
                   {"subnormal", n_subnormal},
                   {"protonormal", n_protonormal},
                   {"equivalence_confirmed", equivalence_confirmed},
                   {"product_formula_pass", product_formula_pass},
                   {"product_formula_fail", product_formula_fail},
                   {"subnormal_product_failures", subnormal_product_failures},
                   {"crossed_checked", crossed_checked},
                   {"crossed_ok", crossed_ok}};
  out["all_equivalences_hold"] = (equivalence_confirmed == pairs);
  out["all_subnormal_products_hold"] = (subnormal_product_failures == 0);
  return out;
}

std::string render_corpus_text(const json& s) {
  std::ostringstream os;
  const auto& t = s["totals"];
  os << "corpus sweep up to order " << s["max_order"].get<int>() << ": "
     << t["pairs"].get<int>() << " pairs over " << s["groups"].size() << " groups\n";
  os << "  normal " << t["normal"].get<int>() << " | subnormal " << t["subnormal"].get<int>()
     << " | protonormal " << t["protonormal"].get<int>() << "\n";
  os << "  protonormal/partial-rep equivalence confirmed on " << t["equivalence_confirmed"].get<int>()
     << "/" << t["pairs"].get<int>() << " pairs\n";
  os << "  product formula holds on " << t["product_formula_pass"].get<int>() << " pairs, fails on "
     << t["product_formula_fail"].get<int>() << " (subnormal failures: "
     << t["subnormal_product_failures"].get<int>() << ")\n";
  os << "  product formula by class:\n";
  for (auto it = s["classes"].begin(); it != s["classes"].end(); ++it)
    os << "    " << it.key() << ": " << it.value()["product_formula_pass"].get<int>() << "/"
       << it.value()["pairs"].get<int>() << " pass\n";
  if (t["crossed_checked"].get<int>() > 0)
    os << "  crossed product verified on " << t["crossed_ok"].get<int>() << "/"
       << t["crossed_checked"].get<int>() << " subnormal pairs\n";
  for (const auto& g : s["groups"])
    if (!g["anomalies"].empty())
      os << "  ANOMALY in " << g["name"].get<std::string>() << ": "
         << g["anomalies"].dump() << "\n";
  return os.str();
}

}  // namespace hecke
