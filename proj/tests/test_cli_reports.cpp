#include <doctest.h>

#include "hecke/analysis.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

const char* kD4Spec = R"({
  "kind": "builtin", "family": "dihedral", "param": 4,
  "subgroup": {"generators": [4]}
})";

const char* kS3Spec = R"({
  "kind": "builtin", "family": "symmetric", "param": 3,
  "subgroup": {"generators": [2]}
})";

}  // namespace

TEST_CASE("group spec parsing") {
  SUBCASE("builtin") {
    GroupSpec spec = parse_group_spec(kD4Spec);
    CHECK(spec.group.order() == 8);
    CHECK(spec.subgroup_elements == std::vector<int>{0, 4});
    CHECK(spec.description == "dihedral(4)");
  }
  SUBCASE("table with explicit subgroup elements") {
    GroupSpec spec = parse_group_spec(R"({
      "kind": "table", "order": 3,
      "mul": [[0,1,2],[1,2,0],[2,0,1]],
      "subgroup": {"elements": [0]}
    })");
    CHECK(spec.group.order() == 3);
  }
  SUBCASE("perm with N chain") {
    GroupSpec spec = parse_group_spec(R"({
      "kind": "perm", "degree": 3,
      "generators": [[1,0,2],[1,2,0]],
      "subgroup": {"generators": [0]},
      "N": {"generators": [3]}
    })");
    CHECK(spec.group.order() == 6);
    REQUIRE(spec.n_generators.has_value());
  }
  SUBCASE("unreadable specs are parse errors") {
    CHECK_THROWS_AS(parse_group_spec("not json"), ParseError);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "builtin"})"), ParseError);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "builtin", "family": "cyclic",
      "param": 4})"), ParseError);  // no subgroup
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "nonsense",
      "subgroup": {"elements": [0]}})"), ParseError);
  }
  SUBCASE("well-formed but invalid specs are validation errors") {
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "builtin", "family": "monster",
      "param": 1, "subgroup": {"elements": [0]}})"), ValidationError);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "table", "order": 2,
      "mul": [[0,1],[1,1]], "subgroup": {"elements":[0]}})"), ValidationError);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "builtin", "family": "cyclic",
      "param": 4, "subgroup": {"elements": [0, 1]}})"), ValidationError);  // not closed
    CHECK_THROWS_AS(parse_group_spec(R"({"kind": "builtin", "family": "cyclic",
      "param": 0, "subgroup": {"elements": [0]}})"), ValidationError);  // n < 1
  }
}

TEST_CASE("analyze pipeline") {
  SUBCASE("D4 reflection pair: everything verified") {
    json r = analyze_to_json(parse_group_spec(kD4Spec), {});
    CHECK(r["pair"]["is_protonormal"] == true);
    CHECK(r["pair"]["is_subnormal"] == true);
    CHECK(r["pair"]["is_normal"] == false);
    CHECK(r["pair"]["subnormal_witness_N"] == json({0, 2, 4, 6}));
    CHECK(r["partial_rep"]["sigma_is_partial_rep"] == true);
    CHECK(r["partial_rep"]["equivalence_holds"] == true);
    CHECK(r["partial_rep"]["kernel_is_H"] == true);
    CHECK(r["product_formula"]["all_pass"] == true);
    CHECK(r["presentation"]["all_ok"] == true);
    CHECK(r["crossed_product"]["tpa_all_passed"] == true);
    CHECK(r["crossed_product"]["phi_isomorphism"]["all_ok"] == true);
    CHECK(r["crossed_product"]["crossed_dim"] == 3);
    CHECK(r["contradictions"].empty());
    CHECK(!r.contains("timings"));
  }
  SUBCASE("S3 negative control") {
    json r = analyze_to_json(parse_group_spec(kS3Spec), {});
    CHECK(r["pair"]["is_protonormal"] == false);
    CHECK(!r["pair"]["protonormal_failure"].is_null());
    CHECK(r["partial_rep"]["sigma_is_partial_rep"] == false);
    CHECK(r["partial_rep"]["equivalence_holds"] == true);
    CHECK(!r["partial_rep"]["weak_identity_failure_x"].is_null());
    CHECK(r["presentation"].is_null());
    CHECK(r["crossed_product"].is_null());
    CHECK(r["contradictions"].empty());
  }
  SUBCASE("cyclic(6) mod 2-element subgroup: the quotient group algebra") {
    json r = analyze_to_json(parse_group_spec(R"({
      "kind": "builtin", "family": "cyclic", "param": 6,
      "subgroup": {"elements": [0, 3]}
    })"), {});
    CHECK(r["pair"]["is_normal"] == true);
    CHECK(r["subgroup"]["double_cosets"] == 3);
    CHECK(r["crossed_product"]["tpa_all_passed"] == true);
    CHECK(r["contradictions"].empty());
  }
  SUBCASE("explicit N overrides the closure") {
    json r = analyze_to_json(parse_group_spec(R"({
      "kind": "builtin", "family": "dihedral", "param": 4,
      "subgroup": {"generators": [4]},
      "N": {"generators": [2, 4]}
    })"), {});
    CHECK(r["crossed_product"]["N"] == json({0, 2, 4, 6}));
    CHECK(r["contradictions"].empty());
  }
  SUBCASE("audit-full and timings flags") {
    AnalyzeOptions opts;
    opts.audit_full = true;
    opts.include_timings = true;
    opts.seed = 42;
    json r = analyze_to_json(parse_group_spec(kD4Spec), opts);
    CHECK(r["seed"] == 42);
    CHECK(r.contains("timings"));
    CHECK(r["contradictions"].empty());
  }
}

TEST_CASE("reports are byte-stable") {
  GroupSpec spec = parse_group_spec(kD4Spec);
  std::string a = analyze_to_json(spec, {}).dump(2);
  std::string b = analyze_to_json(parse_group_spec(kD4Spec), {}).dump(2);
  CHECK(a == b);
}

TEST_CASE("text rendering mentions the essentials") {
  json r = analyze_to_json(parse_group_spec(kD4Spec), {});
  std::string text = render_analysis_text(r);
  CHECK(text.find("dihedral(4)") != std::string::npos);
  CHECK(text.find("product formula: holds") != std::string::npos);
  CHECK(text.find("no contradictions") != std::string::npos);

  json nr = analyze_to_json(parse_group_spec(kS3Spec), {});
  std::string ntext = render_analysis_text(nr);
  CHECK(ntext.find("partial-rep axiom failure") != std::string::npos);
}

TEST_CASE("corpus summary") {
  CorpusOptions opts;
  opts.max_order = 8;
  json s = corpus_to_json(opts);
  CHECK(s["all_equivalences_hold"] == true);
  CHECK(s["all_subnormal_products_hold"] == true);
  int pairs = s["totals"]["pairs"].get<int>();
  CHECK(pairs > 50);
  CHECK(s["totals"]["protonormal"].get<int >() >= s["totals"]["subnormal"].get<int>());
  CHECK(s["totals"]["subnormal"].get<int>() >= s["totals"]["normal"].get<int>());
  std::string text = render_corpus_text(s);
  CHECK(text.find("equivalence confirmed") != std::string::npos);

  // deterministic
  CHECK(corpus_to_json(opts).dump() == s.dump());
}

TEST_CASE("HECKE_MAX_ORDER overrides the closure cap") {
  setenv("HECKE_MAX_ORDER", "3", 1);
  CHECK(max_group_order() == 3);
  // a 4-cycle closure now exceeds the cap
  CHECK_THROWS_AS(permutation_group(4, {{1, 2, 3, 0}}), ValidationError);
  unsetenv("HECKE_MAX_ORDER");
  CHECK(max_group_order() == 20000);
  CHECK(permutation_group(4, {{1, 2, 3, 0}}).order() == 4);
}

TEST_CASE("builtin corpus composition") {
  auto corpus = builtin_corpus(24);
  bool has_s4 = false, has_q8 = false, has_affine5 = false, has_d12 = false;
  for (const auto& cg : corpus) {
    CHECK(cg.group.order() <= 24);
    if (cg.name == "symmetric(4)") has_s4 = true;
    if (cg.name == "quaternion(8)") has_q8 = true;
    if (cg.name == "affine_mod(5)") has_affine5 = true;
    if (cg.name == "dihedral(12)") has_d12 = true;
  }
  CHECK(has_s4);
  CHECK(has_q8);
  CHECK(has_affine5);
  CHECK(has_d12);
}
