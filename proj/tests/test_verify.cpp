// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include "crsym/construct.hpp"
#include "crsym/verify.hpp"
#include "oracles.hpp"

using namespace crsym;

TEST_SUITE("verify") {

TEST_CASE("rank 4 F_3 space report") {
  const CheckResult r = rank4_f3_report();
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.counts.at("common_isotropic_nonzero") == 22);
  CHECK(r.counts.at("A") == 220);
  CHECK(r.counts.at("B") == 22);
  CHECK(r.counts.at("group_order") == 55);
  CHECK(r.counts.at("hyperplanes_22_common_isotropic_census_70_10") == 66);
  CHECK(r.counts.at("hyperplanes_26_common_isotropic_census_76_4") == 55);
  CHECK(r.counts.at("radical_lines") == 121);
}

TEST_CASE("checks skip when hypotheses fail") {
  const FormSpace w = rank4_f3_space().space;
  const CheckResult iso = check_radical_isotropy(w);
  CHECK(iso.status == CheckStatus::Skipped);
  CHECK(iso.counts.at("hypothesis_q_gt_r") == 0);
  const CheckResult not_constant = check_common_radical(trace_space(3, 3).space);
  CHECK(not_constant.status == CheckStatus::Skipped);
  const CheckResult small_q = check_rank4_radical_intersections(w);
  CHECK(small_q.status == CheckStatus::Skipped);
}

TEST_CASE("checks pass on instances meeting their hypotheses") {
  const FormSpace odd = inflate(full_trace_space(7, 3), 5);
  const CheckResult cr = check_common_radical(odd);
  CHECK(cr.status == CheckStatus::Pass);
  CHECK(cr.counts.at("t") == 1);
  CHECK(cr.counts.at("common_isotropic_equals_radical") == 1);
  CHECK(check_radical_isotropy(odd).status == CheckStatus::Pass);
  CHECK(check_count_formula(odd).status == CheckStatus::Pass);
  CHECK(check_distinct_radical_construction(5, 3, 2).status == CheckStatus::Pass);
  const CheckResult r4 = check_rank4_radical_intersections(inflate(full_trace_space(5, 4), 5));
  CHECK(r4.status != CheckStatus::Fail);
}

TEST_CASE("failures carry a serialized witness") {
  const FormSpace h = hyperbolic_rank2_space(3, 3);
  const CheckResult r = check_construction("wrong_dim", h, 2, SearchMode::AllHyperbolic, 5);
  CHECK(r.status == CheckStatus::Fail);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].rfind("3 1 3 2\n", 0) == 0);
  const CheckResult p = check_partition_structure("wrong_t", spread(3, 1), 5, {{1, 4}});
  CHECK(p.status == CheckStatus::Fail);
  CHECK_FALSE(p.witnesses.empty());
}

TEST_CASE("dimension bounds") {
  CHECK(dimension_bound(3, 4, 2, SearchMode::AllHyperbolic)->value == 3);
  CHECK(dimension_bound(7, 5, 4, SearchMode::DistinctRadicals)->value == 3);
  CHECK(dimension_bound(5, 5, 4, SearchMode::Plain)->value == 4);
  CHECK(dimension_bound(5, 6, 4, SearchMode::Plain)->value == 5);
  CHECK(dimension_bound(3, 6, 3, SearchMode::Plain)->value == 3);
  CHECK(dimension_bound(3, 6, 4, SearchMode::AllPositive)->value == 4);
  CHECK_FALSE(dimension_bound(3, 5, 4, SearchMode::Plain).has_value());

  const CheckResult exact = check_dimension_bound(3, 2, 2, SearchMode::AllHyperbolic);
  CHECK(exact.status == CheckStatus::Pass);
  CHECK(exact.label == "exhaustive");
  CHECK(exact.counts.at("best_dim") == 1);
  BoundOptions o;
  o.exhaustive = false;
  o.budget = 5000;
  const CheckResult sampled = check_dimension_bound(5, 5, 4, SearchMode::Plain, o);
  CHECK(sampled.status == CheckStatus::Pass);
  CHECK(sampled.label == "instance-verified");
}

TEST_CASE("JSON shape") {
  const auto j = nlohmann::json::parse(check_results_json({check_count_formula(hyperbolic_rank2_space(3, 3))}));
  REQUIRE(j.is_array());
  for (const char* key : {"name", "params", "status", "witnesses", "counts", "notes", "label"})
    CHECK(j[0].contains(key));
  CHECK(j[0]["status"] == "pass");
  CHECK(error_code_of([] { (void)run_suite("nonsense"); }) == static_cast<int>(ErrorCode::InvalidArgument));
}

}  // TEST_SUITE
