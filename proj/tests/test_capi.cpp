// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include <json.hpp>

#include "crsym/crsym.h"

TEST_CASE("version and error strings") {
  CHECK(std::strlen(crsym_version()) > 0);
  CHECK(std::string(crsym_modulus_rule()).find("lexmin") != std::string::npos);
  CHECK(std::string(crsym_status_name(CRSYM_ERR_NOT_SYMMETRIC)) == "NotSymmetric");
  CHECK(std::string(crsym_status_name(CRSYM_OK)) == "ok");
}

TEST_CASE("fields") {
  crsym_field* f = nullptr;
  REQUIRE(crsym_field_parse("3^2", &f) == CRSYM_OK);
  CHECK(crsym_field_order(f) == 9);
  std::uint32_t out = 0;
  CHECK(crsym_field_arith(f, CRSYM_OP_MUL, 3, 3, &out) == CRSYM_OK);
  CHECK(out == 2);  // x^2 = -1 in F_3[x]/(x^2 + 1)
  CHECK(crsym_field_arith(f, CRSYM_OP_INV, 0, 0, &out) == CRSYM_ERR_DIVISION_BY_ZERO);
  CHECK(std::strlen(crsym_last_error()) > 0);
  CHECK(crsym_field_arith(f, CRSYM_OP_ADD, 9, 0, &out) == CRSYM_ERR_INVALID_ARGUMENT);
  char* js = nullptr;
  REQUIRE(crsym_field_info_json(f, &js) == CRSYM_OK);
  CHECK(nlohmann::json::parse(js)["modulus"] == nlohmann::json{1, 0, 1});
  crsym_string_free(js);
  crsym_field_destroy(f);

  crsym_field* bad = nullptr;
  CHECK(crsym_field_parse("6", &bad) == CRSYM_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
}

TEST_CASE("construct, format, parse, census") {
  crsym_construct_params p{3, 4, 0, 0};
  crsym_formspace* m = nullptr;
  REQUIRE(crsym_construct_space("hyperbolic", &p, &m) == CRSYM_OK);
  CHECK(crsym_formspace_dim(m) == 3);
  CHECK(crsym_formspace_n(m) == 4);

  char* text = nullptr;
  REQUIRE(crsym_formspace_format(m, &text) == CRSYM_OK);
  crsym_formspace* back = nullptr;
  REQUIRE(crsym_formspace_parse(text, &back) == CRSYM_OK);
  char* text2 = nullptr;
  REQUIRE(crsym_formspace_format(back, &text2) == CRSYM_OK);
  CHECK(std::string(text) == std::string(text2));
  crsym_string_free(text);
  crsym_string_free(text2);

  char* js = nullptr;
  int agreement = 0;
  REQUIRE(crsym_census_json(back, &js, &agreement) == CRSYM_OK);
  const auto j = nlohmann::json::parse(js);
  CHECK(agreement == 1);
  CHECK(j["A"] == 26);
  CHECK(j["B"] == 0);
  crsym_string_free(js);
  crsym_formspace_destroy(back);
  crsym_formspace_destroy(m);

  crsym_formspace* none = nullptr;
  CHECK(crsym_construct_space("nonsense", &p, &none) == CRSYM_ERR_INVALID_ARGUMENT);
  CHECK(crsym_formspace_parse("3 1 2 1\n0 1\n0 1\n2 0\n", &none) == CRSYM_ERR_NOT_SYMMETRIC);
  CHECK(crsym_formspace_load("/nonexistent/file", &none) == CRSYM_ERR_IO);
  crsym_construct_params small{3, 3, 3, 0};
  CHECK(crsym_construct_space("distinct-radical", &small, &none) == CRSYM_ERR_NO_SUBFIELD);
}

TEST_CASE("partitions") {
  crsym_construct_params p{3, 0, 2, 0};
  crsym_partition* part = nullptr;
  REQUIRE(crsym_construct_partition("spread", &p, &part) == CRSYM_OK);
  char* js = nullptr;
  int valid = 0;
  REQUIRE(crsym_partition_check_json(part, &js, &valid) == CRSYM_OK);
  CHECK(valid == 1);
  CHECK(nlohmann::json::parse(js)["t"] == 10);
  crsym_string_free(js);
  char* text = nullptr;
  REQUIRE(crsym_partition_format(part, &text) == CRSYM_OK);
  crsym_partition* back = nullptr;
  CHECK(crsym_partition_parse(text, &back) == CRSYM_OK);
  crsym_string_free(text);
  crsym_partition_destroy(back);
  crsym_partition_destroy(part);
}

TEST_CASE("search and verify") {
  crsym_search_params s{3, 2, 2, "all-hyperbolic", 0, 1, 1, 1};
  char* js = nullptr;
  std::uint32_t best = 0;
  REQUIRE(crsym_search_json(&s, nullptr, &js, &best) == CRSYM_OK);
  CHECK(best == 1);
  CHECK(nlohmann::json::parse(js)["exhaustive_proof"] == true);
  crsym_string_free(js);

  s.mode = "sideways";
  CHECK(crsym_search_json(&s, nullptr, &js, &best) == CRSYM_ERR_INVALID_ARGUMENT);

  int passed = 0;
  REQUIRE(crsym_verify_suite_json("rank4-f3", 1, &js, &passed) == CRSYM_OK);
  CHECK(passed == 1);
  const auto j = nlohmann::json::parse(js);
  CHECK(j[0]["counts"]["common_isotropic_nonzero"] == 22);
  crsym_string_free(js);
  CHECK(crsym_verify_suite_json("nope", 1, &js, &passed) == CRSYM_ERR_INVALID_ARGUMENT);
}
