// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through crsym.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crsym/crsym.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ApiError {
  crsym_status status;
  std::string message;
};

void check(crsym_status s) {
  if (s != CRSYM_OK) throw ApiError{s, crsym_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { crsym_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SpaceDeleter {
  void operator()(crsym_formspace* m) const { crsym_formspace_destroy(m); }
};
using Space = std::unique_ptr<crsym_formspace, SpaceDeleter>;

struct PartitionDeleter {
  void operator()(crsym_partition* p) const { crsym_partition_destroy(p); }
};
using Partition = std::unique_ptr<crsym_partition, PartitionDeleter>;

struct FieldDeleter {
  void operator()(crsym_field* f) const { crsym_field_destroy(f); }
};
using FieldHandle = std::unique_ptr<crsym_field, FieldDeleter>;

// "9" or "3^2".
std::uint64_t field_order(const std::string& spec) {
  crsym_field* f = nullptr;
  check(crsym_field_parse(spec.c_str(), &f));
  FieldHandle owned(f);
  return crsym_field_order(f);
}

void write_json(const std::string& path, const std::string& text) {
  std::FILE* out = std::fopen(path.c_str(), "wb");
  if (!out) throw ApiError{CRSYM_ERR_IO, "cannot open '" + path + "' for writing"};
  const bool ok = std::fwrite(text.data(), 1, text.size(), out) == text.size() && std::fputc('\n', out) != EOF;
  if (std::fclose(out) != 0 || !ok) throw ApiError{CRSYM_ERR_IO, "cannot write '" + path + "'"};
}

std::string histogram_text(const json& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : h.items()) {
    s += (first ? "" : ", ") + k + ": " + v.dump();
    first = false;
  }
  return s + "}";
}

struct ConstructArgs {
  std::string kind;
  std::string q = "3";
  std::uint32_t n = 0, m = 0, t = 0;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  crsym_construct_params p{a.kind == "rank4-f3" || a.kind == "ward" ? 3 : field_order(a.q), a.n, a.m, a.t};
  if (a.kind == "spread" || a.kind == "odd-partition") {
    crsym_partition* raw = nullptr;
    check(crsym_construct_partition(a.kind.c_str(), &p, &raw));
    Partition part(raw);
    check(crsym_partition_save(raw, a.out.c_str()));
    char* js = nullptr;
    int valid = 0;
    check(crsym_partition_check_json(raw, &js, &valid));
    OwnedString owned(js);
    const json r = json::parse(js);
    std::cout << a.kind << ": " << r["t"] << " pieces, dims " << histogram_text(r["piece_dims"])
              << ", valid " << (valid ? "true" : "false") << "\nwrote " << a.out << "\n";
    return valid ? kExitOk : kExitCheckFailed;
  }
  crsym_formspace* raw = nullptr;
  check(crsym_construct_space(a.kind.c_str(), &p, &raw));
  Space space(raw);
  check(crsym_formspace_save(raw, a.out.c_str()));
  std::cout << a.kind << ": n = " << crsym_formspace_n(raw) << ", dim = " << crsym_formspace_dim(raw) << "\nwrote "
            << a.out << "\n";
  return kExitOk;
}

int run_census(const std::string& file, const std::string& json_out) {
  crsym_formspace* raw = nullptr;
  check(crsym_formspace_load(file.c_str(), &raw));
  Space space(raw);
  char* js = nullptr;
  int agreement = 0;
  check(crsym_census_json(raw, &js, &agreement));
  OwnedString owned(js);
  const json r = json::parse(js);
  std::cout << "q = " << r["q"] << ", n = " << r["n"] << ", d = " << r["d"] << "\n"
            << "A = " << r["A"] << ", B = " << r["B"] << "\n"
            << "rank histogram " << histogram_text(r["rank_histogram"]) << "\n"
            << "common isotropic points (enumeration) = " << r["common_isotropic_total"] << "\n"
            << "common isotropic points (formula) = "
            << (r["formula_value"].is_string() ? r["formula_value"].get<std::string>() : r["formula_value"].dump())
            << "\n"
            << "agreement " << (agreement ? "true" : "false") << "\n";
  if (!json_out.empty()) write_json(json_out, js);
  return agreement ? kExitOk : kExitCheckFailed;
}

int run_verify(const std::string& suite, unsigned jobs, const std::string& json_out) {
  char* js = nullptr;
  int passed = 0;
  check(crsym_verify_suite_json(suite.c_str(), jobs, &js, &passed));
  OwnedString owned(js);
  const json results = json::parse(js);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    const std::string status = r["status"];
    const int idx = status == "pass" ? 0 : status == "fail" ? 1 : 2;
    ++counts[idx];
    std::cout << (idx == 0 ? "PASS " : idx == 1 ? "FAIL " : "SKIP ") << r["name"].get<std::string>();
    for (const auto& [k, v] : r["params"].items()) std::cout << ' ' << k << '=' << v.get<std::string>();
    std::cout << " [" << r["label"].get<std::string>() << "]\n";
    for (const auto& note : r["notes"]) std::cout << "    " << note.get<std::string>() << "\n";
  }
  std::cout << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  if (!json_out.empty()) write_json(json_out, js);
  return passed ? kExitOk : kExitCheckFailed;
}

struct SearchArgs {
  std::string q = "3";
  std::uint32_t n = 2, rank = 2;
  std::string mode = "plain";
  bool exhaustive = false;
  std::uint64_t budget = 1'000'000;
  std::string seed;
  unsigned jobs = 1;
  std::uint64_t rng_seed = 1;
  std::string json_out;
};

int run_search(const SearchArgs& a) {
  Space seed;
  if (!a.seed.empty()) {
    crsym_formspace* raw = nullptr;
    check(crsym_formspace_load(a.seed.c_str(), &raw));
    seed.reset(raw);
  }
  crsym_search_params p{field_order(a.q), a.n, a.rank, a.mode.c_str(), a.budget, a.exhaustive ? 1 : 0, a.jobs,
                        a.rng_seed};
  char* js = nullptr;
  std::uint32_t best = 0;
  check(crsym_search_json(&p, seed.get(), &js, &best));
  OwnedString owned(js);
  const json r = json::parse(js);
  std::cout << "best_dim " << best << "\n"
            << "exhaustive_proof " << (r["exhaustive_proof"].get<bool>() ? "true" : "false") << "\n"
            << "nodes_visited " << r["nodes_visited"] << "\n";
  if (r["witness"].is_string()) std::cout << "witness:\n" << r["witness"].get<std::string>();
  if (!a.json_out.empty()) write_json(a.json_out, js);
  return kExitOk;
}

int run_field_info(const std::string& spec, const std::string& json_out) {
  crsym_field* raw = nullptr;
  check(crsym_field_parse(spec.c_str(), &raw));
  FieldHandle f(raw);
  char* js = nullptr;
  check(crsym_field_info_json(raw, &js));
  OwnedString owned(js);
  const json r = json::parse(js);
  std::cout << "F_" << r["q"] << " = F_" << r["p"] << "[x]/(m), m digits (constant first) " << r["modulus"].dump()
            << "\ngenerator " << r["generator"] << "\nmodulus rule " << r["modulus_rule"].get<std::string>() << "\n";
  if (!json_out.empty()) write_json(json_out, js);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant rank subspaces of symmetric forms over finite fields"};
  app.set_version_flag("--version", std::string("crsym ") + crsym_version() + "\nmodulus rule: " + crsym_modulus_rule());
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a form space or subspace partition and write it to a file");
  construct->add_option("kind", ca.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"trace", "distinct-radical", "hyperbolic", "positive2t", "rank4-f3", "ward", "spread",
                             "odd-partition"}));
  construct->add_option("--q", ca.q, "Field order, as q or p^k");
  construct->add_option("--n", ca.n, "Dimension of V");
  construct->add_option("--m", ca.m, "Subfield degree (distinct-radical) or half dimension (spread, odd-partition)");
  construct->add_option("--t", ca.t, "Half rank (positive2t)");
  construct->add_option("--out", ca.out, "Output file")->required();

  std::string suite = "all";
  unsigned verify_jobs = 1;
  std::string verify_json;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"core", "rank4-f3", "ward", "bounds", "all"}));
  verify->add_option("--jobs", verify_jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  verify->add_option("--json", verify_json, "Write the JSON report here");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for a large constant rank subspace");
  search->add_option("--q", sa.q, "Field order, as q or p^k")->required();
  search->add_option("--n", sa.n, "Dimension of V")->required();
  search->add_option("--rank", sa.rank, "Constant rank")->required();
  search->add_option("--mode", sa.mode, "plain, all-hyperbolic, all-positive or distinct-radicals")
      ->check(CLI::IsMember({"plain", "all-hyperbolic", "all-positive", "distinct-radicals", "all_hyperbolic",
                             "all_positive", "distinct_radicals"}));
  search->add_flag("--exhaustive", sa.exhaustive, "Complete canonical traversal");
  search->add_option("--budget", sa.budget, "Node budget")->check(CLI::PositiveNumber);
  search->add_option("--seed", sa.seed, "Form space file to start from");
  search->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--rng-seed", sa.rng_seed, "Seed of the randomized search");
  search->add_option("--json", sa.json_out, "Write the JSON outcome here");

  std::string field_spec, field_json;
  auto* field_info = app.add_subcommand("field-info", "Show the canonical model of F_q");
  field_info->add_option("spec", field_spec, "q or p^k")->required();
  field_info->add_option("--json", field_json, "Write JSON here");

  std::string census_file, census_json;
  auto* census = app.add_subcommand("census", "Type census and common isotropic counts of a form space file");
  census->add_option("file", census_file, "Form space file")->required();
  census->add_option("--json", census_json, "Write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*verify) return run_verify(suite, verify_jobs, verify_json);
    if (*search) return run_search(sa);
    if (*field_info) return run_field_info(field_spec, field_json);
    if (*census) return run_census(census_file, census_json);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
