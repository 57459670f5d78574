// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "crsym/construct.hpp"
#include "crsym/verify.hpp"

using namespace crsym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void require(const CheckResult& r) {
    std::string what = r.name;
    for (const auto& [k, v] : r.params) what += " " + k + "=" + v;
    for (const auto& n : r.notes) what += " [" + n + "]";
    require(r.status == CheckStatus::Pass, what + " did not pass");
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < limit_seconds, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds));
  std::printf("%s %d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::int64_t count(const CheckResult& r, const char* key) {
  const auto it = r.counts.find(key);
  return it == r.counts.end() ? -1 : it->second;
}

}  // namespace

int main() {
  const auto spaces = constructed_spaces();

  criterion(1, "rank 4 space over F_3 statistics", 60, [](Outcome& o) {
    const CheckResult r = rank4_f3_report();
    o.require(r);
    o.require(count(r, "dim") == 5, "dim");
    o.require(count(r, "constant_rank") == 4, "constant rank");
    o.require(count(r, "phi1_rank") == 4 && count(r, "phi1_negative") == 1, "phi_1 rank/type");
    o.require(count(r, "phi1_isotropic_nonzero") == 62, "phi_1 isotropic points");
    o.require(count(r, "common_isotropic_nonzero") == 22, "common isotropic points");
    o.require(count(r, "A") == 220 && count(r, "B") == 22, "census");
    o.require(count(r, "hyperplanes_22_common_isotropic_census_70_10") == 66, "66 hyperplanes");
    o.require(count(r, "hyperplanes_26_common_isotropic_census_76_4") == 55, "55 hyperplanes");
    o.require(count(r, "orbits_on_V_match") == 1 && count(r, "orbits_on_M_match") == 1, "orbit census");
    o.require(count(r, "conjugation_relation_holds") == 1, "S^-1 T S = T^4");
  });

  criterion(2, "counting formula gate", 120, [&](Outcome& o) {
    const CheckResult r = count_formula_gate(spaces, 120);
    o.require(r);
    o.require(count(r, "random_spaces") >= 100, "fewer than 100 random spaces");
    o.require(count(r, "mismatches") == 0, "mismatches");
  });

  criterion(3, "distinct-radical constructions", 300, [](Outcome& o) {
    for (auto [q, n, m] : std::vector<std::tuple<std::uint32_t, std::size_t, unsigned>>{
             {3, 3, 2}, {5, 3, 2}, {3, 5, 3}, {7, 5, 3}, {3, 8, 3}}) {
      const CheckResult r = check_distinct_radical_construction(q, n, m);
      o.require(r);
      o.require(count(r, "radical_mismatches") == 0 && count(r, "radicals_checked") > 0, "radicals <w^-1>");
    }
  });

  criterion(4, "all-hyperbolic rank 2 maximum at (q,n) = (3,2)", 1, [](Outcome& o) {
    BoundOptions opt;
    opt.exhaustive = true;
    const CheckResult r = check_dimension_bound(3, 2, 2, SearchMode::AllHyperbolic, opt);
    o.require(r);
    o.require(count(r, "best_dim") == 1 && count(r, "exhaustive_proof") == 1, "best_dim 1 with proof");
  });

  criterion(5, "constant rank 2 maximum at (q,n) = (5,3)", 600, [](Outcome& o) {
    SearchSpec s;
    s.q = 5;
    s.n = 3;
    s.r = 2;
    s.exhaustive = true;
    s.budget = 1'000'000'000;
    const SearchOutcome out = max_constant_rank_dim(s);
    o.require(out.exhaustive_proof, "no exhaustive proof");
    o.require(out.best_dim == 2, "best_dim " + std::to_string(out.best_dim));
    o.require(out.witness && out.witness->dim() == 2 && is_constant_rank(*out.witness) == 2,
              "witness failed re-validation");
  });

  criterion(6, "optimality witnesses", 120, [](Outcome& o) {
    for (std::uint32_t q : {3u, 5u, 7u})
      for (std::size_t n : {3u, 4u, 5u}) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) total *= q;
        o.require(check_construction("hyperbolic", hyperbolic_rank2_space(q, n), 2, SearchMode::AllHyperbolic, n - 1,
                                     std::make_pair(total - 1, std::uint64_t{0})));
      }
    o.require(check_construction("positive", positive_rank2t_space(3, 4, 2), 4, SearchMode::AllPositive, 2,
                                 std::make_pair(std::uint64_t{8}, std::uint64_t{0})));
    o.require(check_construction("positive", positive_rank2t_space(5, 5, 2), 4, SearchMode::AllPositive, 3,
                                 std::make_pair(std::uint64_t{124}, std::uint64_t{0})));
  });

  criterion(7, "spread and odd partition", 10, [](Outcome& o) {
    o.require(check_partition_structure("spread(3,2)", spread(3, 2), 10, {{2, 10}}));
    o.require(check_partition_structure("odd_partition(3,1)", odd_partition(3, 1), 10, {{1, 9}, {2, 1}}));
  });

  criterion(8, "radical isotropy and common radical", 120, [&](Outcome& o) {
    std::size_t applied = 0, odd_inflated = 0;
    for (const auto& [name, m] : spaces) {
      for (const CheckResult& r : {check_radical_isotropy(m), check_common_radical(m)}) {
        o.require(r.status != CheckStatus::Fail, name + ": " + r.name + " failed");
        applied += r.status == CheckStatus::Pass;
      }
      if (name.rfind("inflate", 0) == 0) {
        const CheckResult r = check_common_radical(m);
        if (count(r, "common_isotropic_equals_radical") >= 0) {
          ++odd_inflated;
          o.require(count(r, "t") == 1 && count(r, "common_isotropic_equals_radical") == 1,
                    name + ": common isotropic set differs from the radical");
        }
      }
    }
    o.require(applied > 0, "no instance met the hypotheses");
    o.require(odd_inflated >= 4, "too few inflated odd-rank instances");
  });

  criterion(9, "bounds beyond desk scale, instance-verified", 1800, [&](Outcome& o) {
    for (const auto& [name, m] : spaces) {
      const auto cr = is_constant_rank(m);
      if (!cr) continue;
      for (SearchMode mode : {SearchMode::Plain, SearchMode::AllPositive, SearchMode::DistinctRadicals}) {
        const CheckResult r = check_bound_on_instance(name, m, mode);
        o.require(r.status != CheckStatus::Fail, name + ": bound violated");
      }
      const CheckResult r4 = check_rank4_radical_intersections(m);
      o.require(r4.status != CheckStatus::Fail, name + ": rank 4 radical intersections");
    }
    BoundOptions opt;
    opt.exhaustive = false;
    opt.budget = 1'000'000;
    opt.seed = positive_rank2t_space(5, 6, 2);
    const CheckResult a = check_dimension_bound(5, 6, 4, SearchMode::Plain, opt);
    o.require(a);
    o.require(count(a, "nodes_visited") >= 1'000'000 && a.label == "instance-verified", "(5,6,4) budget/label");
    opt.seed = distinct_radical_space(5, 5, 3).space;
    const CheckResult b = check_dimension_bound(5, 5, 4, SearchMode::DistinctRadicals, opt);
    o.require(b);
    o.require(count(b, "nodes_visited") >= 1'000'000 && b.label == "instance-verified", "(5,5,4) budget/label");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
