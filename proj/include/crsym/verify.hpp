// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crsym/search.hpp"
#include "crsym/subspace.hpp"

namespace crsym {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus s) noexcept;

/// Outcome of one falsifiable check. A check fails only when its
/// hypotheses hold and its conclusion does not; otherwise it passes or is
/// skipped with a note naming the unmet hypothesis.
struct CheckResult {
  std::string name;
  std::map<std::string, std::string> params;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> witnesses;  // serialized inputs (form-space text)
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> notes;
  /// "exhaustive" when the claim was settled by complete enumeration,
  /// "instance-verified" when it was only tested on the given instances.
  std::string label = "exhaustive";
};

/// Radicals of nonzero elements are totally isotropic for every element
/// (hypothesis: constant rank r, q >= r+1).
CheckResult check_radical_isotropy(const FormSpace& m);
/// All nonzero elements share one radical (hypotheses: r odd, d = r, q > r;
/// or n even, r = n-1, q >= n with d in the admissible range). For constant
/// rank n-1 also checks that the M_<u> partition M.
CheckResult check_common_radical(const FormSpace& m);
/// Brute-force common isotropic count equals the census formula.
CheckResult check_count_formula(const FormSpace& m);
/// Radical intersections around a negative-type element of a constant
/// rank 4 space (q >= 5).
CheckResult check_rank4_radical_intersections(const FormSpace& m);

/// The m-dimensional constant rank n-1 construction: dimension, rank,
/// (q^m-1)/(q-1) distinct radical lines, radical of f'_{zuw} = <w^{-1}>.
CheckResult check_distinct_radical_construction(std::uint32_t q, std::size_t n, unsigned m);
/// Dimension, constant rank, mode predicate and optionally (A, B).
CheckResult check_construction(const std::string& name, const FormSpace& m, std::size_t rank, SearchMode mode,
                               std::size_t expected_dim,
                               std::optional<std::pair<std::uint64_t, std::uint64_t>> expected_census = {});
CheckResult check_partition_structure(const std::string& name, const PartitionSpec& p, std::size_t expected_t,
                                      const std::map<std::size_t, std::size_t>& expected_dims);

/// Full statistics of the 5-dimensional constant rank 4 space over F_3.
CheckResult rank4_f3_report();

/// The best known upper bound on dim M for the given parameters, with a
/// short description of where it applies.
struct DimensionBound {
  std::size_t value = 0;
  std::string rule;
};
std::optional<DimensionBound> dimension_bound(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode);

struct BoundOptions {
  /// Unset: exhaustive when Symm(F_q^n) has at most 2^20 elements.
  std::optional<bool> exhaustive;
  std::uint64_t budget = 50'000'000;
  unsigned jobs = 1;
  std::uint64_t rng_seed = 1;
  std::optional<FormSpace> seed;
};
CheckResult check_dimension_bound(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode,
                                  const BoundOptions& options = {});
/// The applicable dimension bound on a given constant rank space.
CheckResult check_bound_on_instance(const std::string& name, const FormSpace& m, SearchMode mode);

/// Aggregate gate: the formula matches brute force on `random_spaces`
/// random spaces (q in {3,5}, n <= 5, 1 <= d <= 4) and on every space in
/// `constructed`.
CheckResult count_formula_gate(const std::vector<std::pair<std::string, FormSpace>>& constructed,
                               std::size_t random_spaces = 120, std::uint64_t rng_seed = 1);
/// The constructed spaces the suites run over, with display names.
std::vector<std::pair<std::string, FormSpace>> constructed_spaces();

/// suite: core | rank4-f3 (alias ward) | bounds | all.
std::vector<CheckResult> run_suite(std::string_view suite, unsigned jobs = 1);
bool all_passed(const std::vector<CheckResult>& results);

std::string check_result_json(const CheckResult& r);
std::string check_results_json(const std::vector<CheckResult>& results);

}  // namespace crsym
