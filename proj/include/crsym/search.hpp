// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "crsym/forms.hpp"
#include "crsym/subspace.hpp"

namespace crsym {

enum class SearchMode {
  Plain,           // constant rank r
  AllHyperbolic,   // r = 2, every nonzero element of hyperbolic type
  AllPositive,     // r even, every nonzero element of positive type
  DistinctRadicals // r = n-1, non-proportional elements have different radicals
};
std::string_view to_string(SearchMode m) noexcept;
/// Accepts "plain", "all-hyperbolic"/"all_hyperbolic", etc.
SearchMode parse_search_mode(std::string_view s);

struct SearchSpec {
  std::uint32_t q = 3;
  std::size_t n = 2;
  std::size_t r = 2;
  SearchMode mode = SearchMode::Plain;
  /// Node limit; a node is one gate evaluation (one candidate tested against
  /// a partial basis).
  std::uint64_t budget = 1'000'000;
  /// Canonical depth-first traversal when true, randomized restarts when
  /// false.
  bool exhaustive = false;
  unsigned jobs = 1;
  std::uint64_t rng_seed = 1;
  std::optional<FormSpace> seed;
};

struct SearchOutcome {
  std::size_t best_dim = 0;
  std::optional<FormSpace> witness;
  bool exhaustive_proof = false;
  std::uint64_t nodes_visited = 0;
  bool from_seed = false;
};

/// Throws InvalidArgument / EvenCharUnsupported / Unsupported for specs the
/// engine cannot run.
void validate(const SearchSpec& spec);

SearchOutcome max_constant_rank_dim(const SearchSpec& spec);

/// True iff candidate + m has rank r for every m in partial (only the q^d
/// new combinations are tested). partial must be constant rank r.
bool incremental_rank_gate(const FormSpace& partial, const SymForm& candidate, std::size_t r);

/// Independent check of a search result through the subspace module: M is
/// constant rank r and satisfies the mode predicate.
bool satisfies_mode(const FormSpace& m, std::size_t r, SearchMode mode);

}  // namespace crsym
