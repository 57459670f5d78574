// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "crsym/construct.hpp"
#include "crsym/search.hpp"
#include "oracles.hpp"

using namespace crsym;

namespace {

// Largest constant rank r subspace of Symm(F_q^n) by brute force over all
// subspaces of each dimension, largest first.
std::size_t brute_max_dim(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode) {
  const auto f = Field::of_order(q);
  const std::size_t len = sym_coord_count(n);
  std::vector<SymForm> basis;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Elem> c(len, 0);
    c[i] = 1;
    basis.push_back(SymForm::from_upper(f, n, c));
  }
  const FormSpace symm = FormSpace::span(basis);
  for (std::size_t d = len; d >= 1; --d) {
    bool found = false;
    for_each_subspace(f, len, d, [&](const VecSubspace& u) {
      if (found) return;
      const FormSpace m = symm.subspace(u);
      found = is_constant_rank(m) == r && satisfies_mode(m, r, mode);
    });
    if (found) return d;
  }
  return 0;
}

SearchSpec spec_of(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode, bool exhaustive) {
  SearchSpec s;
  s.q = q;
  s.n = n;
  s.r = r;
  s.mode = mode;
  s.exhaustive = exhaustive;
  s.budget = 50'000'000;
  return s;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("exhaustive search matches brute-force subspace enumeration") {
  for (auto [q, n, r, mode] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t, SearchMode>>{
           {3, 2, 2, SearchMode::AllHyperbolic},
           {3, 2, 2, SearchMode::Plain},
           {3, 2, 1, SearchMode::Plain},
           {5, 2, 2, SearchMode::Plain},
           {3, 3, 2, SearchMode::Plain},
           {3, 3, 1, SearchMode::Plain},
           {3, 3, 2, SearchMode::AllHyperbolic},
           {3, 3, 2, SearchMode::DistinctRadicals},
           {3, 3, 3, SearchMode::Plain}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(r);
    const SearchOutcome o = max_constant_rank_dim(spec_of(q, n, r, mode, true));
    CHECK(o.exhaustive_proof);
    CHECK(o.best_dim == brute_max_dim(q, n, r, mode));
    if (o.witness) {
      CHECK(o.witness->dim() == o.best_dim);
      CHECK(satisfies_mode(*o.witness, r, mode));
    }
  }
}

TEST_CASE("all-hyperbolic rank 2 over F_3^2 is exactly one-dimensional") {
  const SearchOutcome o = max_constant_rank_dim(spec_of(3, 2, 2, SearchMode::AllHyperbolic, true));
  CHECK(o.best_dim == 1);
  CHECK(o.exhaustive_proof);
}

TEST_CASE("results do not depend on the number of jobs") {
  for (bool exhaustive : {true, false}) {
    SearchSpec s = spec_of(5, 3, 2, SearchMode::Plain, exhaustive);
    s.budget = exhaustive ? 50'000'000 : 20'000;
    s.jobs = 1;
    const SearchOutcome a = max_constant_rank_dim(s);
    s.jobs = 4;
    const SearchOutcome b = max_constant_rank_dim(s);
    CHECK(a.best_dim == b.best_dim);
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.exhaustive_proof == b.exhaustive_proof);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) CHECK(*a.witness == *b.witness);
  }
}

TEST_CASE("budget exhaustion is reported, not proven") {
  SearchSpec s = spec_of(3, 3, 2, SearchMode::Plain, true);
  s.budget = 50;
  const SearchOutcome o = max_constant_rank_dim(s);
  CHECK_FALSE(o.exhaustive_proof);
  CHECK(o.nodes_visited <= 50);
}

TEST_CASE("seeded random search keeps the seed as a lower bound") {
  SearchSpec s = spec_of(3, 5, 4, SearchMode::Plain, false);
  s.budget = 2000;
  s.seed = rank4_f3_space().space;
  const SearchOutcome o = max_constant_rank_dim(s);
  CHECK(o.best_dim >= 5);
  CHECK(o.from_seed);
  REQUIRE(o.witness);
  CHECK(is_constant_rank(*o.witness) == 4);
}

TEST_CASE("incremental rank gate") {
  const FormSpace h = hyperbolic_rank2_space(3, 3);
  const auto f = h.field_ptr();
  // e1 e1^T has rank 1, so adding it breaks constant rank 2.
  CHECK_FALSE(incremental_rank_gate(h, SymForm(f, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0}), 2));
  const FormSpace one = FormSpace::span({h.basis()[0]});
  CHECK(incremental_rank_gate(one, h.basis()[1], 2));
}

TEST_CASE("search parameter validation") {
  auto code = [](SearchSpec s) { return error_code_of([&] { validate(s); }); };
  CHECK(code(spec_of(3, 3, 2, SearchMode::Plain, true)) == 0);
  CHECK(code(spec_of(3, 3, 4, SearchMode::Plain, true)) == static_cast<int>(ErrorCode::InvalidArgument));
  CHECK(code(spec_of(4, 3, 2, SearchMode::Plain, true)) == static_cast<int>(ErrorCode::EvenCharUnsupported));
  CHECK(code(spec_of(3, 3, 1, SearchMode::AllHyperbolic, true)) == static_cast<int>(ErrorCode::InvalidArgument));
  CHECK(code(spec_of(3, 4, 2, SearchMode::DistinctRadicals, true)) == static_cast<int>(ErrorCode::InvalidArgument));
  SearchSpec bad_seed = spec_of(3, 5, 2, SearchMode::Plain, false);
  bad_seed.seed = rank4_f3_space().space;
  CHECK(code(bad_seed) == static_cast<int>(ErrorCode::RankMismatch));
  CHECK(parse_search_mode("all-hyperbolic") == SearchMode::AllHyperbolic);
  CHECK(parse_search_mode("distinct_radicals") == SearchMode::DistinctRadicals);
}

}  // TEST_SUITE
