// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "crsym/construct.hpp"
#include "crsym/search.hpp"
#include "oracles.hpp"

using namespace crsym;

TEST_SUITE("construct") {

TEST_CASE("trace forms are Tr(z x y) on the kernel of a trace functional") {
  const TraceSpace ts = trace_space(3, 3);
  const TraceSetup& s = ts.setup;
  CHECK(ts.space.dim() == 4);
  CHECK(ts.space.n() == 3);
  CHECK(s.l->order() == 81);
  // Every v in V lies in the kernel of y -> Tr(c y).
  for (Elem v : s.v_basis) CHECK(s.trace(s.l->mul(s.c, v)) == 0);
  for (Elem z : {Elem{1}, Elem{5}, Elem{40}}) {
    const SymForm g = s.form(z);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const Elem direct = s.l->trace_to(s.l->mul(z, s.l->mul(s.v_basis[i], s.v_basis[j])), 1);
        CHECK(s.l_over_k.embedding().embed(g.at(i, j)) == direct);
      }
  }
}

TEST_CASE("full trace spaces are nondegenerate") {
  for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 2}, {3, 3}, {5, 3}, {5, 4}, {9, 2}}) {
    const FormSpace m = full_trace_space(q, r);
    CHECK(m.dim() == r);
    CHECK(is_constant_rank(m) == r);
  }
}

TEST_CASE("inflation keeps the rank and adds a common radical") {
  const FormSpace small = full_trace_space(5, 3);
  const FormSpace big = inflate(small, 5);
  CHECK(big.n() == 5);
  CHECK(big.dim() == 3);
  CHECK(is_constant_rank(big) == 3);
  for (const auto& g : big.basis())
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(g.at(i, j) == 0);
  // Only the zero vector of F_5^3 is a common isotropic point of the small
  // space (d = r odd, q > r), so the big space has exactly 5^2.
  CHECK(common_isotropic_points(small).size() == 1);
  CHECK(common_isotropic_points(big).size() == 25);
  CHECK(radical_profile(big).t == 1);
  CHECK(error_code_of([&] { (void)inflate(small, 2); }) == static_cast<int>(ErrorCode::DimensionMismatch));
}

TEST_CASE("distinct radical spaces") {
  for (auto [q, n, m] : std::vector<std::tuple<std::uint32_t, std::size_t, unsigned>>{
           {3, 3, 2}, {5, 3, 2}, {3, 5, 3}, {3, 5, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(m);
    const DistinctRadicalSpace ds = distinct_radical_space(q, n, m);
    CHECK(ds.space.dim() == m);
    CHECK(is_constant_rank(ds.space) == n - 1);
    const RadicalProfile prof = radical_profile(ds.space);
    CHECK(prof.t == (oracle::ipow(q, m) - 1) / (q - 1));
    for (const auto& [rad, count] : prof.groups) CHECK(count == q - 1);
    CHECK(satisfies_mode(ds.space, n - 1, SearchMode::DistinctRadicals));
  }
  CHECK(error_code_of([] { (void)distinct_radical_space(3, 3, 3); }) == static_cast<int>(ErrorCode::NoSubfield));
  CHECK(error_code_of([] { (void)distinct_radical_space(3, 4, 2); }) == static_cast<int>(ErrorCode::NoSubfield));
  CHECK_FALSE(distinct_radical_space(3, 5, 3).warnings.empty());
  CHECK(distinct_radical_space(7, 5, 3).warnings.empty());
}

TEST_CASE("hyperbolic and positive block spaces") {
  for (std::uint32_t q : {3u, 5u})
    for (std::size_t n = 2; n <= 5; ++n) {
      const FormSpace m = hyperbolic_rank2_space(q, n);
      CHECK(m.dim() == n - 1);
      CHECK(is_constant_rank(m) == 2);
      const TypeCensus c = type_census(m, TypeRule::Checked);
      CHECK(c.positive == oracle::ipow(q, static_cast<unsigned>(n - 1)) - 1);
      CHECK(c.negative == 0);
    }
  for (auto [q, n, t] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {3, 4, 2}, {5, 5, 2}, {3, 6, 3}, {3, 2, 1}, {5, 6, 2}}) {
    const FormSpace m = positive_rank2t_space(q, n, t);
    CHECK(m.dim() == n - t);
    CHECK(is_constant_rank(m) == 2 * t);
    CHECK(type_census(m).negative == 0);
  }
  CHECK(error_code_of([] { (void)positive_rank2t_space(3, 3, 2); }) == static_cast<int>(ErrorCode::Unsupported));
  CHECK(error_code_of([] { (void)hyperbolic_rank2_space(3, 1); }) == static_cast<int>(ErrorCode::TooSmall));
  CHECK(error_code_of([] { (void)hyperbolic_rank2_space(4, 3); }) == static_cast<int>(ErrorCode::EvenCharUnsupported));
}

TEST_CASE("the five-dimensional rank 4 space over F_3") {
  const Rank4F3Space w = rank4_f3_space();
  CHECK(w.space.dim() == 5);
  CHECK(is_constant_rank(w.space) == 4);
  CHECK(w.l->multiplicative_order(w.epsilon) == 11);
  const TypeCensus c = type_census(w.space, TypeRule::Checked);
  CHECK(c.positive == 220);
  CHECK(c.negative == 22);
  CHECK(common_isotropic_points(w.space).size() == 23);
}

TEST_CASE("spreads and odd partitions") {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {9, 1}}) {
    const PartitionReport r = check_partition(spread(q, m));
    CHECK(r.valid);
    CHECK(r.t == oracle::ipow(q, static_cast<unsigned>(m)) + 1);
    CHECK(r.piece_dims == std::map<std::size_t, std::size_t>{{m, r.t}});
  }
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const PartitionReport r = check_partition(odd_partition(q, m));
    const std::size_t big = oracle::ipow(q, static_cast<unsigned>(m + 1));
    CHECK(r.valid);
    CHECK(r.t == big + 1);
    CHECK(r.piece_dims == std::map<std::size_t, std::size_t>{{m, big}, {m + 1, 1}});
    CHECK(r.min_bound_satisfied);
  }
}

}  // TEST_SUITE
