// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <set>

#include "crsym/subspace.hpp"
#include "oracles.hpp"

using namespace crsym;

namespace {

// All symmetric n x n forms as a basis of Symm(F_q^n).
std::vector<SymForm> symm_basis(const FieldPtr& f, std::size_t n) {
  std::vector<SymForm> out;
  const std::size_t len = sym_coord_count(n);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Elem> c(len, 0);
    c[i] = 1;
    out.push_back(SymForm::from_upper(f, n, c));
  }
  return out;
}

FormSpace random_space(std::mt19937& rng, const FieldPtr& f, std::size_t n, std::size_t d) {
  while (true) {
    std::vector<SymForm> forms;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Elem> c(sym_coord_count(n));
      for (auto& x : c) x = rng() % f->order();
      forms.push_back(SymForm::from_upper(f, n, c));
    }
    bool nonzero = false;
    for (const auto& g : forms) nonzero = nonzero || !g.is_zero();
    if (!nonzero) continue;
    FormSpace m = FormSpace::span(forms);
    if (m.dim() == d) return m;
  }
}

// Common isotropic points by direct enumeration over the span basis.
std::uint64_t brute_common_isotropic(const FormSpace& m) {
  const auto p = static_cast<std::int64_t>(m.field().order());
  std::uint64_t count = 0;
  oracle::each_vector(p, m.n(), [&](const std::vector<std::int64_t>& v) {
    bool all = true;
    for (const auto& g : m.basis()) all = all && oracle::quad({g.gram().begin(), g.gram().end()}, v, p) == 0;
    count += all;
  });
  return count;
}

}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("count formula equals brute force on random spaces") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 3;
    const auto f = Field::of_order(p);
    const std::size_t n = 1 + rng() % 4;
    const std::size_t d = 1 + rng() % std::min<std::size_t>(4, sym_coord_count(n));
    const FormSpace m = random_space(rng, f, n, d);
    const TypeCensus c = type_census(m);
    CHECK(c.total() == oracle::ipow(p, static_cast<unsigned>(d)) - 1);
    const Rational formula = common_isotropic_count_formula(n, c, d, p);
    const std::uint64_t brute = brute_common_isotropic(m);
    CHECK(formula == Rational(static_cast<std::int64_t>(brute)));
    CHECK(common_isotropic_points(m).size() == brute);
  }
}

TEST_CASE("census counts ranks and types by enumeration") {
  std::mt19937 rng(23);
  const auto f = Field::of_order(3);
  for (int trial = 0; trial < 40; ++trial) {
    const FormSpace m = random_space(rng, f, 3, 1 + rng() % 3);
    std::uint64_t a = 0, b = 0;
    std::map<std::size_t, std::uint64_t> hist;
    for (const auto& g : span_elements(m)) {
      if (g.is_zero()) continue;
      const std::vector<std::int64_t> gi(g.gram().begin(), g.gram().end());
      const std::size_t r = oracle::rank_by_kernel(gi, 3, 3);
      ++hist[r];
      if (r % 2 == 0) {
        // Positive type has strictly more isotropic vectors.
        const auto iso = oracle::isotropic_by_enumeration(gi, 3, 3);
        (iso > oracle::ipow(3, 3 - r) * oracle::ipow(3, r - 1) ? a : b) += 1;
      }
    }
    const TypeCensus c = type_census(m);
    CHECK(c.positive == a);
    CHECK(c.negative == b);
    CHECK(c.rank_histogram == hist);
  }
}

TEST_CASE("planes of Symm(F_3^2)") {
  const auto f = Field::of_order(3);
  const FormSpace symm = FormSpace::span(symm_basis(f, 2));
  const auto planes = enumerate_subspaces(f, 3, 2);
  CHECK(planes.size() == 13);
  std::size_t constant_rank2 = 0, brute_constant = 0;
  for (const auto& u : planes) {
    const FormSpace m = symm.subspace(u);
    REQUIRE(m.dim() == 2);
    bool all_rank2 = true;
    for (const auto& g : span_elements(m))
      if (!g.is_zero()) all_rank2 = all_rank2 && oracle::rank_by_kernel({g.gram().begin(), g.gram().end()}, 2, 3) == 2;
    brute_constant += all_rank2;
    const auto cr = is_constant_rank(m);
    CHECK(cr.has_value() == all_rank2);
    if (cr) ++constant_rank2;
    CHECK(common_isotropic_count_formula(2, type_census(m), 2, 3) ==
          Rational(static_cast<std::int64_t>(brute_common_isotropic(m))));
  }
  // Lines of PG(2,3) missing the conic det = 0: q(q-1)/2.
  CHECK(constant_rank2 == 3);
  CHECK(brute_constant == 3);
}

TEST_CASE("Gaussian binomials and subspace enumeration") {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t d = 0; d <= n; ++d) CHECK(gaussian_binomial(n, d, q) == oracle::subspace_count(n, d, q));
  CHECK(gaussian_binomial(3, 5, 3) == 0);
  for (auto [q, n, d] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {3, 4, 2}, {3, 5, 2}, {5, 3, 1}, {3, 4, 3}, {3, 3, 0}}) {
    const auto f = Field::of_order(q);
    const auto subs = enumerate_subspaces(f, n, d);
    CHECK(subs.size() == oracle::subspace_count(n, d, q));
    std::set<VecSubspace> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == subs.size());
    for (const auto& s : subs) CHECK(s.dim() == d);
  }
}

TEST_CASE("forms whose radical contains U") {
  std::mt19937 rng(31);
  const auto f = Field::of_order(3);
  for (int trial = 0; trial < 30; ++trial) {
    const FormSpace m = random_space(rng, f, 3, 1 + rng() % 4);
    Mat rows(1 + rng() % 2, 3);
    for (auto& x : rows.data) x = rng() % 3;
    const VecSubspace u = VecSubspace::span(f, 3, rows);
    const FormSubspace mu = forms_with_radical_containing(m, u);
    std::uint64_t brute = 0;
    for_each_span_element(m, [&](std::span<const Elem>, const SymForm& g) { brute += radical(g).contains(u); });
    CHECK(oracle::ipow(3, static_cast<unsigned>(mu.dim())) == brute);
    CHECK(mu.space.has_value() == (mu.dim() > 0));
  }
}

TEST_CASE("partition checks") {
  const auto f = Field::of_order(3);
  auto line = [&](std::vector<Elem> v) { return VecSubspace::span(f, 2, std::vector<std::vector<Elem>>{v}); };
  const VecSubspace plane = VecSubspace::full(f, 2);
  PartitionSpec good{plane, {line({1, 0}), line({0, 1}), line({1, 1}), line({1, 2})}};
  const auto ok = check_partition(good);
  CHECK(ok.valid);
  CHECK(ok.t == 4);
  CHECK(ok.nontrivial);
  CHECK(ok.min_bound_satisfied);

  PartitionSpec missing{plane, {line({1, 0}), line({0, 1}), line({1, 1})}};
  const auto bad = check_partition(missing);
  CHECK_FALSE(bad.valid);
  CHECK(bad.uncovered == 2);

  PartitionSpec overlap{plane, {plane, line({1, 0})}};
  const auto over = check_partition(overlap);
  CHECK_FALSE(over.valid);
  CHECK(over.overcovered == 2);

  CHECK(partition_min_bound(2, 3) == 4);
  CHECK(partition_min_bound(4, 3) == 10);
  CHECK(partition_min_bound(3, 3) == 10);
  CHECK(partition_min_bound(5, 3) == 28);
}

TEST_CASE("rank-1 inflated space counts a hyperplane") {
  const auto f = Field::of_order(5);
  const FormSpace m = FormSpace::span({SymForm(f, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0})});
  const CensusReport r = census_report(m);
  CHECK(r.census.positive == 0);
  CHECK(r.census.negative == 0);
  CHECK(r.census.odd_counts.at(1) == 4);
  CHECK(r.common_isotropic_total == 25);
  CHECK(r.agreement);
}

TEST_CASE("errors") {
  const auto f = Field::of_order(3);
  CHECK(error_code_of([&] { (void)FormSpace::span({SymForm(f, 2)}); }) == static_cast<int>(ErrorCode::InvalidArgument));
  CHECK(error_code_of([&] { (void)FormSpace::span({SymForm(f, 2, {1, 0, 0, 0}), SymForm(f, 3)}); }) ==
        static_cast<int>(ErrorCode::DimensionMismatch));
  TypeCensus wrong;
  wrong.positive = 1;
  CHECK(error_code_of([&] { (void)common_isotropic_count_formula(2, wrong, 2, 3); }) ==
        static_cast<int>(ErrorCode::CensusInvalid));
}

}  // TEST_SUITE
