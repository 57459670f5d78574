// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "crsym/field.hpp"
#include "oracles.hpp"

using namespace crsym;

namespace {

oracle::Poly modulus_of(const Field& f) { return {f.modulus().begin(), f.modulus().end()}; }

// First monic irreducible of degree k in constant-term-first
// lexicographic order.
oracle::Poly first_irreducible(std::int64_t p, std::size_t k) {
  oracle::Poly g(k + 1, 0);
  g[k] = 1;
  while (true) {
    if (oracle::irreducible(g, p)) return g;
    std::size_t i = k;  // the last digit varies fastest in lexicographic order
    while (i > 0 && ++g[i - 1] == p) g[--i] = 0;
    REQUIRE(i > 0);
  }
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("modulus is the lexicographically first monic irreducible") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint32_t k = 1; k <= 5 && oracle::ipow(p, k) <= 20000; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const auto f = Field::make(p, k);
      const auto m = modulus_of(*f);
      REQUIRE(m.size() == k + 1);
      CHECK(m.back() == 1);
      CHECK(oracle::irreducible(m, p));
      CHECK(m == first_irreducible(p, k));
    }
  // Hand-checked: x^2 + 1 over F_3, x^5 + 2x^4 + 1 over F_3.
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(3, 5)->modulus() == std::vector<std::uint32_t>{1, 0, 0, 0, 2, 1});
  // k = 1 uses the degree-1 polynomial x.
  CHECK(Field::make(7, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("multiplication and addition agree with schoolbook polynomial arithmetic") {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {3, 3}, {5, 2}, {2, 4}, {7, 2}, {3, 5}}) {
    const auto f = Field::make(p, k);
    const auto m = modulus_of(*f);
    for (Elem a = 0; a < f->order(); ++a)
      for (Elem b = 0; b < f->order(); ++b) {
        REQUIRE(f->mul(a, b) == oracle::mul(a, b, m, p));
        REQUIRE(f->add(a, b) == oracle::add(a, b, p, k));
        REQUIRE(f->add(f->sub(a, b), b) == a);
      }
  }
}

TEST_CASE("inverses, powers, negation") {
  for (std::uint64_t q : {3u, 9u, 25u, 27u, 49u, 81u, 121u, 243u}) {
    const auto f = Field::of_order(q);
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->pow(a, q) == a);
      if (a == 0) continue;
      CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, q - 1) == 1);
      Elem acc = 1;
      for (unsigned e = 0; e < 7; ++e, acc = f->mul(acc, a)) REQUIRE(f->pow(a, e) == acc);
    }
  }
}

TEST_CASE("trace is additive and Frobenius invariant") {
  for (std::uint64_t q : {3u, 9u, 27u, 81u, 243u, 25u, 125u, 49u}) {
    const auto f = Field::of_order(q);
    const std::uint32_t p = f->characteristic();
    for (Elem x = 0; x < q; ++x) {
      REQUIRE(f->trace(x) < p);
      CHECK(f->trace(f->pow(x, p)) == f->trace(x));
      CHECK(f->trace(f->frobenius(x, 1)) == f->trace(x));
      Elem sum = 0, y = x;
      for (std::uint32_t i = 0; i < f->degree(); ++i, y = f->pow(y, p)) sum = f->add(sum, y);
      CHECK(f->trace(x) == sum);
    }
    for (Elem x = 0; x < q; x += 1 + q / 30)
      for (Elem y = 0; y < q; ++y) CHECK(f->trace(f->add(x, y)) == f->add(f->trace(x), f->trace(y)));
  }
}

TEST_CASE("relative trace lands in the subfield") {
  const auto f = Field::make(3, 6);
  for (std::uint32_t m : {1u, 2u, 3u}) {
    const auto sub = f->subfield_elements(m);
    CHECK(sub.size() == oracle::ipow(3, m));
    const std::set<Elem> subset(sub.begin(), sub.end());
    for (Elem x = 0; x < f->order(); x += 7) {
      const Elem t = f->trace_to(x, m);
      CHECK(subset.count(t) == 1);
      Elem sum = 0, y = x;
      for (std::uint32_t i = 0; i < 6 / m; ++i, y = f->frobenius(y, m)) sum = f->add(sum, y);
      CHECK(t == sum);
    }
  }
  CHECK(error_code_of([&] { (void)f->trace_to(1, 4); }) == static_cast<int>(ErrorCode::NotASubfield));
}

TEST_CASE("squares are multiplicative") {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 25u, 27u, 49u, 81u}) {
    const auto f = Field::of_order(q);
    std::set<Elem> squares;
    for (Elem x = 1; x < q; ++x) squares.insert(f->mul(x, x));
    CHECK(squares.size() == (q - 1) / 2);
    for (Elem x = 1; x < q; ++x) {
      CHECK(f->is_square(x) == (squares.count(x) == 1));
      for (Elem y = 1; y < q; ++y) CHECK(f->is_square(f->mul(x, y)) == (f->is_square(x) == f->is_square(y)));
    }
  }
  CHECK(error_code_of([] { (void)Field::of_order(9)->is_square(0); }) == static_cast<int>(ErrorCode::ZeroInput));
  CHECK(error_code_of([] { (void)Field::of_order(8)->is_square(1); }) ==
        static_cast<int>(ErrorCode::EvenCharUnsupported));
}

TEST_CASE("generator is the smallest primitive element") {
  for (std::uint64_t q : {3u, 5u, 9u, 25u, 27u, 81u, 243u, 125u, 8u, 16u}) {
    const auto f = Field::of_order(q);
    const Elem g = f->generator();
    CHECK(f->multiplicative_order(g) == q - 1);
    for (Elem x = 1; x < g; ++x) CHECK(f->multiplicative_order(x) < q - 1);
  }
}

TEST_CASE("element_of_order has exact order") {
  const auto f = Field::of_order(243);
  for (std::uint64_t m : {1u, 2u, 11u, 22u, 121u, 242u}) {
    const Elem e = f->element_of_order(m);
    CHECK(f->pow(e, m) == 1);
    for (std::uint64_t d = 1; d < m; ++d)
      if (m % d == 0) CHECK(f->pow(e, d) != 1);
  }
  CHECK(error_code_of([&] { (void)f->element_of_order(5); }) == static_cast<int>(ErrorCode::NoSuchOrder));
}

TEST_CASE("subfield embedding and extension bases") {
  const auto small = Field::make(3, 2);
  const auto large = Field::make(3, 6);
  const SubfieldEmbedding emb(small, large);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) {
      CHECK(emb.embed(small->mul(a, b)) == large->mul(emb.embed(a), emb.embed(b)));
      CHECK(emb.embed(small->add(a, b)) == large->add(emb.embed(a), emb.embed(b)));
    }
  for (Elem a = 0; a < 9; ++a) CHECK(emb.restrict(emb.embed(a)) == a);
  CHECK(error_code_of([] { SubfieldEmbedding(Field::make(3, 2), Field::make(3, 3)); }) ==
        static_cast<int>(ErrorCode::NotASubfield));

  const ExtensionBasis basis(emb, {1, 3, 9});
  for (Elem y = 0; y < large->order(); y += 5) CHECK(basis.combine(basis.coordinates(y)) == y);
}

TEST_CASE("parsing and errors") {
  CHECK(Field::parse("3^2")->same_as(*Field::of_order(9)));
  CHECK(Field::parse("243")->degree() == 5);
  CHECK(error_code_of([] { (void)Field::of_order(6); }) == static_cast<int>(ErrorCode::InvalidArgument));
  CHECK(error_code_of([] { (void)Field::make(4, 1); }) == static_cast<int>(ErrorCode::InvalidPrime));
  CHECK(error_code_of([] { (void)Field::parse("3^x"); }) == static_cast<int>(ErrorCode::ParseError));
  CHECK(error_code_of([] { (void)Field::of_order(9)->inv(0); }) == static_cast<int>(ErrorCode::DivisionByZero));
  const auto f3 = Field::of_order(3), f9 = Field::of_order(9);
  CHECK(error_code_of([&] { (void)(FieldElement(f3, 1) + FieldElement(f9, 1)); }) ==
        static_cast<int>(ErrorCode::FieldMismatch));
  CHECK(arith(FieldElement(f9, 3), FieldElement(f9, 2), ArithOp::Pow) == FieldElement(f9, f9->mul(3, 3)));
}

}  // TEST_SUITE
