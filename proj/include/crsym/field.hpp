// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crsym/error.hpp"

namespace crsym {

/// Canonical encoding of a field element: e(x) = sum_i c_i p^i where c_i are
/// the coefficients of x in the power basis of the modulus (constant first).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Version tag of the modulus selection rule. Bump whenever the choice of
/// modulus (and hence every element encoding) could change.
inline constexpr const char* kModulusRule = "lexmin-monic-irreducible/constant-first v1";

/// The finite field F_{p^k}, realised as F_p[x]/(m(x)) where m is the
/// lexicographically smallest monic irreducible of degree k (digit sequences
/// compared constant term first). Immutable once built; all members are safe
/// for concurrent readers.
class Field {
 public:
  /// Builds (or returns the cached) field of order p^k.
  static FieldPtr make(std::uint32_t p, std::uint32_t k);
  /// Builds the field of order q; q must be a prime power.
  static FieldPtr of_order(std::uint64_t q);
  /// Parses "p^k" or a bare prime power "q".
  static FieldPtr parse(std::string_view spec);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_odd() const noexcept { return p_ != 2; }
  /// Modulus digits, constant term first; k+1 entries, monic.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string name() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  bool contains(Elem x) const noexcept { return x < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// x^{p^i}.
  Elem frobenius(Elem x, std::uint32_t i) const noexcept;
  /// Absolute trace to the prime field: sum_{0<=i<k} x^{p^i}.
  Elem trace(Elem x) const noexcept;
  /// Relative trace to the subfield of degree m over F_p (m | k), returned in
  /// this field's encoding.
  Elem trace_to(Elem x, std::uint32_t m) const;
  /// True iff x is a nonzero square (q odd, x != 0).
  bool is_square(Elem x) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem x) const;
  /// The generator of F_q^* with smallest encoding.
  Elem generator() const noexcept { return generator_; }
  /// g^{(q-1)/m} for the canonical generator g; exact order m.
  Elem element_of_order(std::uint64_t m) const;
  /// The p^m elements fixed by x -> x^{p^m}, in increasing encoding order.
  std::vector<Elem> subfield_elements(std::uint32_t m) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k);

  Elem poly_mul(Elem a, Elem b) const;
  Elem poly_pow(Elem a, std::uint64_t e) const;
  Elem digit_add(Elem a, Elem b, bool subtract) const noexcept;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  Elem generator_ = 1;

  // Lookup tables, present when the field is small enough.
  std::vector<Elem> exp_;            // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
  std::vector<Elem> add_table_;      // q*q when q <= kAddTableLimit
  std::vector<Elem> neg_table_;
};

/// Factors q = p^k; throws InvalidArgument if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);
bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Exact integer power; throws InvalidArgument on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent);

enum class ArithOp { Add, Sub, Mul, Inv, Pow };

/// An element bound to its field, for callers that want checked arithmetic.
/// Bulk algorithms work on raw Elem values through Field instead.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem value_;
};

/// Binary/unary arithmetic dispatch. For Inv the second operand is ignored;
/// for Pow the exponent is the canonical encoding of b read as an integer.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Embedding of a subfield F_{p^a} (its own canonical model) into F_{p^k}.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr small, FieldPtr large);

  const FieldPtr& small() const noexcept { return small_; }
  const FieldPtr& large() const noexcept { return large_; }
  Elem embed(Elem x) const noexcept { return image_[x]; }
  /// Inverse image; throws NotASubfield if y is outside the image.
  Elem restrict(Elem y) const;
  bool in_image(Elem y) const noexcept { return preimage_[y] >= 0; }

 private:
  FieldPtr small_;
  FieldPtr large_;
  std::vector<Elem> image_;
  std::vector<std::int64_t> preimage_;
};

/// A basis of F_{p^k} over a subfield K = F_{p^a}, with K-coordinates.
class ExtensionBasis {
 public:
  ExtensionBasis(SubfieldEmbedding embedding, std::vector<Elem> basis);

  const SubfieldEmbedding& embedding() const noexcept { return emb_; }
  const FieldPtr& base() const noexcept { return emb_.small(); }
  const FieldPtr& extension() const noexcept { return emb_.large(); }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  /// K-coordinates of y (in K's own encoding).
  std::vector<Elem> coordinates(Elem y) const;
  /// sum_i c_i b_i with c_i in K.
  Elem combine(std::span<const Elem> coords) const;

 private:
  SubfieldEmbedding emb_;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> inverse_;  // F_p matrix, row-major (D x D)
};

}  // namespace crsym
