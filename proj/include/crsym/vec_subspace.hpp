// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crsym/field.hpp"
#include "crsym/linalg.hpp"

namespace crsym {

/// Default enumeration budget for vectors of V.
inline constexpr std::uint64_t kDefaultVectorBudget = 1ull << 20;

/// A subspace of F_q^n stored by its reduced row echelon basis, so two
/// subspaces are equal iff their bases are equal.
class VecSubspace {
 public:
  /// The zero subspace of F_q^n.
  VecSubspace(FieldPtr field, std::size_t ambient_dim);

  static VecSubspace span(FieldPtr field, std::size_t ambient_dim, Mat rows);
  static VecSubspace span(FieldPtr field, std::size_t ambient_dim, const std::vector<std::vector<Elem>>& rows);
  static VecSubspace full(FieldPtr field, std::size_t ambient_dim);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.rows; }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::span<const Elem> basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(std::span<const Elem> v) const;
  bool contains(const VecSubspace& other) const;
  /// Coordinates of v in the echelon basis (read off at the pivots), or
  /// nullopt if v is not in the subspace.
  std::optional<std::vector<Elem>> coordinates(std::span<const Elem> v) const;
  std::vector<Elem> combine(std::span<const Elem> coords) const;

  VecSubspace intersect(const VecSubspace& other) const;
  VecSubspace sum(const VecSubspace& other) const;
  /// {x : x . v = 0 for all v in this}, under the standard dot product.
  VecSubspace annihilator() const;
  /// The complement spanned by the standard basis vectors at non-pivot
  /// columns.
  VecSubspace standard_complement() const;

  std::uint64_t size() const;  // q^dim
  /// Visits every element (zero first) in coordinate counter order.
  template <class Fn>
  void for_each_element(Fn&& fn, std::uint64_t budget = kDefaultVectorBudget) const;

  friend bool operator==(const VecSubspace& a, const VecSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend auto operator<=>(const VecSubspace& a, const VecSubspace& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

template <class Fn>
void VecSubspace::for_each_element(Fn&& fn, std::uint64_t budget) const {
  if (size() > budget) throw Error(ErrorCode::BudgetExceeded, "subspace has more elements than the budget");
  const Field& f = *field_;
  std::vector<Elem> v(n_, 0);
  for_each_vector(f.order(), dim(), [&](std::span<const Elem> c) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(f, c[i], basis_.row(i), v);
    fn(std::span<const Elem>(v));
  });
}

}  // namespace crsym
