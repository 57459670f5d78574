// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "crsym/field.hpp"
#include "crsym/linalg.hpp"
#include "crsym/vec_subspace.hpp"

namespace crsym {

/// A symmetric bilinear form on V = F_q^n (q odd), held as its Gram matrix.
class SymForm {
 public:
  /// The zero form.
  SymForm(FieldPtr field, std::size_t n);
  /// Validates symmetry; throws NotSymmetric otherwise.
  SymForm(FieldPtr field, std::size_t n, std::vector<Elem> gram);
  /// From the n(n+1)/2 upper-triangle coordinates, row by row.
  static SymForm from_upper(FieldPtr field, std::size_t n, std::span<const Elem> coords);
  static SymForm from_mat(FieldPtr field, const Mat& gram);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t dim() const noexcept { return n_; }
  Elem at(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  std::span<const Elem> gram() const noexcept { return gram_; }
  Mat gram_matrix() const;
  std::vector<Elem> upper_coords() const;
  bool is_zero() const;

  /// f(u, w) = u^T G w.
  Elem eval(std::span<const Elem> u, std::span<const Elem> w) const;
  /// f(v, v).
  Elem quad(std::span<const Elem> v) const;

  SymForm scaled(Elem c) const;
  /// P^T G P for an n x m matrix P (columns are the new basis vectors).
  SymForm congruent(const Mat& p) const;
  friend SymForm operator+(const SymForm& a, const SymForm& b);
  friend SymForm operator-(const SymForm& a, const SymForm& b);
  friend bool operator==(const SymForm& a, const SymForm& b) {
    return a.n_ == b.n_ && a.field_->same_as(*b.field_) && a.gram_ == b.gram_;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Elem> gram_;
};

/// Number of upper-triangle coordinates of an n x n symmetric matrix.
constexpr std::size_t sym_coord_count(std::size_t n) { return n * (n + 1) / 2; }

enum class FormType { Zero, Odd, Positive, Negative };
std::string_view to_string(FormType t) noexcept;

/// How classify_type decides between Positive and Negative.
enum class TypeRule {
  Discriminant,  // (-1)^k times the product of the nonzero diagonal entries
  Counting,      // isotropic count against the two census values
  Checked,       // both; throws InternalInconsistency on disagreement
};

std::size_t rank(const SymForm& f);
VecSubspace radical(const SymForm& f);

struct Diagonalization {
  Mat basis_change;            // P, columns are the new basis vectors
  std::vector<Elem> diagonal;  // entries of P^T G P
  std::size_t rank = 0;
};
Diagonalization congruent_diagonalize(const SymForm& f);

/// N(f) = #{v : f(v,v) = 0}, zero vector included. Enumerates when q^n fits
/// the budget, otherwise uses the rank/type closed form.
std::uint64_t isotropic_count(const SymForm& f, std::uint64_t budget = kDefaultVectorBudget);
/// Closed-form N for a form of the given rank and type on F_q^n.
std::uint64_t isotropic_count_closed_form(std::uint32_t q, std::size_t n, std::size_t rank, FormType type);

FormType classify_type(const SymForm& f, TypeRule rule = TypeRule::Discriminant,
                       std::uint64_t budget = kDefaultVectorBudget);
bool is_hyperbolic_rank2(const SymForm& f);
/// Gram matrix of f on the echelon basis of U.
SymForm restrict_to(const SymForm& f, const VecSubspace& u);
/// Induced form on V/U realised on the standard complement of U; U must lie
/// in the radical.
SymForm quotient_by(const SymForm& f, const VecSubspace& u);

}  // namespace crsym
