// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "crsym/field.hpp"
#include "crsym/forms.hpp"
#include "crsym/linalg.hpp"
#include "crsym/vec_subspace.hpp"

namespace crsym {

/// Default enumeration budget for elements of a form space.
inline constexpr std::uint64_t kDefaultSpanBudget = 1ull << 22;

using Rational = boost::rational<std::int64_t>;

/// A nonzero subspace of Symm(V), kept in canonical form: the basis is the
/// reduced row echelon form of the upper-triangle coordinate vectors.
class FormSpace {
 public:
  /// Spans the given forms; throws InvalidArgument if they span zero.
  static FormSpace span(const std::vector<SymForm>& forms);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SymForm>& basis() const noexcept { return basis_; }
  /// d x n(n+1)/2 coordinate matrix (canonical RREF).
  const Mat& coordinate_matrix() const noexcept { return coords_; }

  /// q^d; throws BudgetExceeded past 64 bits.
  std::uint64_t size() const;
  SymForm element(std::span<const Elem> coords) const;
  /// The index-th element in span order: coordinate i is base-q digit i.
  SymForm element_at(std::uint64_t index) const;
  std::optional<std::vector<Elem>> coordinates(const SymForm& f) const;
  bool contains(const SymForm& f) const { return coordinates(f).has_value(); }
  /// The forms whose coordinates lie in the given subspace of F_q^d.
  FormSpace subspace(const VecSubspace& coord_subspace) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.n_ == b.n_ && a.field_->same_as(*b.field_) && a.coords_ == b.coords_;
  }

 private:
  FormSpace(FieldPtr field, std::size_t n, Mat coords);

  FieldPtr field_;
  std::size_t n_;
  Mat coords_;
  std::vector<std::size_t> pivots_;
  std::vector<SymForm> basis_;
};

/// Visits every element of M (zero first) in span order: fn(coords, form).
void for_each_span_element(const FormSpace& m,
                           const std::function<void(std::span<const Elem>, const SymForm&)>& fn,
                           std::uint64_t budget = kDefaultSpanBudget);
/// All q^d elements, zero first.
std::vector<SymForm> span_elements(const FormSpace& m, std::uint64_t budget = kDefaultSpanBudget);

/// r if every nonzero element has rank r.
std::optional<std::size_t> is_constant_rank(const FormSpace& m, std::uint64_t budget = kDefaultSpanBudget);

/// Vectors v with f(v,v) = 0 for every f in M (zero included), in counter
/// order.
std::vector<std::vector<Elem>> common_isotropic_points(const FormSpace& m,
                                                       std::uint64_t budget = kDefaultVectorBudget);

struct TypeCensus {
  std::uint64_t positive = 0;  // A
  std::uint64_t negative = 0;  // B
  std::map<std::size_t, std::uint64_t> odd_counts;
  std::map<std::size_t, std::uint64_t> rank_histogram;
  /// Per even rank: (positive, negative).
  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> even_counts;

  std::uint64_t total() const;
};

TypeCensus type_census(const FormSpace& m, TypeRule rule = TypeRule::Discriminant,
                       std::uint64_t budget = kDefaultSpanBudget);

/// Number of common isotropic points (zero included) of a d-dimensional
/// subspace of Symm(F_q^n) with the given census:
///   q^{n-d} + sum over nonzero rank-2k elements of eps * q^{n-d-k},
/// eps = +1 for positive type, -1 for negative. Odd ranks contribute 0.
/// A non-integral or negative value means no such subspace exists.
Rational common_isotropic_count_formula(std::size_t n, const TypeCensus& census, std::size_t d, std::uint32_t q);

/// M_U = {f in M : U <= rad f}, found by solving the linear conditions on
/// the coordinates of M.
struct FormSubspace {
  VecSubspace coords;             // inside F_q^d
  std::optional<FormSpace> space;  // absent when M_U = 0
  std::size_t dim() const noexcept { return coords.dim(); }
};
FormSubspace forms_with_radical_containing(const FormSpace& m, const VecSubspace& u);

struct PartitionSpec {
  VecSubspace ambient;
  std::vector<VecSubspace> pieces;
};

struct PartitionReport {
  bool valid = false;
  std::size_t t = 0;
  bool nontrivial = false;
  std::optional<std::uint64_t> min_bound;  // present when the bound applies
  bool min_bound_satisfied = true;
  std::map<std::size_t, std::size_t> piece_dims;  // dim -> count
  std::uint64_t uncovered = 0;
  std::uint64_t overcovered = 0;
  std::size_t zero_pieces = 0;
  std::size_t foreign_pieces = 0;  // not contained in the ambient space
};

/// q^m + 1 for n = 2m, q^{m+1} + 1 for n = 2m + 1.
std::uint64_t partition_min_bound(std::size_t n, std::uint32_t q);
PartitionReport check_partition(const PartitionSpec& p, std::uint64_t budget = kDefaultVectorBudget);

struct RadicalProfile {
  std::vector<std::pair<VecSubspace, std::uint64_t>> groups;  // sorted by radical
  std::size_t t = 0;
  std::optional<std::size_t> constant_rank;
  /// For constant rank n-1: the M_<u_i> as subspaces of F_q^d and the
  /// partition check over them.
  std::vector<VecSubspace> pieces;
  std::optional<PartitionReport> partition;
};
RadicalProfile radical_profile(const FormSpace& m, std::uint64_t budget = kDefaultSpanBudget);

/// Gaussian binomial [n choose d]_q by the product formula.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint32_t q);
/// Every d-dimensional subspace of F_q^n once, as canonical echelon bases,
/// ordered by pivot set then by free entries.
void for_each_subspace(FieldPtr field, std::size_t n, std::size_t d,
                       const std::function<void(const VecSubspace&)>& fn, std::uint64_t budget = kDefaultSpanBudget);
std::vector<VecSubspace> enumerate_subspaces(FieldPtr field, std::size_t n, std::size_t d,
                                             std::uint64_t budget = kDefaultSpanBudget);

/// Census plus the two common-isotropic counts, as printed by the CLI.
struct CensusReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  TypeCensus census;
  std::uint64_t common_isotropic_total = 0;
  Rational formula_value;
  bool agreement = false;
};
CensusReport census_report(const FormSpace& m, std::uint64_t vector_budget = kDefaultVectorBudget);

}  // namespace crsym
