// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/vec_subspace.hpp"

namespace crsym {

VecSubspace::VecSubspace(FieldPtr field, std::size_t ambient_dim)
    : field_(std::move(field)), n_(ambient_dim), basis_(0, ambient_dim) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
}

VecSubspace VecSubspace::span(FieldPtr field, std::size_t ambient_dim, Mat rows) {
  if (rows.cols != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "spanning vectors have wrong length");
  VecSubspace s(std::move(field), ambient_dim);
  s.pivots_ = rref_compact(*s.field_, rows);
  s.basis_ = std::move(rows);
  return s;
}

VecSubspace VecSubspace::span(FieldPtr field, std::size_t ambient_dim, const std::vector<std::vector<Elem>>& rows) {
  return span(std::move(field), ambient_dim, Mat::from_rows(rows, ambient_dim));
}

VecSubspace VecSubspace::full(FieldPtr field, std::size_t ambient_dim) {
  return span(std::move(field), ambient_dim, Mat::identity(ambient_dim));
}

bool VecSubspace::contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }

bool VecSubspace::contains(const VecSubspace& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<std::vector<Elem>> VecSubspace::coordinates(std::span<const Elem> v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  std::vector<Elem> coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  // v is in the span iff it equals the combination read off at the pivots.
  if (combine(coords) != std::vector<Elem>(v.begin(), v.end())) return std::nullopt;
  return coords;
}

std::vector<Elem> VecSubspace::combine(std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  std::vector<Elem> v(n_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(*field_, coords[i], basis_.row(i), v);
  return v;
}

VecSubspace VecSubspace::annihilator() const {
  if (dim() == 0) return full(field_, n_);
  return span(field_, n_, nullspace(*field_, basis_));
}

VecSubspace VecSubspace::intersect(const VecSubspace& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  Mat stacked = annihilator().basis_;
  const Mat& b = other.annihilator().basis_;
  for (std::size_t i = 0; i < b.rows; ++i) stacked.append_row(b.row(i));
  if (stacked.rows == 0) return full(field_, n_);
  return span(field_, n_, nullspace(*field_, stacked));
}

VecSubspace VecSubspace::sum(const VecSubspace& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  Mat stacked = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_vector(i));
  return span(field_, n_, std::move(stacked));
}

VecSubspace VecSubspace::standard_complement() const {
  std::vector<bool> is_pivot(n_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  Mat rows(0, n_);
  std::vector<Elem> e(n_, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    if (is_pivot[j]) continue;
    e[j] = 1;
    rows.append_row(e);
    e[j] = 0;
  }
  return span(field_, n_, std::move(rows));
}

std::uint64_t VecSubspace::size() const {
  return checked_pow(field_->order(), static_cast<std::uint32_t>(dim()));
}

}  // namespace crsym
