// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crsym/field.hpp"

namespace crsym {

/// Dense row-major matrix of field encodings. The field travels separately.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Elem> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Elem> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);
  void append_row(std::span<const Elem> r);

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    if (auto c = a.cols <=> b.cols; c != 0) return c;
    return a.data <=> b.data;
  }
};

/// Reduces m to reduced row echelon form in place and returns the pivot
/// columns. Zero rows are kept at the bottom.
std::vector<std::size_t> rref(const Field& f, Mat& m);
/// As rref, then drops the zero rows.
std::vector<std::size_t> rref_compact(const Field& f, Mat& m);
std::size_t rank(const Field& f, Mat m);
/// Canonical (RREF) basis of {x : m x = 0}, one vector per row.
Mat nullspace(const Field& f, const Mat& m);
std::optional<Mat> inverse(const Field& f, const Mat& m);
Mat multiply(const Field& f, const Mat& a, const Mat& b);
Mat transpose(const Mat& m);

/// Vector helpers over a field.
void axpy(const Field& f, Elem a, std::span<const Elem> x, std::span<Elem> y);  // y += a x
bool is_zero(std::span<const Elem> v);

/// Calls fn(v) for each of the q^n vectors of F_q^n in base-q counter order
/// (coordinate 0 least significant), starting with the zero vector.
template <class Fn>
void for_each_vector(std::uint32_t q, std::size_t n, Fn&& fn) {
  std::vector<Elem> v(n, 0);
  while (true) {
    fn(std::span<const Elem>(v));
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return;
  }
}

/// Index of v in the counter order above.
std::uint64_t vector_index(std::uint32_t q, std::span<const Elem> v);

}  // namespace crsym
