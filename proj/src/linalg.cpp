// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/linalg.hpp"

#include <algorithm>

namespace crsym {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Mat::append_row(std::span<const Elem> r) {
  if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length does not match matrix width");
  data.insert(data.end(), r.begin(), r.end());
  ++rows;
}

void axpy(const Field& f, Elem a, std::span<const Elem> x, std::span<Elem> y) {
  if (a == 0) return;
  if (a == 1) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) y[i] = f.add(y[i], x[i]);
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = f.add(y[i], f.mul(a, x[i]));
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::uint64_t vector_index(std::uint32_t q, std::span<const Elem> v) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

std::vector<std::size_t> rref(const Field& f, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = f.inv(m(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = f.neg(m(i, c));
      for (std::size_t j = c; j < m.cols; ++j)
        if (m(r, j)) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_compact(const Field& f, Mat& m) {
  auto pivots = rref(f, m);
  m.rows = pivots.size();
  m.data.resize(m.rows * m.cols);
  return pivots;
}

std::size_t rank(const Field& f, Mat m) { return rref(f, m).size(); }

Mat nullspace(const Field& f, const Mat& m) {
  Mat work = m;
  const auto pivots = rref(f, work);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out(0, m.cols);
  std::vector<Elem> v(m.cols);
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(work(i, free));
    out.append_row(v);
  }
  rref_compact(f, out);
  return out;
}

std::optional<Mat> inverse(const Field& f, const Mat& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Mat multiply(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Mat out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a(i, k)) axpy(f, a(i, k), b.row(k), out.row(i));
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
  return out;
}

}  // namespace crsym
