// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/subspace.hpp"

#include <algorithm>

namespace crsym {

namespace {

bool pow_fits(std::uint32_t q, std::size_t e, std::uint64_t budget) {
  try {
    return checked_pow(q, static_cast<std::uint32_t>(e)) <= budget;
  } catch (const Error&) {
    return false;
  }
}

Rational q_power(std::uint32_t q, std::int64_t e) {
  const auto mag = static_cast<std::int64_t>(checked_pow(q, static_cast<std::uint32_t>(e < 0 ? -e : e)));
  return e < 0 ? Rational(1, mag) : Rational(mag);
}

}  // namespace

FormSpace::FormSpace(FieldPtr field, std::size_t n, Mat coords)
    : field_(std::move(field)), n_(n), coords_(std::move(coords)) {
  pivots_ = rref_compact(*field_, coords_);
  if (coords_.rows == 0) throw Error(ErrorCode::InvalidArgument, "forms span the zero subspace");
  basis_.reserve(coords_.rows);
  for (std::size_t i = 0; i < coords_.rows; ++i) basis_.push_back(SymForm::from_upper(field_, n_, coords_.row(i)));
}

FormSpace FormSpace::span(const std::vector<SymForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "no forms given");
  const auto& field = forms.front().field_ptr();
  const std::size_t n = forms.front().dim();
  Mat coords(0, sym_coord_count(n));
  for (const auto& f : forms) {
    if (!f.field().same_as(*field)) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
    if (f.dim() != n) throw Error(ErrorCode::DimensionMismatch, "forms of different dimension");
    coords.append_row(f.upper_coords());
  }
  return FormSpace(field, n, std::move(coords));
}

std::uint64_t FormSpace::size() const {
  try {
    return checked_pow(field_->order(), static_cast<std::uint32_t>(dim()));
  } catch (const Error&) {
    throw Error(ErrorCode::BudgetExceeded, "form space too large to count");
  }
}

SymForm FormSpace::element(std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  std::vector<Elem> v(coords_.cols, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(*field_, coords[i], coords_.row(i), v);
  return SymForm::from_upper(field_, n_, v);
}

SymForm FormSpace::element_at(std::uint64_t index) const {
  std::vector<Elem> c(dim());
  for (auto& x : c) {
    x = static_cast<Elem>(index % field_->order());
    index /= field_->order();
  }
  if (index != 0) throw Error(ErrorCode::InvalidArgument, "span index out of range");
  return element(c);
}

std::optional<std::vector<Elem>> FormSpace::coordinates(const SymForm& f) const {
  if (f.dim() != n_ || !f.field().same_as(*field_)) return std::nullopt;
  const auto v = f.upper_coords();
  std::vector<Elem> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  if (element(c) != f) return std::nullopt;
  return c;
}

FormSpace FormSpace::subspace(const VecSubspace& coord_subspace) const {
  if (coord_subspace.ambient_dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate subspace");
  std::vector<SymForm> forms;
  for (std::size_t i = 0; i < coord_subspace.dim(); ++i) forms.push_back(element(coord_subspace.basis_vector(i)));
  return span(forms);
}

void for_each_span_element(const FormSpace& m,
                           const std::function<void(std::span<const Elem>, const SymForm&)>& fn,
                           std::uint64_t budget) {
  if (!pow_fits(m.field().order(), m.dim(), budget))
    throw Error(ErrorCode::BudgetExceeded, "span has more elements than the budget");
  for_each_vector(m.field().order(), m.dim(), [&](std::span<const Elem> c) { fn(c, m.element(c)); });
}

std::vector<SymForm> span_elements(const FormSpace& m, std::uint64_t budget) {
  std::vector<SymForm> out;
  for_each_span_element(m, [&](std::span<const Elem>, const SymForm& f) { out.push_back(f); }, budget);
  return out;
}

std::optional<std::size_t> is_constant_rank(const FormSpace& m, std::uint64_t budget) {
  std::optional<std::size_t> r;
  bool constant = true;
  for_each_span_element(
      m,
      [&](std::span<const Elem> c, const SymForm& f) {
        if (!constant || is_zero(c)) return;
        const std::size_t rf = rank(f);
        if (!r) r = rf;
        else if (*r != rf) constant = false;
      },
      budget);
  if (!constant) return std::nullopt;
  return r;
}

std::vector<std::vector<Elem>> common_isotropic_points(const FormSpace& m, std::uint64_t budget) {
  if (!pow_fits(m.field().order(), m.n(), budget))
    throw Error(ErrorCode::BudgetExceeded, "q^n exceeds the vector budget");
  std::vector<std::vector<Elem>> out;
  for_each_vector(m.field().order(), m.n(), [&](std::span<const Elem> v) {
    for (const auto& f : m.basis())
      if (f.quad(v) != 0) return;
    out.emplace_back(v.begin(), v.end());
  });
  return out;
}

std::uint64_t TypeCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [r, c] : rank_histogram) t += c;
  return t;
}

TypeCensus type_census(const FormSpace& m, TypeRule rule, std::uint64_t budget) {
  TypeCensus census;
  for_each_span_element(
      m,
      [&](std::span<const Elem> c, const SymForm& f) {
        if (is_zero(c)) return;
        const FormType t = classify_type(f, rule);
        const std::size_t r = t == FormType::Zero ? 0 : rank(f);
        ++census.rank_histogram[r];
        if (t == FormType::Odd) {
          ++census.odd_counts[r];
        } else if (t == FormType::Positive) {
          ++census.positive;
          ++census.even_counts[r].first;
        } else if (t == FormType::Negative) {
          ++census.negative;
          ++census.even_counts[r].second;
        }
      },
      budget);
  return census;
}

Rational common_isotropic_count_formula(std::size_t n, const TypeCensus& census, std::size_t d, std::uint32_t q) {
  const std::uint64_t expected = checked_pow(q, static_cast<std::uint32_t>(d)) - 1;
  if (census.total() != expected)
    throw Error(ErrorCode::CensusInvalid,
                "census totals " + std::to_string(census.total()) + ", expected " + std::to_string(expected));
  const auto base = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(d);
  Rational value = q_power(q, base);
  for (const auto& [r, pn] : census.even_counts) {
    if (r == 0) continue;
    const auto k = static_cast<std::int64_t>(r / 2);
    const auto diff = static_cast<std::int64_t>(pn.first) - static_cast<std::int64_t>(pn.second);
    value += Rational(diff) * q_power(q, base - k);
  }
  return value;
}

FormSubspace forms_with_radical_containing(const FormSpace& m, const VecSubspace& u) {
  if (u.ambient_dim() != m.n()) throw Error(ErrorCode::DimensionMismatch, "subspace lives in another space");
  if (!u.field()->same_as(m.field())) throw Error(ErrorCode::FieldMismatch, "subspace over another field");
  const Field& f = m.field();
  const std::size_t n = m.n(), d = m.dim();
  // Row (j, i): sum_l c_l (G_l u_j)_i = 0.
  Mat system(u.dim() * n, d);
  for (std::size_t j = 0; j < u.dim(); ++j) {
    const auto uj = u.basis_vector(j);
    for (std::size_t l = 0; l < d; ++l) {
      const SymForm& g = m.basis()[l];
      for (std::size_t i = 0; i < n; ++i) {
        Elem acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (uj[k]) acc = f.add(acc, f.mul(g.at(i, k), uj[k]));
        system(j * n + i, l) = acc;
      }
    }
  }
  FormSubspace out{u.dim() == 0 ? VecSubspace::full(m.field_ptr(), d)
                                : VecSubspace::span(m.field_ptr(), d, nullspace(f, system)),
                   std::nullopt};
  if (out.coords.dim() > 0) out.space = m.subspace(out.coords);
  return out;
}

std::uint64_t partition_min_bound(std::size_t n, std::uint32_t q) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "partition bound needs n >= 2");
  const std::size_t m = n / 2;
  if (n % 2 == 0) return checked_pow(q, static_cast<std::uint32_t>(m)) + 1;
  return checked_pow(q, static_cast<std::uint32_t>(m + 1)) + 1;
}

PartitionReport check_partition(const PartitionSpec& p, std::uint64_t budget) {
  PartitionReport rep;
  const VecSubspace& amb = p.ambient;
  const std::uint32_t q = amb.field()->order();
  if (!pow_fits(q, amb.dim(), budget)) throw Error(ErrorCode::BudgetExceeded, "ambient space exceeds the budget");
  std::vector<std::uint32_t> hits(amb.size(), 0);
  for (const auto& piece : p.pieces) {
    ++rep.piece_dims[piece.dim()];
    if (piece.dim() == 0) {
      ++rep.zero_pieces;
      continue;
    }
    if (piece.ambient_dim() != amb.ambient_dim() || !amb.contains(piece)) {
      ++rep.foreign_pieces;
      continue;
    }
    piece.for_each_element(
        [&](std::span<const Elem> v) {
          if (is_zero(v)) return;
          ++hits[vector_index(q, *amb.coordinates(v))];
        },
        budget);
  }
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i] == 0) ++rep.uncovered;
    if (hits[i] > 1) ++rep.overcovered;
  }
  rep.t = p.pieces.size();
  rep.valid = rep.uncovered == 0 && rep.overcovered == 0 && rep.zero_pieces == 0 && rep.foreign_pieces == 0;
  rep.nontrivial = rep.t > 1;
  if (rep.nontrivial && amb.dim() >= 2) {
    rep.min_bound = partition_min_bound(amb.dim(), q);
    rep.min_bound_satisfied = rep.t >= *rep.min_bound;
  }
  return rep;
}

RadicalProfile radical_profile(const FormSpace& m, std::uint64_t budget) {
  RadicalProfile prof;
  std::map<VecSubspace, std::uint64_t> groups;
  std::optional<std::size_t> r;
  bool constant = true;
  for_each_span_element(
      m,
      [&](std::span<const Elem> c, const SymForm& f) {
        if (is_zero(c)) return;
        VecSubspace rad = radical(f);
        const std::size_t rf = m.n() - rad.dim();
        if (!r) r = rf;
        else if (*r != rf) constant = false;
        ++groups[std::move(rad)];
      },
      budget);
  for (auto& [rad, count] : groups) prof.groups.emplace_back(rad, count);
  prof.t = prof.groups.size();
  if (constant) prof.constant_rank = r;
  if (constant && r && *r + 1 == m.n()) {
    PartitionSpec spec{VecSubspace::full(m.field_ptr(), m.dim()), {}};
    for (const auto& [rad, count] : prof.groups) {
      auto piece = forms_with_radical_containing(m, rad).coords;
      prof.pieces.push_back(piece);
      spec.pieces.push_back(std::move(piece));
    }
    prof.partition = check_partition(spec, budget);
  }
  return prof;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d, std::uint32_t q) {
  if (d > n) return 0;
  unsigned __int128 result = 1;
  for (std::size_t i = 0; i < d; ++i) {
    const unsigned __int128 num = checked_pow(q, static_cast<std::uint32_t>(n - i)) - 1;
    const unsigned __int128 den = checked_pow(q, static_cast<std::uint32_t>(i + 1)) - 1;
    result = result * num / den;
  }
  if (result > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorCode::BudgetExceeded, "Gaussian binomial overflows 64 bits");
  return static_cast<std::uint64_t>(result);
}

void for_each_subspace(FieldPtr field, std::size_t n, std::size_t d,
                       const std::function<void(const VecSubspace&)>& fn, std::uint64_t budget) {
  if (d > n) return;
  if (gaussian_binomial(n, d, field->order()) > budget)
    throw Error(ErrorCode::BudgetExceeded, "too many subspaces to enumerate");
  const std::uint32_t q = field->order();
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    // Free positions: (row i, column j) with j > piv[i] and j not a pivot.
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);
    for_each_vector(q, free.size(), [&](std::span<const Elem> vals) {
      Mat b(d, n);
      for (std::size_t i = 0; i < d; ++i) b(i, piv[i]) = 1;
      for (std::size_t f = 0; f < free.size(); ++f) b(free[f].first, free[f].second) = vals[f];
      fn(VecSubspace::span(field, n, std::move(b)));
    });
    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<VecSubspace> enumerate_subspaces(FieldPtr field, std::size_t n, std::size_t d, std::uint64_t budget) {
  std::vector<VecSubspace> out;
  for_each_subspace(std::move(field), n, d, [&](const VecSubspace& s) { out.push_back(s); }, budget);
  return out;
}

CensusReport census_report(const FormSpace& m, std::uint64_t vector_budget) {
  CensusReport rep;
  rep.q = m.field().order();
  rep.n = m.n();
  rep.d = m.dim();
  rep.census = type_census(m);
  rep.common_isotropic_total = common_isotropic_points(m, vector_budget).size();
  rep.formula_value = common_isotropic_count_formula(rep.n, rep.census, rep.d, rep.q);
  rep.agreement = rep.formula_value == Rational(static_cast<std::int64_t>(rep.common_isotropic_total));
  return rep;
}

}  // namespace crsym
