// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/construct.hpp"

namespace crsym {

namespace {

// Power basis 1, x, ..., x^{d-1} of L over K, where x is the generator of
// L's defining modulus and d = [L : K].
ExtensionBasis power_basis(const FieldPtr& k, const FieldPtr& l) {
  const std::uint32_t d = l->degree() / k->degree();
  const Elem x = l->degree() > 1 ? l->characteristic() : 1;
  std::vector<Elem> b;
  for (std::uint32_t j = 0; j < d; ++j) b.push_back(l->pow(x, j));
  return ExtensionBasis(SubfieldEmbedding(k, l), std::move(b));
}

// The first `count` candidates that are K-linearly independent.
std::vector<Elem> greedy_independent(const ExtensionBasis& eb, const std::vector<Elem>& candidates, std::size_t count) {
  const Field& k = *eb.base();
  std::vector<Elem> chosen;
  Mat rows(0, eb.dim());
  for (Elem y : candidates) {
    if (chosen.size() == count) break;
    if (y == 0) continue;
    Mat trial = rows;
    trial.append_row(eb.coordinates(y));
    if (rank(k, trial) == trial.rows) {
      rows = std::move(trial);
      chosen.push_back(y);
    }
  }
  if (chosen.size() != count) throw Error(ErrorCode::InternalInconsistency, "subfield basis incomplete");
  return chosen;
}

VecSubspace span_of_elements(const ExtensionBasis& eb, const std::vector<Elem>& elems) {
  Mat rows(0, eb.dim());
  for (Elem y : elems) rows.append_row(eb.coordinates(y));
  return VecSubspace::span(eb.base(), eb.dim(), std::move(rows));
}

FieldPtr extension_of(const FieldPtr& k, std::size_t degree) {
  const std::uint64_t total = static_cast<std::uint64_t>(k->degree()) * degree;
  if (total > 64) throw Error(ErrorCode::InvalidArgument, "extension degree too large");
  return Field::make(k->characteristic(), static_cast<std::uint32_t>(total));
}

FieldPtr odd_field(std::uint32_t q) {
  auto k = Field::of_order(q);
  if (!k->is_odd()) throw Error(ErrorCode::EvenCharUnsupported, "forms need odd q");
  return k;
}

}  // namespace

Elem TraceSetup::trace(Elem y) const { return l_over_k.embedding().restrict(l->trace_to(y, k->degree())); }

SymForm TraceSetup::full_form(Elem z) const {
  const auto& b = l_over_k.basis();
  const std::size_t d = b.size();
  std::vector<Elem> gram(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) gram[i * d + j] = gram[j * d + i] = trace(l->mul(z, l->mul(b[i], b[j])));
  return SymForm(k, d, std::move(gram));
}

SymForm TraceSetup::form(Elem z) const {
  const std::size_t d = v_basis.size();
  std::vector<Elem> gram(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      gram[i * d + j] = gram[j * d + i] = trace(l->mul(z, l->mul(v_basis[i], v_basis[j])));
  return SymForm(k, d, std::move(gram));
}

std::vector<Elem> TraceSetup::v_coordinates(Elem y) const {
  auto c = v_coords.coordinates(l_over_k.coordinates(y));
  if (!c) throw Error(ErrorCode::InvalidArgument, "element is not in V");
  return *c;
}

TraceSetup make_trace_setup(std::uint32_t q, std::size_t n, unsigned m) {
  auto k = odd_field(q);
  if (n < 2) throw Error(ErrorCode::TooSmall, "trace construction needs n >= 2");
  auto l = extension_of(k, n + 1);
  TraceSetup s{k, l, power_basis(k, l), m, {}, 0, VecSubspace(k, n + 1), {}};

  if (m <= 1) {
    s.m = 1;
    s.m_basis = {1};
  } else {
    s.m_basis = greedy_independent(s.l_over_k, l->subfield_elements(k->degree() * m), m);
  }

  for (Elem c = 1; c < l->order(); ++c) {
    bool ok = true;
    for (Elem w : s.m_basis)
      if (s.trace(l->mul(c, w)) != 0) {
        ok = false;
        break;
      }
    if (ok) {
      s.c = c;
      break;
    }
  }
  if (s.c == 0) throw Error(ErrorCode::InternalInconsistency, "no element orthogonal to the subfield");

  Mat functional(1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) functional(0, j) = s.trace(l->mul(s.c, s.l_over_k.basis()[j]));
  s.v_coords = VecSubspace::span(k, n + 1, nullspace(*k, functional));
  for (std::size_t i = 0; i < s.v_coords.dim(); ++i) s.v_basis.push_back(s.l_over_k.combine(s.v_coords.basis_vector(i)));
  return s;
}

TraceSpace trace_space(std::uint32_t q, std::size_t n) {
  TraceSetup s = make_trace_setup(q, n);
  std::vector<SymForm> forms;
  for (Elem b : s.l_over_k.basis()) forms.push_back(s.form(b));
  FormSpace space = FormSpace::span(forms);
  return {std::move(s), std::move(space)};
}

FormSpace full_trace_space(std::uint32_t q, std::size_t r) {
  auto k = odd_field(q);
  if (r == 0) throw Error(ErrorCode::TooSmall, "need r >= 1");
  auto l = extension_of(k, r);
  TraceSetup s{k, l, power_basis(k, l), 1, {1}, 0, VecSubspace(k, r), {}};
  std::vector<SymForm> forms;
  for (Elem b : s.l_over_k.basis()) forms.push_back(s.full_form(b));
  return FormSpace::span(forms);
}

DistinctRadicalSpace distinct_radical_space(std::uint32_t q, std::size_t n, unsigned m) {
  if (m <= 1 || m >= n + 1 || (n + 1) % m != 0)
    throw Error(ErrorCode::NoSubfield,
                "no intermediate field of degree " + std::to_string(m) + " in degree " + std::to_string(n + 1));
  TraceSetup s = make_trace_setup(q, n, m);
  const Field& l = *s.l;

  Elem z = 0;
  for (Elem cand = 1; cand < l.order(); ++cand)
    if (rank(s.form(cand)) + 1 == n) {
      z = cand;
      break;
    }
  if (z == 0) throw Error(ErrorCode::InternalInconsistency, "no f'_z of rank n-1");

  const VecSubspace rad = radical(s.form(z));
  if (rad.dim() != 1) throw Error(ErrorCode::InternalInconsistency, "radical of f'_z is not a line");
  Elem u = 0;
  for (std::size_t i = 0; i < n; ++i) u = l.add(u, l.mul(s.l_over_k.embedding().embed(rad.basis()(0, i)), s.v_basis[i]));

  std::vector<SymForm> gens;
  for (Elem w : s.m_basis) gens.push_back(s.form(l.mul(z, l.mul(u, w))));
  FormSpace space = FormSpace::span(gens);

  std::vector<std::string> warnings;
  if (q < n) warnings.push_back("q < n: radical guarantees are not covered by the bound");
  std::vector<Elem> w_basis = s.m_basis;
  return {std::move(s), z, u, std::move(w_basis), std::move(gens), std::move(space), std::move(warnings)};
}

FormSpace inflate(const FormSpace& N, std::size_t n) {
  const std::size_t r = N.n();
  if (r > n) throw Error(ErrorCode::DimensionMismatch, "cannot inflate to a smaller space");
  const std::size_t off = n - r;
  std::vector<SymForm> forms;
  for (const auto& f : N.basis()) {
    std::vector<Elem> gram(n * n, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) gram[(off + i) * n + off + j] = f.at(i, j);
    forms.emplace_back(N.field_ptr(), n, std::move(gram));
  }
  return FormSpace::span(forms);
}

FormSpace hyperbolic_rank2_space(std::uint32_t q, std::size_t n) {
  auto k = odd_field(q);
  if (n < 2) throw Error(ErrorCode::TooSmall, "need n >= 2");
  std::vector<SymForm> forms;
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Elem> gram(n * n, 0);
    gram[j] = gram[j * n] = 1;
    forms.emplace_back(k, n, std::move(gram));
  }
  return FormSpace::span(forms);
}

FormSpace positive_rank2t_space(std::uint32_t q, std::size_t n, std::size_t t) {
  auto k = odd_field(q);
  if (t == 0) throw Error(ErrorCode::TooSmall, "need t >= 1");
  if (n < 2 * t) throw Error(ErrorCode::Unsupported, "block construction needs n >= 2t");
  const std::size_t e = n - t;
  auto f = extension_of(k, e);
  const ExtensionBasis eb = power_basis(k, f);
  std::vector<SymForm> forms;
  for (Elem a : eb.basis()) {
    std::vector<Elem> gram(n * n, 0);
    for (std::size_t j = 0; j < e; ++j) {
      const auto col = eb.coordinates(f->mul(a, eb.basis()[j]));
      for (std::size_t i = 0; i < t; ++i) gram[i * n + t + j] = gram[(t + j) * n + i] = col[i];
    }
    forms.emplace_back(k, n, std::move(gram));
  }
  return FormSpace::span(forms);
}

namespace {

// phi_x(b_i, b_j) = Tr(x^9 b_i b_j + x b_i^9 b_j + x b_i b_j^9).
SymForm rank4_f3_gram(const FieldPtr& k, const Field& L, const std::vector<Elem>& basis, Elem x) {
  const std::size_t n = basis.size();
  const Elem x9 = L.pow(x, 9);
  std::vector<Elem> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Elem bi = basis[i], bj = basis[j];
      Elem s = L.mul(x9, L.mul(bi, bj));
      s = L.add(s, L.mul(x, L.mul(L.pow(bi, 9), bj)));
      s = L.add(s, L.mul(x, L.mul(bi, L.pow(bj, 9))));
      gram[i * n + j] = gram[j * n + i] = L.trace(s);
    }
  return SymForm(k, n, std::move(gram));
}

}  // namespace

SymForm Rank4F3Space::phi(Elem x) const { return rank4_f3_gram(k, *l, basis, x); }

std::vector<Elem> Rank4F3Space::coords(Elem y) const {
  const auto d = l->digits(y);
  return {d.begin(), d.end()};
}

Rank4F3Space rank4_f3_space() {
  auto k = Field::make(3, 1);
  auto l = Field::make(3, 5);
  std::vector<Elem> basis;
  for (std::uint32_t i = 0; i < 5; ++i) basis.push_back(l->pow(3, i));
  const Elem eps = l->element_of_order(11);
  Mat s(5, 5), t(5, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    const auto sj = l->digits(l->frobenius(basis[j], 1));
    const auto tj = l->digits(l->mul(eps, basis[j]));
    for (std::size_t i = 0; i < 5; ++i) {
      s(i, j) = sj[i];
      t(i, j) = tj[i];
    }
  }
  std::vector<SymForm> forms;
  for (Elem b : basis) forms.push_back(rank4_f3_gram(k, *l, basis, b));
  FormSpace space = FormSpace::span(forms);
  return {k, l, std::move(basis), eps, std::move(s), std::move(t), std::move(space)};
}

PartitionSpec spread(std::uint32_t q, std::size_t m) {
  auto k = Field::of_order(q);
  if (m == 0) throw Error(ErrorCode::TooSmall, "need m >= 1");
  auto f = extension_of(k, 2 * m);
  const ExtensionBasis eb = power_basis(k, f);
  const auto sub = greedy_independent(eb, f->subfield_elements(k->degree() * static_cast<std::uint32_t>(m)), m);
  const std::uint64_t pieces = checked_pow(q, static_cast<std::uint32_t>(m)) + 1;
  PartitionSpec spec{VecSubspace::full(k, 2 * m), {}};
  const Elem g = f->generator();
  Elem alpha = 1;
  for (std::uint64_t i = 0; i < pieces; ++i) {
    std::vector<Elem> gens;
    for (Elem w : sub) gens.push_back(f->mul(alpha, w));
    spec.pieces.push_back(span_of_elements(eb, gens));
    alpha = f->mul(alpha, g);
  }
  return spec;
}

PartitionSpec odd_partition(std::uint32_t q, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::TooSmall, "need m >= 1");
  const PartitionSpec y = spread(q, m + 1);
  const auto& k = y.ambient.field();
  const VecSubspace& y1 = y.pieces.front();
  Mat functional(0, 2 * m + 2);
  functional.append_row(y1.annihilator().basis_vector(0));
  const VecSubspace x = VecSubspace::span(k, 2 * m + 2, nullspace(*k, functional));

  PartitionSpec spec{VecSubspace::full(k, 2 * m + 1), {}};
  for (const auto& piece : y.pieces) {
    const VecSubspace cut = piece.intersect(x);
    Mat rows(0, 2 * m + 1);
    for (std::size_t i = 0; i < cut.dim(); ++i) rows.append_row(*x.coordinates(cut.basis_vector(i)));
    spec.pieces.push_back(VecSubspace::span(k, 2 * m + 1, std::move(rows)));
  }
  return spec;
}

}  // namespace crsym
