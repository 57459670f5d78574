// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/forms.hpp"

#include <utility>

namespace crsym {

namespace {

void require_odd(const Field& f) {
  if (!f.is_odd()) throw Error(ErrorCode::EvenCharUnsupported, "symmetric forms need odd characteristic");
}

}  // namespace

SymForm::SymForm(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), gram_(n * n, 0) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  require_odd(*field_);
}

SymForm::SymForm(FieldPtr field, std::size_t n, std::vector<Elem> gram)
    : field_(std::move(field)), n_(n), gram_(std::move(gram)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  require_odd(*field_);
  if (gram_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "Gram matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!field_->contains(gram_[i * n + j])) throw Error(ErrorCode::InvalidArgument, "Gram entry out of range");
      if (gram_[i * n + j] != gram_[j * n + i])
        throw Error(ErrorCode::NotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");
    }
  }
}

SymForm SymForm::from_upper(FieldPtr field, std::size_t n, std::span<const Elem> coords) {
  if (coords.size() != sym_coord_count(n)) throw Error(ErrorCode::DimensionMismatch, "wrong coordinate count");
  std::vector<Elem> g(n * n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i * n + j] = g[j * n + i] = coords[c++];
  return SymForm(std::move(field), n, std::move(g));
}

SymForm SymForm::from_mat(FieldPtr field, const Mat& gram) {
  if (gram.rows != gram.cols) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square");
  return SymForm(std::move(field), gram.rows, gram.data);
}

Mat SymForm::gram_matrix() const {
  Mat m(n_, n_);
  m.data = gram_;
  return m;
}

std::vector<Elem> SymForm::upper_coords() const {
  std::vector<Elem> out;
  out.reserve(sym_coord_count(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) out.push_back(gram_[i * n_ + j]);
  return out;
}

bool SymForm::is_zero() const { return crsym::is_zero(gram_); }

Elem SymForm::eval(std::span<const Elem> u, std::span<const Elem> w) const {
  if (u.size() != n_ || w.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length");
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!u[i]) continue;
    Elem row = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (w[j] && gram_[i * n_ + j]) row = f.add(row, f.mul(gram_[i * n_ + j], w[j]));
    acc = f.add(acc, f.mul(u[i], row));
  }
  return acc;
}

Elem SymForm::quad(std::span<const Elem> v) const { return eval(v, v); }

SymForm SymForm::scaled(Elem c) const {
  SymForm out(field_, n_);
  for (std::size_t i = 0; i < gram_.size(); ++i) out.gram_[i] = field_->mul(c, gram_[i]);
  return out;
}

SymForm SymForm::congruent(const Mat& p) const {
  if (p.rows != n_) throw Error(ErrorCode::DimensionMismatch, "basis change has wrong row count");
  const Field& f = *field_;
  const Mat gp = multiply(f, gram_matrix(), p);
  const Mat out = multiply(f, transpose(p), gp);
  return SymForm(field_, out.rows, out.data);
}

SymForm operator+(const SymForm& a, const SymForm& b) {
  if (!a.field_->same_as(*b.field_)) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "forms of different dimension");
  SymForm out = a;
  for (std::size_t i = 0; i < out.gram_.size(); ++i) out.gram_[i] = a.field_->add(a.gram_[i], b.gram_[i]);
  return out;
}

SymForm operator-(const SymForm& a, const SymForm& b) { return a + b.scaled(a.field_->neg(1)); }

std::string_view to_string(FormType t) noexcept {
  switch (t) {
    case FormType::Zero: return "zero";
    case FormType::Odd: return "odd";
    case FormType::Positive: return "positive";
    case FormType::Negative: return "negative";
  }
  return "?";
}

std::size_t rank(const SymForm& f) { return crsym::rank(f.field(), f.gram_matrix()); }

VecSubspace radical(const SymForm& f) {
  return VecSubspace::span(f.field_ptr(), f.dim(), nullspace(f.field(), f.gram_matrix()));
}

Diagonalization congruent_diagonalize(const SymForm& form) {
  const Field& f = form.field();
  require_odd(f);
  const std::size_t n = form.dim();
  Mat g = form.gram_matrix();
  Mat p = Mat::identity(n);

  // Simultaneous row/column operations; p accumulates the column operations.
  auto add_multiple = [&](std::size_t dst, std::size_t src, Elem c) {  // v_dst += c v_src
    for (std::size_t k = 0; k < n; ++k) g(dst, k) = f.add(g(dst, k), f.mul(c, g(src, k)));
    for (std::size_t k = 0; k < n; ++k) g(k, dst) = f.add(g(k, dst), f.mul(c, g(k, src)));
    for (std::size_t k = 0; k < n; ++k) p(k, dst) = f.add(p(k, dst), f.mul(c, p(k, src)));
  };
  auto swap_vectors = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) std::swap(g(a, k), g(b, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(g(k, a), g(k, b));
    for (std::size_t k = 0; k < n; ++k) std::swap(p(k, a), p(k, b));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < n && g(j, j) == 0) ++j;
      if (j < n) {
        swap_vectors(i, j);
      } else {
        // Zero diagonal: v_i <- v_i + v_j makes g(i,i) = 2 g(i,j) != 0.
        j = i + 1;
        while (j < n && g(i, j) == 0) ++j;
        if (j == n) continue;
        add_multiple(i, j, 1);
      }
    }
    const Elem inv = f.inv(g(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(j, i) == 0) continue;
      add_multiple(j, i, f.neg(f.mul(g(j, i), inv)));
    }
  }

  Diagonalization out;
  out.basis_change = std::move(p);
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = g(i, i);
    if (g(i, i)) ++out.rank;
  }
  return out;
}

std::uint64_t isotropic_count_closed_form(std::uint32_t q, std::size_t n, std::size_t rank, FormType type) {
  const auto pw = [&](std::size_t e) { return checked_pow(q, static_cast<std::uint32_t>(e)); };
  if (rank == 0) return pw(n);
  if (rank % 2 == 1) return pw(n - 1);
  const std::size_t k = rank / 2;
  const std::uint64_t delta = pw(n - k) - pw(n - k - 1);
  if (type == FormType::Positive) return pw(n - 1) + delta;
  if (type == FormType::Negative) return pw(n - 1) - delta;
  throw Error(ErrorCode::InvalidArgument, "even nonzero rank needs a Positive or Negative type");
}

namespace {

std::uint64_t enumerate_isotropic(const SymForm& form) {
  std::uint64_t count = 0;
  for_each_vector(form.field().order(), form.dim(), [&](std::span<const Elem> v) {
    if (form.quad(v) == 0) ++count;
  });
  return count;
}

FormType discriminant_type(const Field& f, const Diagonalization& d) {
  Elem prod = 1;
  for (Elem e : d.diagonal)
    if (e) prod = f.mul(prod, e);
  const std::size_t k = d.rank / 2;
  if (k % 2 == 1) prod = f.neg(prod);
  return f.is_square(prod) ? FormType::Positive : FormType::Negative;
}

FormType counting_type(const SymForm& form, std::size_t r) {
  const std::uint32_t q = form.field().order();
  const std::size_t n = form.dim();
  const std::uint64_t count = enumerate_isotropic(form);
  if (count == isotropic_count_closed_form(q, n, r, FormType::Positive)) return FormType::Positive;
  if (count == isotropic_count_closed_form(q, n, r, FormType::Negative)) return FormType::Negative;
  throw Error(ErrorCode::InternalInconsistency,
              "isotropic count " + std::to_string(count) + " matches neither census value");
}

}  // namespace

std::uint64_t isotropic_count(const SymForm& f, std::uint64_t budget) {
  const std::uint32_t q = f.field().order();
  bool fits = true;
  try {
    fits = checked_pow(q, static_cast<std::uint32_t>(f.dim())) <= budget;
  } catch (const Error&) {
    fits = false;
  }
  if (fits) return enumerate_isotropic(f);
  const auto d = congruent_diagonalize(f);
  const FormType t = d.rank == 0 ? FormType::Zero
                     : d.rank % 2 ? FormType::Odd
                                  : discriminant_type(f.field(), d);
  return isotropic_count_closed_form(q, f.dim(), d.rank, t);
}

FormType classify_type(const SymForm& f, TypeRule rule, std::uint64_t budget) {
  require_odd(f.field());
  const auto d = congruent_diagonalize(f);
  if (d.rank == 0) return FormType::Zero;
  if (d.rank % 2 == 1) return FormType::Odd;

  bool can_count = true;
  try {
    can_count = checked_pow(f.field().order(), static_cast<std::uint32_t>(f.dim())) <= budget;
  } catch (const Error&) {
    can_count = false;
  }
  switch (rule) {
    case TypeRule::Discriminant:
      return discriminant_type(f.field(), d);
    case TypeRule::Counting:
      if (!can_count) throw Error(ErrorCode::BudgetExceeded, "q^n exceeds the isotropic enumeration budget");
      return counting_type(f, d.rank);
    case TypeRule::Checked: {
      const FormType fast = discriminant_type(f.field(), d);
      if (can_count && counting_type(f, d.rank) != fast)
        throw Error(ErrorCode::InternalInconsistency, "discriminant and counting rules disagree");
      return fast;
    }
  }
  return discriminant_type(f.field(), d);
}

bool is_hyperbolic_rank2(const SymForm& f) {
  const VecSubspace rad = radical(f);
  if (f.dim() - rad.dim() != 2)
    throw Error(ErrorCode::RankMismatch, "hyperbolic type is defined for rank 2 only");
  // w = r + c with r in the radical gives f(w,w) = f(c,c), so it suffices to
  // look at the nonzero vectors of a complement.
  const SymForm g = restrict_to(f, rad.standard_complement());
  bool found = false;
  for_each_vector(f.field().order(), 2, [&](std::span<const Elem> c) {
    if (!found && !is_zero(c) && g.quad(c) == 0) found = true;
  });
  return found;
}

SymForm restrict_to(const SymForm& f, const VecSubspace& u) {
  if (u.ambient_dim() != f.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace lives in another space");
  if (!u.field()->same_as(f.field())) throw Error(ErrorCode::FieldMismatch, "subspace over another field");
  return f.congruent(transpose(u.basis()));
}

SymForm quotient_by(const SymForm& f, const VecSubspace& u) {
  if (!radical(f).contains(u)) throw Error(ErrorCode::NotInRadical, "subspace is not contained in the radical");
  return restrict_to(f, u.standard_complement());
}

}  // namespace crsym
