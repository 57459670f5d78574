// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>

namespace crsym {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p; b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    // b's leading coefficient inverse by Fermat.
    std::uint64_t base = b.back() % p, e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = c * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  if (k <= 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  Poly m(k + 1, 0);
  m[k] = 1;
  // Lexicographic order over (c_0, c_1, ..., c_{k-1}): c_0 varies slowest.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (m[0] == 0) continue;
    if (is_irreducible(m, p)) return m;
  }
  throw Error(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::EvenCharUnsupported: return "EvenCharUnsupported";
    case ErrorCode::NoSuchOrder: return "NoSuchOrder";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInRadical: return "NotInRadical";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CensusInvalid: return "CensusInvalid";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NoSubfield: return "NoSubfield";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(ErrorCode::InvalidArgument, "integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), k};
}

// ---------------------------------------------------------------------------

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  place_.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    place_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > (1ull << 31)) throw Error(ErrorCode::Unsupported, "field order exceeds 2^31");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = smallest_irreducible(p, k);

  // Canonical generator: smallest encoding of order q-1.
  const auto factors = prime_factors(q_ - 1);
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto l : factors) {
      if (poly_pow(g, (q_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }

  if (q_ <= kTableLimit) {
    exp_.resize(2 * static_cast<std::size_t>(q_ - 1) + 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = poly_mul(x, generator_);
    }
    exp_.back() = 1;
  }
  if (q_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = digit_add(a, b, false);
  }
  neg_table_.resize(q_ <= kTableLimit ? q_ : 0);
  for (Elem a = 0; a < neg_table_.size(); ++a) neg_table_[a] = digit_add(0, a, true);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(p, k));
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto [p, k] = prime_power_decomposition(q);
  return make(p, k);
}

FieldPtr Field::parse(std::string_view spec) {
  auto parse_uint = [&](std::string_view s) -> std::uint64_t {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    return v;
  };
  auto caret = spec.find('^');
  if (caret == std::string_view::npos) return of_order(parse_uint(spec));
  const auto p = parse_uint(spec.substr(0, caret));
  const auto k = parse_uint(spec.substr(caret + 1));
  if (p > std::numeric_limits<std::uint32_t>::max() || k > 64)
    throw Error(ErrorCode::ParseError, "field spec out of range");
  return make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
}

std::string Field::name() const {
  return std::to_string(p_) + "^" + std::to_string(k_);
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = p_;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::digit_add(Elem a, Elem b, bool subtract) const noexcept {
  if (k_ == 1) return subtract ? (a + p_ - b) % p_ : (a + b) % p_;
  Elem out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * place_[i];
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  return digit_add(a, b, false);
}

Elem Field::sub(Elem a, Elem b) const noexcept {
  if (!add_table_.empty()) return add_table_[a * q_ + neg_table_[b]];
  return digit_add(a, b, true);
}

Elem Field::neg(Elem a) const noexcept {
  if (!neg_table_.empty()) return neg_table_[a];
  return digit_add(0, a, true);
}

Elem Field::poly_mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  std::uint32_t da[64], db[64];
  for (std::uint32_t i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  }
  // Reduce with the monic modulus.
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::uint32_t i = 0; i <= k_; ++i) {
      const std::uint64_t sub = c * modulus_[i] % p_;
      prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
    }
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) out += static_cast<Elem>(prod[i]) * place_[i];
  return out;
}

Elem Field::poly_pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return poly_pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t n = q_ - 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % n) % n];
  }
  return poly_pow(a, e);
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != k_) throw Error(ErrorCode::InvalidArgument, "digit vector has wrong length");
  Elem out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (digits[i] >= p_) throw Error(ErrorCode::InvalidArgument, "digit out of range");
    out += digits[i] * place_[i];
  }
  return out;
}

Elem Field::frobenius(Elem x, std::uint32_t i) const noexcept {
  return pow(x, place_[i % k_]);
}

Elem Field::trace(Elem x) const noexcept {
  Elem t = 0;
  for (std::uint32_t i = 0; i < k_; ++i) t = add(t, frobenius(x, i));
  return t;
}

Elem Field::trace_to(Elem x, std::uint32_t m) const {
  if (m == 0 || k_ % m != 0)
    throw Error(ErrorCode::NotASubfield, "degree " + std::to_string(m) + " does not divide " + std::to_string(k_));
  Elem t = 0;
  for (std::uint32_t i = 0; i < k_ / m; ++i) t = add(t, frobenius(x, m * i));
  return t;
}

bool Field::is_square(Elem x) const {
  if (!is_odd()) throw Error(ErrorCode::EvenCharUnsupported, "squareness test needs odd q");
  if (x == 0) throw Error(ErrorCode::ZeroInput, "squareness of zero");
  if (!log_.empty()) return log_[x] % 2 == 0;
  return pow(x, (q_ - 1) / 2) == 1;
}

std::uint64_t Field::multiplicative_order(Elem x) const {
  if (x == 0) throw Error(ErrorCode::ZeroInput, "order of zero");
  std::uint64_t n = q_ - 1;
  for (auto l : prime_factors(q_ - 1)) {
    while (n % l == 0 && pow(x, n / l) == 1) n /= l;
  }
  return n;
}

Elem Field::element_of_order(std::uint64_t m) const {
  if (m == 0 || (q_ - 1) % m != 0)
    throw Error(ErrorCode::NoSuchOrder, std::to_string(m) + " does not divide " + std::to_string(q_ - 1));
  return pow(generator_, (q_ - 1) / m);
}

std::vector<Elem> Field::subfield_elements(std::uint32_t m) const {
  if (m == 0 || k_ % m != 0)
    throw Error(ErrorCode::NotASubfield, "degree " + std::to_string(m) + " does not divide " + std::to_string(k_));
  std::vector<Elem> out;
  if (m == k_) {
    out.resize(q_);
    for (Elem x = 0; x < q_; ++x) out[x] = x;
    return out;
  }
  const std::uint64_t s = checked_pow(p_, m);
  const std::uint64_t step = (q_ - 1) / (s - 1);
  out.push_back(0);
  for (std::uint64_t j = 0; j < s - 1; ++j) out.push_back(pow(generator_, step * j));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  if (!field_->contains(value_)) throw Error(ErrorCode::InvalidArgument, "encoding out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field()))
    throw Error(ErrorCode::FieldMismatch, a.field()->name() + " vs " + b.field()->name());
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Inv: return a.inverse();
    case ArithOp::Pow: return a.pow(b.value());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

// ---------------------------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (small_->characteristic() != large_->characteristic())
    throw Error(ErrorCode::FieldMismatch, "different characteristics");
  const std::uint32_t a = small_->degree();
  if (large_->degree() % a != 0)
    throw Error(ErrorCode::NotASubfield, small_->name() + " is not a subfield of " + large_->name());
  const Field& L = *large_;
  const auto& m = small_->modulus();
  Elem root = 0;
  bool found = false;
  for (Elem cand : L.subfield_elements(a)) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = L.add(L.mul(acc, cand), L.from_int(m[i]));
    if (acc == 0) {
      root = cand;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::InternalInconsistency, "modulus has no root in the extension");
  image_.resize(small_->order());
  preimage_.assign(large_->order(), -1);
  for (Elem x = 0; x < small_->order(); ++x) {
    Elem acc = 0;
    const auto d = small_->digits(x);
    for (std::size_t i = d.size(); i-- > 0;) acc = L.add(L.mul(acc, root), L.from_int(d[i]));
    image_[x] = acc;
    preimage_[acc] = x;
  }
}

Elem SubfieldEmbedding::restrict(Elem y) const {
  if (y >= preimage_.size() || preimage_[y] < 0)
    throw Error(ErrorCode::NotASubfield, "element is not in the embedded subfield");
  return static_cast<Elem>(preimage_[y]);
}

ExtensionBasis::ExtensionBasis(SubfieldEmbedding embedding, std::vector<Elem> basis)
    : emb_(std::move(embedding)), basis_(std::move(basis)) {
  const Field& L = *emb_.large();
  const std::uint32_t a = emb_.small()->degree();
  const std::uint32_t D = L.degree();
  const std::uint64_t p = L.characteristic();
  if (basis_.size() * a != D)
    throw Error(ErrorCode::DimensionMismatch, "basis size does not match extension degree");

  // Column i*a+j holds the F_p digits of embed(x^j) * b_i.
  std::vector<std::uint64_t> aug(static_cast<std::size_t>(D) * 2 * D, 0);
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return aug[r * 2 * D + c]; };
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::uint32_t j = 0; j < a; ++j) {
      const Elem kappa = emb_.embed(static_cast<Elem>(checked_pow(p, j)));
      const auto d = L.digits(L.mul(kappa, basis_[i]));
      for (std::uint32_t r = 0; r < D; ++r) at(r, i * a + j) = d[r];
    }
  }
  for (std::uint32_t r = 0; r < D; ++r) at(r, D + r) = 1;
  for (std::uint32_t col = 0; col < D; ++col) {
    std::uint32_t piv = col;
    while (piv < D && at(piv, col) == 0) ++piv;
    if (piv == D) throw Error(ErrorCode::InvalidArgument, "elements do not form a basis over the subfield");
    if (piv != col)
      for (std::uint32_t c = 0; c < 2 * D; ++c) std::swap(at(piv, c), at(col, c));
    const std::uint64_t inv = modpow(at(col, col), p - 2, p);
    for (std::uint32_t c = 0; c < 2 * D; ++c) at(col, c) = at(col, c) * inv % p;
    for (std::uint32_t r = 0; r < D; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const std::uint64_t f = at(r, col);
      for (std::uint32_t c = 0; c < 2 * D; ++c) at(r, c) = (at(r, c) + p * p - f * at(col, c) % p) % p;
    }
  }
  inverse_.resize(static_cast<std::size_t>(D) * D);
  for (std::uint32_t r = 0; r < D; ++r)
    for (std::uint32_t c = 0; c < D; ++c) inverse_[r * D + c] = static_cast<std::uint32_t>(at(r, D + c));
}

std::vector<Elem> ExtensionBasis::coordinates(Elem y) const {
  const Field& L = *emb_.large();
  const Field& K = *emb_.small();
  const std::uint32_t D = L.degree();
  const std::uint32_t a = K.degree();
  const std::uint64_t p = L.characteristic();
  const auto d = L.digits(y);
  std::vector<std::uint32_t> s(D);
  for (std::uint32_t r = 0; r < D; ++r) {
    std::uint64_t acc = 0;
    for (std::uint32_t c = 0; c < D; ++c) acc += static_cast<std::uint64_t>(inverse_[r * D + c]) * d[c];
    s[r] = static_cast<std::uint32_t>(acc % p);
  }
  std::vector<Elem> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    out[i] = K.from_digits(std::span<const std::uint32_t>(s).subspan(i * a, a));
  return out;
}

Elem ExtensionBasis::combine(std::span<const Elem> coords) const {
  if (coords.size() != basis_.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  const Field& L = *emb_.large();
  Elem acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) acc = L.add(acc, L.mul(emb_.embed(coords[i]), basis_[i]));
  return acc;
}

}  // namespace crsym
