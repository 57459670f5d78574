// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here calls into crsym arithmetic.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "crsym/error.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficients mod p, constant first

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

// Remainder of a modulo b over F_p.
inline Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

// Irreducibility by trial division by every monic polynomial of degree
// 1..deg/2.
inline bool irreducible(const Poly& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Encoding sum c_i p^i of a polynomial of degree < k.
inline std::uint32_t encode(const Poly& a, std::int64_t p) {
  std::uint64_t v = 0, place = 1;
  for (std::size_t i = 0; i < a.size(); ++i, place *= static_cast<std::uint64_t>(p))
    v += static_cast<std::uint64_t>(a[i]) * place;
  return static_cast<std::uint32_t>(v);
}

inline Poly decode(std::uint32_t x, std::int64_t p, std::size_t k) {
  Poly a(k, 0);
  for (std::size_t i = 0; i < k; ++i, x /= static_cast<std::uint32_t>(p)) a[i] = x % p;
  return a;
}

// Product in F_p[x]/(modulus), schoolbook.
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, const Poly& modulus, std::int64_t p) {
  const std::size_t k = modulus.size() - 1;
  const Poly x = decode(a, p, k), y = decode(b, p, k);
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = mod(prod[i + j] + x[i] * y[j], p);
  return encode(poly_rem(prod, modulus, p), p);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::int64_t p, std::size_t k) {
  Poly x = decode(a, p, k), y = decode(b, p, k);
  for (std::size_t i = 0; i < k; ++i) x[i] = mod(x[i] + y[i], p);
  return encode(x, p);
}

// The following work over a prime field F_p with plain integer Gram
// matrices (row-major n x n).

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline void each_vector(std::int64_t p, std::size_t n, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

inline std::int64_t quad(const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& v, std::int64_t p) {
  const std::size_t n = v.size();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s = mod(s + v[i] * g[i * n + j] * v[j], p);
  return s;
}

// rank = n - log_p |ker G|.
inline std::size_t rank_by_kernel(const std::vector<std::int64_t>& g, std::size_t n, std::int64_t p) {
  std::uint64_t kernel = 0;
  each_vector(p, n, [&](const std::vector<std::int64_t>& v) {
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += g[i * n + j] * v[j];
      zero = mod(s, p) == 0;
    }
    if (zero) ++kernel;
  });
  std::size_t dim = 0;
  while (kernel > 1) kernel /= static_cast<std::uint64_t>(p), ++dim;
  return n - dim;
}

inline std::uint64_t isotropic_by_enumeration(const std::vector<std::int64_t>& g, std::size_t n, std::int64_t p) {
  std::uint64_t count = 0;
  each_vector(p, n, [&](const std::vector<std::int64_t>& v) { count += quad(g, v, p) == 0; });
  return count;
}

// Number of d-dimensional subspaces of F_q^n as (ordered bases) / |GL_d|.
inline std::uint64_t subspace_count(std::size_t n, std::size_t d, std::uint64_t q) {
  unsigned __int128 num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    num *= ipow(q, static_cast<unsigned>(n)) - ipow(q, static_cast<unsigned>(i));
    den *= ipow(q, static_cast<unsigned>(d)) - ipow(q, static_cast<unsigned>(i));
  }
  return static_cast<std::uint64_t>(num / den);
}

}  // namespace oracle

// Runs fn and returns the ErrorCode it throws, or 0 if it does not throw.
template <class Fn>
int error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const crsym::Error& e) {
    return static_cast<int>(e.code());
  }
  return 0;
}
