// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crsym/field.hpp"
#include "crsym/forms.hpp"
#include "crsym/subspace.hpp"
#include "crsym/vec_subspace.hpp"

namespace crsym {

/// K = F_q inside L = F_{q^{n+1}}, with a codimension-1 K-subspace V of L
/// containing the intermediate field M of degree m over K.
///
/// Coordinates on L are taken in the power basis 1, x, ..., x^n of L's
/// modulus generator x; V carries its own echelon basis inside those
/// coordinates, and forms on V are written in that basis.
struct TraceSetup {
  FieldPtr k;
  FieldPtr l;
  ExtensionBasis l_over_k;
  unsigned m = 1;
  std::vector<Elem> m_basis;  // K-basis of M, as elements of L
  Elem c = 0;                 // V = ker(y -> Tr(c y))
  VecSubspace v_coords;       // V inside K^{n+1}
  std::vector<Elem> v_basis;  // the same basis as elements of L

  std::size_t n() const noexcept { return v_basis.size(); }
  /// Tr_{L/K} in K's encoding.
  Elem trace(Elem y) const;
  /// f_z on L in the power basis.
  SymForm full_form(Elem z) const;
  /// f'_z, the restriction of f_z to V.
  SymForm form(Elem z) const;
  /// Coordinates of y in the basis of V; throws InvalidArgument when y is
  /// not in V.
  std::vector<Elem> v_coordinates(Elem y) const;
};

/// Builds the setup for K = F_q, L of degree n+1 and M of degree m (m = 1
/// means M = K).
TraceSetup make_trace_setup(std::uint32_t q, std::size_t n, unsigned m = 1);

struct TraceSpace {
  TraceSetup setup;
  FormSpace space;  // all f'_z, dimension n+1
};
TraceSpace trace_space(std::uint32_t q, std::size_t n);

/// All f_z on the whole of L = F_{q^r}: an r-dimensional constant rank r
/// space on an r-dimensional space.
FormSpace full_trace_space(std::uint32_t q, std::size_t r);

struct DistinctRadicalSpace {
  TraceSetup setup;
  Elem z = 0;  // first z with rank f'_z = n-1
  Elem u = 0;  // radical generator of f'_z
  std::vector<Elem> w_basis;
  std::vector<SymForm> generators;  // f'_{zuw} for w in w_basis
  FormSpace space;
  std::vector<std::string> warnings;
};
/// The m-dimensional constant rank n-1 space {f'_{zuw} : w in M}. Throws
/// NoSubfield unless m divides n+1 and 1 < m < n+1.
DistinctRadicalSpace distinct_radical_space(std::uint32_t q, std::size_t n, unsigned m);

/// Pads every form of N (on F_q^r) with a zero block on the first n-r
/// coordinates. Throws DimensionMismatch if r > n.
FormSpace inflate(const FormSpace& N, std::size_t n);

/// Span of e_1 v^T + v e_1^T for v in <e_2, ..., e_n>.
FormSpace hyperbolic_rank2_space(std::uint32_t q, std::size_t n);

/// Block forms [[0, A], [A^T, 0]] where A runs over the first t rows of the
/// multiplication maps of F_{q^{n-t}}. Throws Unsupported if n < 2t.
FormSpace positive_rank2t_space(std::uint32_t q, std::size_t n, std::size_t t);

struct Rank4F3Space {
  FieldPtr k;  // F_3
  FieldPtr l;  // F_{3^5}
  std::vector<Elem> basis;  // power basis of L over F_3
  Elem epsilon = 0;         // element of order 11
  Mat s;                    // Frobenius x -> x^3 on coordinates (columns)
  Mat t;                    // multiplication by epsilon
  FormSpace space;

  /// Gram matrix of phi_x in the power basis.
  SymForm phi(Elem x) const;
  std::vector<Elem> coords(Elem y) const;
};
Rank4F3Space rank4_f3_space();

/// Spread of F_q^{2m} by the cosets a F_{q^m} of F_{q^{2m}}, first piece
/// F_{q^m} itself. Coordinates are taken over F_q in a power basis.
PartitionSpec spread(std::uint32_t q, std::size_t m);

/// Partition of F_q^{2m+1}: a spread of F_q^{2m+2} cut by a hyperplane
/// containing its first piece, written in the hyperplane's coordinates.
PartitionSpec odd_partition(std::uint32_t q, std::size_t m);

}  // namespace crsym
