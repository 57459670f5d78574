// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "crsym/forms.hpp"
#include "crsym/search.hpp"
#include "crsym/subspace.hpp"

namespace crsym {

// Text formats. All entries are canonical integer encodings; the modulus
// line must match the canonical modulus for (p, k).
//
//   form:        "p k n" / modulus digits (constant term first) / n rows
//   form space:  "p k n d" / modulus digits / d blocks of n rows
//   partition:   "p k n t" / modulus digits / t blocks "dim" + dim rows

std::string format_form(const SymForm& f);
SymForm parse_form(std::string_view text);

std::string format_form_space(const FormSpace& m);
/// Throws ParseError on malformed text or linearly dependent forms and
/// NotSymmetric on an asymmetric Gram matrix.
FormSpace parse_form_space(std::string_view text);

std::string format_partition(const PartitionSpec& p);
PartitionSpec parse_partition(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

// JSON documents (pretty-printed).
std::string census_json(const CensusReport& r);
std::string partition_report_json(const PartitionReport& r);
std::string search_outcome_json(const SearchSpec& spec, const SearchOutcome& o);
std::string field_info_json(const Field& f);

/// "a" for integral values, "a/b" otherwise.
std::string format_rational(const Rational& r);

}  // namespace crsym
