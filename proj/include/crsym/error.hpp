// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace crsym {

/// Error categories raised by the library. The numeric values are part of the
/// C ABI (see crsym.h) and must not be reordered.
enum class ErrorCode : int {
  InvalidArgument = 1,
  InvalidPrime = 2,
  DivisionByZero = 3,
  FieldMismatch = 4,
  NotASubfield = 5,
  ZeroInput = 6,
  EvenCharUnsupported = 7,
  NoSuchOrder = 8,
  BudgetExceeded = 9,
  RankMismatch = 10,
  DimensionMismatch = 11,
  NotInRadical = 12,
  InternalInconsistency = 13,
  CensusInvalid = 14,
  TooSmall = 15,
  NoSubfield = 16,
  Unsupported = 17,
  NotSymmetric = 18,
  ParseError = 19,
  IoError = 20,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crsym
