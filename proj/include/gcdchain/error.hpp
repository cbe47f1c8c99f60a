// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gcdchain {

enum class ErrorKind {
  DivisionByZero,
  NotInvertible,
  NotDivisible,
  NonMonic,
  ModulusMismatch,
  FieldMismatch,
  NotCoprime,
  Precondition,
  Parse,
  Invariant,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is what
/// the C API maps onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace gcdchain
