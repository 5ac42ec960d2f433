#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hasse {

enum class ErrorKind {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  GroupTooLarge,
  NotNormal,
  NotAbelian,
  NotAutomorphism,
  ActionOrderMismatch,
  NotCentralInvolution,
  NotSolvable,
  TrivialGroup,
  PrimesNotDistinct,
  NotPrime,
  InvalidArgument,
  InputError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-checkable kind and a
/// message naming the witness (element, triple, or offending parameter).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hasse
