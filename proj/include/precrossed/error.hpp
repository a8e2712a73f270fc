#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace precrossed {

enum class ErrorKind {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NotBijective,
  NotSelfDistributive,
  NotEquivariant,
  ActionInvalid,
  NotHomomorphism,
  NotByAutomorphisms,
  NotClosed,
  ModeMismatch,
  DegreeMismatch,
  IndexOutOfRange,
  DegreeOutOfRange,
  ResourceBound,
  NotChainMap,
  NotChainComplex,
  Incompatible,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace precrossed
