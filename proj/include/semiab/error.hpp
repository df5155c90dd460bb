#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiab {

enum class ErrorKind {
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  UnsupportedParameter,
  NotNormal,
  NotSubgroup,
  NotHomomorphism,
  AmbientMismatch,
  BoundExceeded,
  FactorMismatch,
  SignatureMismatch,
  NotInCrossEffect,
  NotInTG,
  TooFewFactors,
  InvalidAction,
  SectionNotSplitting,
  NotNormalSubobject,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// C API can translate it to a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, std::string const& message);

}  // namespace semiab
