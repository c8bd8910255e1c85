#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace satake {

enum class ErrorKind {
  GroupTooLarge,
  NotStrictlyConvex,
  IncompatibleSpec,
  DirectionNotInCone,
  OutOfBound,
  NotAntidominant,
  NotPolynomial,
  RhoInConeSpan,
  UnknownPreset,
  BadParameters,
  Parse,
};

std::string_view kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace satake
