#include "satake/errors.hpp"

namespace satake {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorKind::IncompatibleSpec: return "IncompatibleSpec";
    case ErrorKind::DirectionNotInCone: return "DirectionNotInCone";
    case ErrorKind::OutOfBound: return "OutOfBound";
    case ErrorKind::NotAntidominant: return "NotAntidominant";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::RhoInConeSpan: return "RhoInConeSpan";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace satake
