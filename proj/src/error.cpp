#include "planesyz/error.hpp"

namespace planesyz {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NonReduced: return "NonReduced";
    case ErrorKind::ConeCurve: return "ConeCurve";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotThreeSyzygy: return "NotThreeSyzygy";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::NoAligningShift: return "NoAligningShift";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::EquivalenceViolated: return "EquivalenceViolated";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidField: return "InvalidField";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::DegreeTooSmall:
    case ErrorKind::NonReduced:
    case ErrorKind::ConeCurve:
    case ErrorKind::FieldTooSmall:
    case ErrorKind::UnknownFamily:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidField:
      return true;
    default:
      return false;
  }
}

}  // namespace planesyz
