#include "sap/errors.hpp"

namespace sap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::ConvergenceError: return "ConvergenceError";
    case ErrorKind::UnsupportedParams: return "UnsupportedParams";
    case ErrorKind::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::RealizationFailed: return "RealizationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace sap
