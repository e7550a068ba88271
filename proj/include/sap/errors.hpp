#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sap {

enum class ErrorKind {
  InvalidInput,
  DimensionError,
  SizeLimitExceeded,
  ConvergenceError,
  UnsupportedParams,
  NoPositiveRoot,
  PreconditionViolated,
  CertificationFailed,
  RealizationFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sap
