#pragma once

#include <optional>
#include <vector>

#include "sap/pattern.hpp"

namespace sap {

/// Partial-pivoting LU factorization, PA = LU packed in one matrix.
class LuDecomposition {
 public:
  explicit LuDecomposition(const RealMatrix& a);

  /// False when a pivot vanished to working precision.
  bool nonsingular() const noexcept { return nonsingular_; }
  double determinant() const noexcept { return det_; }
  /// Solves A x = b; empty when singular.
  std::optional<std::vector<double>> solve(std::vector<double> b) const;

 private:
  RealMatrix lu_;
  std::vector<std::size_t> perm_;
  double det_ = 0.0;
  bool nonsingular_ = true;
};

double lu_determinant(const RealMatrix& a);

}  // namespace sap
