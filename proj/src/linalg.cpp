#include "sap/linalg.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "sap/errors.hpp"

namespace sap {

LuDecomposition::LuDecomposition(const RealMatrix& a) : lu_(a), perm_(a.rows()) {
  if (!a.square()) throw Error(ErrorKind::DimensionError, "LU of a non-square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  // Pivots below this are treated as exact zeros.
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, a.max_abs()) * 1e-4;
  det_ = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
    if (std::abs(lu_(p, k)) <= tiny) {
      nonsingular_ = false;
      det_ = 0.0;
      return;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
      det_ = -det_;
    }
    const double pivot = lu_(k, k);
    det_ *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) / pivot;
      lu_(i, k) = m;
      if (m == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
}

std::optional<std::vector<double>> LuDecomposition::solve(std::vector<double> b) const {
  if (!nonsingular_) return std::nullopt;
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw Error(ErrorKind::DimensionError, "right-hand side length");
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

double lu_determinant(const RealMatrix& a) { return LuDecomposition(a).determinant(); }

}  // namespace sap
