#pragma once

// The pattern family K_{n,r} and its normalized realizations: first column
// a_1..a_{n-1}, superdiagonal -1, b_r at (n, n-r+1), and -1 at (n, n).

#include <vector>

#include <gmpxx.h>

#include "sap/charpoly.hpp"
#include "sap/pattern.hpp"

namespace sap {

struct KnrParams {
  int n = 2;
  int r = 2;

  /// Validates 2 <= r <= n; throws InvalidInput otherwise.
  static KnrParams make(int n, int r);

  /// Zero-based location of b_r.
  Position b_position() const {
    return {static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - r)};
  }

  friend bool operator==(const KnrParams&, const KnrParams&) = default;
};

class KnrRealization {
 public:
  /// a holds a_1..a_{n-1}; all entries and b must be positive and finite.
  KnrRealization(KnrParams params, std::vector<double> a, double b);

  const KnrParams& params() const noexcept { return params_; }
  const std::vector<double>& a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// a_j with the convention a_0 = 1.
  double a_at(int j) const { return j == 0 ? 1.0 : a_[static_cast<std::size_t>(j - 1)]; }

 private:
  KnrParams params_;
  std::vector<double> a_;
  double b_;
};

SignPattern build_pattern(KnrParams p);
RealMatrix build_matrix(const KnrRealization& x);

/// Closed-form coefficients of build_matrix(x). Only for r < n
/// (UnsupportedParams otherwise; use char_coeffs on the matrix).
CoeffVector alpha_map(const KnrRealization& x);

/// Same map evaluated exactly on the stored doubles.
std::vector<mpq_class> alpha_map_exact(const KnrRealization& x);

}  // namespace sap
