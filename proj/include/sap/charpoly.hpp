#pragma once

// Characteristic-polynomial coefficients in the alternating convention
//   p_A(x) = x^n - a1 x^{n-1} + a2 x^{n-2} - ... + (-1)^n an,
// so that a_j is the sum of the j-by-j principal minors of A.

#include <complex>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sap/pattern.hpp"

namespace sap {

struct CoeffVector {
  std::vector<double> alpha;  // alpha[0] holds a_1

  std::size_t size() const noexcept { return alpha.size(); }
  double operator[](std::size_t i) const { return alpha[i]; }
  double max_abs() const;
};

using SpectrumList = std::vector<std::complex<double>>;

enum class Precision { Double, Extended };

/// Faddeev-LeVerrier trace recursion. Extended runs the recursion in long double.
CoeffVector char_coeffs(const RealMatrix& a, Precision precision = Precision::Double);

/// Sum of principal minors by Laplace expansion (memoized over column
/// subsets). Independent of char_coeffs; exponential cost, so n <= 14.
CoeffVector char_coeffs_oracle(const RealMatrix& a);

/// Exact coefficients of the matrix whose entries are the given doubles.
std::vector<mpq_class> char_coeffs_exact(const RealMatrix& a);

/// Eigenvalues, conjugate pairs adjacent (positive imaginary part first),
/// ordered by real part. Throws ConvergenceError if QR iteration fails.
SpectrumList spectrum(const RealMatrix& a);

/// p(x) = x^n + c_1 x^{n-1} + ... + c_n with c_j = (-1)^j a_j.
std::vector<double> coeffs_to_monic(const CoeffVector& c);
CoeffVector monic_to_coeffs(const std::vector<double>& monic);

/// Expands prod (x - lambda) into alternating coefficients.
CoeffVector coeffs_from_spectrum(const SpectrumList& roots);

/// Every non-real entry's conjugate occurs with the same multiplicity.
bool is_self_conjugate(const SpectrumList& roots, double tol = 0.0);

}  // namespace sap
