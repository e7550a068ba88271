#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sap {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  IntPolynomial times_t(std::size_t k = 1) const;
  mpz_class content() const;
  /// Divides out the (positive) content.
  IntPolynomial primitive() const;

  /// Exact sign of the value at x.
  int sign_at(double x) const;
  int sign_at(const mpq_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;

  std::string to_string(char var = 't') const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  friend IntPolynomial operator-(const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// lc(b)^steps * a = quotient * b + remainder, deg remainder < deg b.
struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
  unsigned steps = 0;
};

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Exact dyadic decomposition x = mantissa * 2^exponent of a finite double.
void split_double(double x, mpz_class& mantissa, long& exponent);

/// Exact rational value of a finite double.
mpq_class to_rational(double x);

}  // namespace sap

namespace sap {

/// Round-to-nearest conversion of an exact rational.
double nearest_double(const mpq_class& q);

}  // namespace sap
