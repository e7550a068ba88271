#include "sap/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sap/errors.hpp"

namespace sap {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::times_t(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k, 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  const mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

void split_double(double x, mpz_class& mantissa, long& exponent) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "non-finite value");
  if (x == 0.0) {
    mantissa = 0;
    exponent = 0;
    return;
  }
  int e = 0;
  const double f = std::frexp(x, &e);
  mantissa = mpz_class(std::ldexp(f, 53));
  exponent = static_cast<long>(e) - 53;
  // Strip trailing zero bits so integers stay small.
  const auto tz = mpz_scan1(mantissa.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), tz);
  exponent += static_cast<long>(tz);
}

mpq_class to_rational(double x) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

int IntPolynomial::sign_at(double x) const {
  if (is_zero()) return 0;
  mpz_class m;
  long e = 0;
  split_double(x, m, e);
  const std::size_t d = coeffs_.size() - 1;
  mpz_class acc = coeffs_[d];
  if (e >= 0) {
    mpz_class xi = m;
    mpz_mul_2exp(xi.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
    for (std::size_t i = d; i-- > 0;) acc = acc * xi + coeffs_[i];
    return sgn(acc);
  }
  // Value times 2^{k d} = sum c_i m^i 2^{k (d - i)} with k = -e.
  const auto k = static_cast<unsigned long>(-e);
  mpz_class term;
  for (std::size_t i = d; i-- > 0;) {
    acc *= m;
    mpz_mul_2exp(term.get_mpz_t(), coeffs_[i].get_mpz_t(), k * (d - i));
    acc += term;
  }
  return sgn(acc);
}

int IntPolynomial::sign_at(const mpq_class& x) const { return sgn(evaluate(x)); }

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].get_d();
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p) {
  std::vector<mpz_class> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -p.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  std::vector<mpz_class> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return IntPolynomial(std::move(v));
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "pseudo-division by the zero polynomial");
  PseudoDivision out;
  out.remainder = a;
  const mpz_class& lb = b.leading();
  while (!out.remainder.is_zero() && out.remainder.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(out.remainder.degree() - b.degree());
    const mpz_class lr = out.remainder.leading();
    out.remainder = lb * out.remainder - (lr * b).times_t(shift);
    out.quotient = lb * out.quotient + IntPolynomial::monomial(lr, shift);
    ++out.steps;
  }
  return out;
}

}  // namespace sap

namespace sap {

double nearest_double(const mpq_class& q) {
  const double d = q.get_d();  // truncates toward zero
  if (!std::isfinite(d) || to_rational(d) == q) return d;
  const double away = std::nextafter(d, q > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return d;
  const mpq_class e1 = abs(q - to_rational(d));
  const mpq_class e2 = abs(q - to_rational(away));
  return e2 < e1 ? away : d;
}

}  // namespace sap
