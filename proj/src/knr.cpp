#include "sap/knr.hpp"

#include <cmath>
#include <string>

#include "sap/errors.hpp"
#include "sap/polynomial.hpp"

namespace sap {

KnrParams KnrParams::make(int n, int r) {
  if (n < 2 || r < 2 || r > n) {
    throw Error(ErrorKind::InvalidInput,
                "need 2 <= r <= n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  return {n, r};
}

KnrRealization::KnrRealization(KnrParams params, std::vector<double> a, double b)
    : params_(KnrParams::make(params.n, params.r)), a_(std::move(a)), b_(b) {
  if (a_.size() != static_cast<std::size_t>(params_.n - 1))
    throw Error(ErrorKind::DimensionError, "expected n-1 first-column parameters");
  for (double v : a_)
    if (!(std::isfinite(v) && v > 0.0)) throw Error(ErrorKind::InvalidInput, "first-column parameters must be positive");
  if (!(std::isfinite(b_) && b_ > 0.0)) throw Error(ErrorKind::InvalidInput, "b_r must be positive");
}

SignPattern build_pattern(KnrParams p) {
  p = KnrParams::make(p.n, p.r);
  const auto n = static_cast<std::size_t>(p.n);
  SignPattern s(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s = s.with_entry({i, 0}, Sign::Plus);
    s = s.with_entry({i, i + 1}, Sign::Minus);
  }
  s = s.with_entry(p.b_position(), Sign::Plus);
  s = s.with_entry({n - 1, n - 1}, Sign::Minus);
  return s;
}

RealMatrix build_matrix(const KnrRealization& x) {
  const auto n = static_cast<std::size_t>(x.params().n);
  RealMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, 0) = x.a()[i];
    m(i, i + 1) = -1.0;
  }
  const Position bp = x.params().b_position();
  m(bp.row, bp.col) = x.b();
  m(n - 1, n - 1) = -1.0;
  return m;
}

namespace {

// a_1 - 1; a_j - a_{j-1} (+ b a_{j-r} once j >= r); b a_{n-r} - a_{n-1}.
template <class T, class Get>
std::vector<T> alpha_formula(int n, int r, const T& b, Get a) {
  std::vector<T> out(static_cast<std::size_t>(n));
  out[0] = a(1) - a(0);
  for (int j = 2; j <= n - 1; ++j) {
    T v = a(j) - a(j - 1);
    if (j >= r) v += b * a(j - r);
    out[static_cast<std::size_t>(j - 1)] = v;
  }
  out[static_cast<std::size_t>(n - 1)] = b * a(n - r) - a(n - 1);
  return out;
}

}  // namespace

CoeffVector alpha_map(const KnrRealization& x) {
  const KnrParams& p = x.params();
  if (p.r >= p.n) throw Error(ErrorKind::UnsupportedParams, "closed-form coefficients need r < n; use char_coeffs");
  CoeffVector out;
  out.alpha = alpha_formula<double>(p.n, p.r, x.b(), [&](int j) { return x.a_at(j); });
  return out;
}

std::vector<mpq_class> alpha_map_exact(const KnrRealization& x) {
  const KnrParams& p = x.params();
  if (p.r >= p.n) throw Error(ErrorKind::UnsupportedParams, "closed-form coefficients need r < n; use char_coeffs");
  std::vector<mpq_class> a(static_cast<std::size_t>(p.n));
  for (int j = 0; j < p.n; ++j) a[static_cast<std::size_t>(j)] = to_rational(x.a_at(j));
  return alpha_formula<mpq_class>(p.n, p.r, to_rational(x.b()),
                                  [&](int j) { return a[static_cast<std::size_t>(j)]; });
}

}  // namespace sap
