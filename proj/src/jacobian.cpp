#include "sap/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "sap/errors.hpp"
#include "sap/linalg.hpp"

namespace sap {

namespace {

void require_r_less_than_n(KnrParams p) {
  if (p.r >= p.n) throw Error(ErrorKind::UnsupportedParams, "Jacobian of the closed-form map needs r < n");
}

}  // namespace

RealMatrix jacobian_matrix(const KnrRealization& x) {
  const KnrParams& p = x.params();
  require_r_less_than_n(p);
  const int n = p.n;
  const int r = p.r;
  RealMatrix J(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  // Row j-1 holds the gradient of alpha_j; column k-1 is a_k, column n-1 is b_r.
  auto set = [&](int j, int col, double v) { J(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(col - 1)) = v; };
  for (int j = 1; j <= n; ++j) {
    if (j <= n - 1) set(j, j, 1.0);
    if (j >= 2) set(j, j - 1, -1.0);
    if (j >= r) {
      if (j - r >= 1) set(j, j - r, x.b());
      set(j, n, x.a_at(j - r));
    }
  }
  return J;
}

double det_A_closed(int k, KnrParams p, const NilpotentCertificate& cert) {
  require_r_less_than_n(p);
  if (k < 0 || k >= p.n) throw Error(ErrorKind::InvalidInput, "det_A_closed needs 0 <= k < n");
  if (k == 0) return 1.0;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (p.r > k) return sign;
  return sign * cert.a0.at(static_cast<std::size_t>(k - 1));
}

RealMatrix materialize_A(int k, int r, double t) {
  const auto uk = static_cast<std::size_t>(k);
  RealMatrix A(uk, uk);
  for (int i = 1; i <= k; ++i) {
    const auto ui = static_cast<std::size_t>(i - 1);
    A(ui, ui) = -1.0;
    if (i < k) A(ui, ui + 1) = 1.0;
    if (i - r + 1 >= 1) A(ui, static_cast<std::size_t>(i - r)) = t;
  }
  return A;
}

double det_A_brute(int k, KnrParams p, double t) {
  if (k < 1 || k >= p.n) throw Error(ErrorKind::InvalidInput, "det_A_brute needs 1 <= k < n");
  return lu_determinant(materialize_A(k, p.r, t));
}

RealMatrix materialize_B(int l, int r, double t, std::span<const double> c) {
  const auto ul = static_cast<std::size_t>(l);
  RealMatrix B(ul, ul);
  for (int i = 1; i <= l; ++i) {
    const auto ui = static_cast<std::size_t>(i - 1);
    if (i < l) B(ui, ui) = 1.0;
    if (i >= 2) B(ui, ui - 1) = -1.0;
    if (i - r >= 1) B(ui, static_cast<std::size_t>(i - r - 1)) = t;
    B(ui, ul - 1) = c[ui];
  }
  return B;
}

namespace {

void check_B_args(int l, KnrParams p, std::span<const double> c) {
  if (l < 1 || l > p.n) throw Error(ErrorKind::InvalidInput, "B_{l,r} needs 1 <= l <= n");
  if (c.size() != static_cast<std::size_t>(l)) throw Error(ErrorKind::DimensionError, "B_{l,r} needs l last-column entries");
  for (double v : c)
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidInput, "B_{l,r} last column must be positive");
}

}  // namespace

double det_B_brute(int l, KnrParams p, double t, std::span<const double> c) {
  check_B_args(l, p, c);
  return lu_determinant(materialize_B(l, p.r, t, c));
}

double det_B_closed(int l, KnrParams p, const NilpotentCertificate& cert, std::span<const double> c) {
  check_B_args(l, p, c);
  // det B_m on the trailing m entries of c: det B_{m-1} + (-1)^{m+1} c_first det A_{m-1}.
  double det = c[static_cast<std::size_t>(l - 1)];
  for (int m = 2; m <= l; ++m) {
    const double c_first = c[static_cast<std::size_t>(l - m)];
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    det += sign * c_first * det_A_closed(m - 1, p, cert);
  }
  return det;
}

JacobianReport jacobian_det(const KnrRealization& x) {
  const KnrParams& p = x.params();
  require_r_less_than_n(p);
  JacobianReport rep{jacobian_matrix(x), 0.0, 0.0, false, false, x};
  rep.det_lu = lu_determinant(rep.jacobian);

  // (2,2) block is B_{n-r+1,r} at t = b_r with last column (a_0, ..., a_{n-r}).
  NilpotentCertificate point;
  point.params = p;
  point.t_h = x.b();
  point.a0 = x.a();
  const int l = p.n - p.r + 1;
  std::vector<double> c(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) c[static_cast<std::size_t>(i)] = x.a_at(i);
  rep.det_blocks = 1.0 * det_B_closed(l, p, point, c);

  rep.positive = rep.det_lu > 0.0;
  rep.blocks_agree = std::abs(rep.det_lu - rep.det_blocks) <= 1e-8 * std::max(1.0, std::abs(rep.det_lu));
  return rep;
}

NJCertificate nj_verify(const SignPattern& s, const RealMatrix& m, std::span<const Position> positions,
                        Precision precision) {
  if (!s.square() || m.rows() != s.rows() || m.cols() != s.cols())
    throw Error(ErrorKind::DimensionError, "pattern and matrix must be square of equal order");
  const std::size_t n = s.rows();
  if (positions.size() != n)
    throw Error(ErrorKind::InvalidInput, "need exactly n = " + std::to_string(n) + " variable positions");
  std::set<Position> seen;
  for (Position pos : positions) {
    if (pos.row >= n || pos.col >= n) throw Error(ErrorKind::InvalidInput, "variable position out of range");
    if (s.at(pos) == Sign::Zero) throw Error(ErrorKind::InvalidInput, "variable position is a zero of the pattern");
    if (!seen.insert(pos).second) throw Error(ErrorKind::InvalidInput, "repeated variable position");
  }
  if (!member_of_class(m, s)) throw Error(ErrorKind::PreconditionViolated, "matrix is not in the sign pattern class");

  NJCertificate cert;
  cert.pattern = s;
  cert.nilpotent_point = m;
  cert.variable_positions.assign(positions.begin(), positions.end());
  cert.nilpotency_residual = char_coeffs(m, precision).max_abs();
  if (!(cert.nilpotency_residual <= 1e-9 * static_cast<double>(n)))
    throw Error(ErrorKind::PreconditionViolated, "matrix is not nilpotent to tolerance");

  cert.jacobian = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Position pos = positions[k];
    const double base = m(pos.row, pos.col);
    const double h = 1e-6 * std::max(1.0, std::abs(base));
    RealMatrix plus = m, minus = m;
    plus(pos.row, pos.col) = base + h;
    minus(pos.row, pos.col) = base - h;
    const CoeffVector cp = char_coeffs(plus, precision);
    const CoeffVector cm = char_coeffs(minus, precision);
    const double step = (base + h) - (base - h);
    for (std::size_t j = 0; j < n; ++j) cert.jacobian(j, k) = (cp[j] - cm[j]) / step;
  }
  cert.jacobian_det = lu_determinant(cert.jacobian);
  cert.conclusion = std::abs(cert.jacobian_det) > kNJDetThreshold ? NJConclusion::SapCertified : NJConclusion::Inconclusive;
  return cert;
}

}  // namespace sap
