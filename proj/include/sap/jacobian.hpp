#pragma once

// Jacobian of (alpha_1..alpha_n) with respect to (a_1..a_{n-1}, b_r) for the
// normalized K_{n,r} realization, its determinant by two independent routes,
// and a generic finite-difference Nilpotent-Jacobian verifier.

#include <span>
#include <vector>

#include "sap/charpoly.hpp"
#include "sap/knr.hpp"
#include "sap/nilpotent.hpp"
#include "sap/pattern.hpp"

namespace sap {

/// Columns ordered a_1, ..., a_{n-1}, b_r. Requires r < n.
RealMatrix jacobian_matrix(const KnrRealization& x);

struct JacobianReport {
  RealMatrix jacobian;
  double det_lu = 0.0;
  /// det of the (1,1) block (always 1) times the closed-form determinant of
  /// the (2,2) block, B_{n-r+1,r} with last column (a_0, ..., a_{n-r}).
  double det_blocks = 0.0;
  bool positive = false;     // det_lu > 0
  bool blocks_agree = false; // |det_lu - det_blocks| <= 1e-8 max(1, |det_lu|)
  KnrRealization evaluation_point;
};

/// Meant for the nilpotent point; det_blocks relies on the recurrence
/// a_k = a_{k-1} - b a_{k-r} holding there.
JacobianReport jacobian_det(const KnrRealization& x);

/// det(A_{k,r}) from the closed form: 1 for k = 0, (-1)^k for r > k and
/// (-1)^k a0_k otherwise. 0 <= k < n, r < n.
double det_A_closed(int k, KnrParams p, const NilpotentCertificate& cert);

/// LU determinant of the explicit A_{k,r}: diagonal -1, superdiagonal +1, and
/// t in row i, column i-r+1. 1 <= k < n.
double det_A_brute(int k, KnrParams p, double t);
RealMatrix materialize_A(int k, int r, double t);

/// LU determinant of the explicit B_{l,r}: diagonal +1 (rows 1..l-1),
/// subdiagonal -1, t in row i, column i-r, last column c. 1 <= l <= n, c > 0.
double det_B_brute(int l, KnrParams p, double t, std::span<const double> c);
RealMatrix materialize_B(int l, int r, double t, std::span<const double> c);

/// det(B_{l,r}) by first-row cofactor expansion down to det(A_{l-1,r}) closed forms.
double det_B_closed(int l, KnrParams p, const NilpotentCertificate& cert, std::span<const double> c);

enum class NJConclusion { SapCertified, Inconclusive };

struct NJCertificate {
  SignPattern pattern;
  RealMatrix nilpotent_point;
  std::vector<Position> variable_positions;
  RealMatrix jacobian;
  double jacobian_det = 0.0;
  double nilpotency_residual = 0.0;
  NJConclusion conclusion = NJConclusion::Inconclusive;
};

inline constexpr double kNJDetThreshold = 1e-8;

/// Central-difference Jacobian of char_coeffs with respect to the entries at
/// `positions`. A nonzero determinant certifies every superpattern as
/// spectrally arbitrary; a vanishing one is Inconclusive, never "not SAP".
NJCertificate nj_verify(const SignPattern& s, const RealMatrix& m, std::span<const Position> positions,
                        Precision precision = Precision::Double);

}  // namespace sap
