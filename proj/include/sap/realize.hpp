#pragma once

// Constructive spectral arbitrariness: find a matrix in Q(K_{n,r}) (or a
// superpattern) whose characteristic polynomial is a prescribed target.

#include <span>
#include <vector>

#include "sap/charpoly.hpp"
#include "sap/knr.hpp"
#include "sap/pattern.hpp"

namespace sap {

struct RealizationResult {
  RealMatrix matrix;
  KnrRealization params;  // parameters of the scaled (normalized) system
  SignPattern pattern;    // the pattern the matrix was built for
  double scaling_c = 1.0; // matrix = (normalized realization) / scaling_c, entries rounded
  double residual = 0.0;  // max_j |alpha_j(matrix) - target_j|, evaluated exactly
  int newton_iters = 0;
};

inline double realization_tolerance(const CoeffVector& target) { return 1e-8 * std::max(1.0, target.max_abs()); }

/// Eliminates a_1..a_{n-1} as polynomials in b_r and roots the remaining
/// scalar equation exactly; the smallest admissible root (all a_j > 0) wins.
/// Falls back to alpha_j -> c^j alpha_j for c = 2^(-k/8), k = 1..320.
/// Requires 2 <= r < n; throws RealizationFailed when nothing is admissible.
RealizationResult realize(KnrParams p, const CoeffVector& target);

struct ExtraEntry {
  Position pos;
  Sign sign = Sign::Plus;
};

/// Extra entries fixed at +-eps, remaining parameters found by damped Newton
/// from the nilpotent certificate, with the same scaling fallback.
RealizationResult realize_superpattern(KnrParams p, std::span<const ExtraEntry> extra, const CoeffVector& target,
                                       Precision precision = Precision::Double);

}  // namespace sap
