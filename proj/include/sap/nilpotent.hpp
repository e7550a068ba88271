#pragma once

// Nilpotent realization of K_{n,r}. With a_1 = ... = a_{r-1} = 1 and
// b_r = t, vanishing of all coefficients forces the integer recurrence
//   a_j(t) = a_{j-1}(t) - t a_{j-r}(t),   j = r..n-1,
// plus h(t) = a_{n-1}(t) - t a_{n-r}(t) = 0. The smallest positive root t_h
// of h keeps every a_j(t_h) positive.

#include <optional>
#include <vector>

#include "sap/charpoly.hpp"
#include "sap/knr.hpp"
#include "sap/polynomial.hpp"
#include "sap/root_isolation.hpp"

namespace sap {

struct RecurrencePolys {
  std::vector<IntPolynomial> a;  // a_0 .. a_{n-1}
  IntPolynomial h;
};

/// Requires r < n (UnsupportedParams otherwise).
RecurrencePolys recurrence_polys(KnrParams p);

struct ChainLink {
  int index = 0;  // j for a_j; n stands for h
  IsolatedRoot root;
};

/// Smallest positive roots of h, a_{n-1}, ..., a_r in that order, with the
/// strict ordering checked on the certified brackets.
struct MinChain {
  std::vector<ChainLink> links;
  bool verified = false;
};

MinChain min_chain(KnrParams p);
bool verify_min_chain(KnrParams p);

struct NilpotentCertificate {
  KnrParams params;
  double t_h = 1.0;
  std::optional<RootBracket> bracket;  // absent when r == n (t_h = 1 exactly)
  std::vector<double> a0;              // a0_1 .. a0_{n-1}
  double residual = 0.0;               // max_j |alpha_j| of the realization
  bool chain_verified = false;
  bool positivity_certified = false;

  KnrRealization realization() const { return {params, a0, t_h}; }
};

inline double nilpotent_tolerance(int n) { return 1e-10 * n; }

/// Throws CertificationFailed if the residual or positivity checks fail.
NilpotentCertificate nilpotent_realization(KnrParams p, Precision precision = Precision::Double);

}  // namespace sap
