#pragma once

// Certified real-root isolation over exact integers: Sturm counting to
// separate roots, then sign bisection down to adjacent doubles. Bracket
// endpoints are doubles, so every bracket is an exact dyadic interval.

#include <vector>

#include "sap/polynomial.hpp"

namespace sap {

class SturmSequence {
 public:
  /// f must be nonzero. The chain is built on the square-free part of f.
  explicit SturmSequence(const IntPolynomial& f);

  const IntPolynomial& squarefree() const noexcept { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const noexcept { return chain_; }

  int variations(double x) const;
  /// Number of distinct roots in (lo, hi].
  int count(double lo, double hi) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// (lo, hi) contains exactly one root of poly, poly(lo) and poly(hi) are
/// nonzero with opposite signs.
struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  IntPolynomial poly;

  double width() const noexcept { return hi - lo; }
};

struct IsolatedRoot {
  double value = 0.0;
  RootBracket bracket;
};

/// Upper bound on the moduli of the roots, rounded up to a power of two.
double positive_root_bound(const IntPolynomial& f);

/// Smallest positive root of f. Requires f(0) > 0 (PreconditionViolated
/// otherwise); throws NoPositiveRoot when there is none. With width == 0 the
/// bracket is refined down to adjacent doubles.
IsolatedRoot min_positive_root(const IntPolynomial& f, double width = 0.0);

/// All distinct positive roots, ascending, each in an isolating bracket.
std::vector<RootBracket> isolate_positive_roots(const IntPolynomial& f);

/// Sign bisection of an isolating bracket; returns the closer-to-root
/// endpoint, or the root itself when it is hit exactly.
double refine_bracket(RootBracket& bracket, double width = 0.0);

/// Sign of p on the closed bracket, refining the bracket when p has a root
/// inside it. Returns 0 if that cannot be decided at double resolution.
int sign_on_bracket(const IntPolynomial& p, const SturmSequence& p_sturm, RootBracket& bracket);

}  // namespace sap
