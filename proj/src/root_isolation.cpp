#include "sap/root_isolation.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "sap/errors.hpp"

namespace sap {

namespace {

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
  std::vector<IntPolynomial> chain{f, f.derivative().primitive()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPolynomial& prev = chain[chain.size() - 2];
    const IntPolynomial& cur = chain.back();
    PseudoDivision pd = pseudo_divide(prev, cur);
    if (pd.remainder.is_zero()) break;
    // lc^steps * prev = q * cur + rem; keep the negated remainder up to a positive factor.
    const bool negative_factor = cur.leading() < 0 && (pd.steps % 2 == 1);
    IntPolynomial next = negative_factor ? pd.remainder : -pd.remainder;
    chain.push_back(next.primitive());
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_of_mpz(const mpz_class& x) { return sgn(x); }

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "Sturm sequence of the zero polynomial");
  if (f.degree() == 0) {
    chain_ = {f};
    return;
  }
  std::vector<IntPolynomial> raw = sturm_chain(f);
  const IntPolynomial& g = raw.back();
  if (g.degree() <= 0) {
    chain_ = std::move(raw);
    return;
  }
  // f has repeated roots: rebuild on f / gcd(f, f').
  PseudoDivision pd = pseudo_divide(f, g);
  if (!pd.remainder.is_zero()) throw Error(ErrorKind::InvalidInput, "inexact square-free division");
  IntPolynomial q = pd.quotient.primitive();
  // Keep the orientation of f: same sign as f's leading coefficient.
  if (sign_of_mpz(q.leading()) != sign_of_mpz(f.leading())) q = -q;
  chain_ = sturm_chain(q);
}

int SturmSequence::variations(double x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(double lo, double hi) const { return variations(lo) - variations(hi); }

double positive_root_bound(const IntPolynomial& f) {
  if (f.degree() <= 0) return 1.0;
  mpz_class max_c = 0;
  for (int i = 0; i < f.degree(); ++i) max_c = std::max(max_c, mpz_class(abs(f.coeff(static_cast<std::size_t>(i)))));
  const mpz_class lead = abs(f.leading());
  // Smallest 2^m with lead * (2^m - 1) >= max_c.
  double bound = 1.0;
  mpz_class pow2 = 1;
  while (lead * (pow2 - 1) < max_c) {
    pow2 *= 2;
    bound *= 2.0;
  }
  return std::max(bound, 1.0);
}

namespace {

// Split point of (lo, hi) that is not a root of q.
double safe_split(const IntPolynomial& q, double lo, double hi) {
  double mid = lo + (hi - lo) / 2.0;
  for (int k = 2; q.sign_at(mid) == 0 && k < 60; ++k) mid = lo + (hi - lo) * (0.5 + std::ldexp(1.0, -k));
  return mid;
}

RootBracket exact_root_bracket(const IntPolynomial& q, double root) {
  RootBracket b{std::nextafter(root, -std::numeric_limits<double>::infinity()),
                std::nextafter(root, std::numeric_limits<double>::infinity()), q};
  return b;
}

}  // namespace

double refine_bracket(RootBracket& b, double width) {
  const IntPolynomial& q = b.poly;
  int s_lo = q.sign_at(b.lo);
  const int s_hi = q.sign_at(b.hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) throw Error(ErrorKind::InvalidInput, "not an isolating bracket");
  while (b.hi - b.lo > width) {
    const double mid = b.lo + (b.hi - b.lo) / 2.0;
    if (mid <= b.lo || mid >= b.hi) break;
    const int s = q.sign_at(mid);
    if (s == 0) {
      b = exact_root_bracket(q, mid);
      return mid;
    }
    if (s == s_lo) {
      b.lo = mid;
    } else {
      b.hi = mid;
    }
  }
  const mpq_class v_lo = abs(q.evaluate(to_rational(b.lo)));
  const mpq_class v_hi = abs(q.evaluate(to_rational(b.hi)));
  return v_lo <= v_hi ? b.lo : b.hi;
}

IsolatedRoot min_positive_root(const IntPolynomial& f, double width) {
  if (f.is_zero() || f.coeff(0) <= 0) throw Error(ErrorKind::PreconditionViolated, "min_positive_root needs f(0) > 0");
  SturmSequence sturm(f);
  const IntPolynomial& q = sturm.squarefree();
  double lo = 0.0;
  double hi = positive_root_bound(q);
  int n_roots = sturm.count(lo, hi);
  if (n_roots == 0) throw Error(ErrorKind::NoPositiveRoot, "no positive root of " + f.to_string());

  // Invariant: no root in (0, lo], at least one in (lo, hi].
  while (n_roots > 1) {
    const double mid = safe_split(q, lo, hi);
    if (mid <= lo || mid >= hi) throw Error(ErrorKind::ConvergenceError, "roots closer than double resolution");
    const int left = sturm.count(lo, mid);
    if (left >= 1) {
      hi = mid;
      n_roots = left;
    } else {
      lo = mid;
      n_roots = sturm.count(lo, hi);
    }
  }
  IsolatedRoot out;
  out.bracket = RootBracket{lo, hi, q};
  out.value = refine_bracket(out.bracket, width);
  return out;
}

std::vector<RootBracket> isolate_positive_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero polynomial");
  std::vector<mpz_class> c = f.coeffs();
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0) ++zeros;
  IntPolynomial g(std::vector<mpz_class>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));
  if (g.degree() <= 0) return {};

  SturmSequence sturm(g);
  const IntPolynomial& q = sturm.squarefree();
  std::vector<RootBracket> out;
  struct Interval {
    double lo, hi;
    int count;
  };
  std::vector<Interval> stack;
  const double bound = positive_root_bound(q);
  stack.push_back({0.0, bound, sturm.count(0.0, bound)});
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      out.push_back({iv.lo, iv.hi, q});
      continue;
    }
    const double mid = safe_split(q, iv.lo, iv.hi);
    if (mid <= iv.lo || mid >= iv.hi) throw Error(ErrorKind::ConvergenceError, "roots closer than double resolution");
    const int left = sturm.count(iv.lo, mid);
    // Right half first so the left half is processed first.
    stack.push_back({mid, iv.hi, iv.count - left});
    stack.push_back({iv.lo, mid, left});
  }
  return out;
}

int sign_on_bracket(const IntPolynomial& p, const SturmSequence& p_sturm, RootBracket& bracket) {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sgn(p.leading());
  for (;;) {
    const int s_lo = p.sign_at(bracket.lo);
    if (s_lo != 0 && p.sign_at(bracket.hi) == s_lo && p_sturm.count(bracket.lo, bracket.hi) == 0) return s_lo;
    const double before = bracket.width();
    // Halve the bracket once (refine_bracket stops at the requested width).
    refine_bracket(bracket, before / 2.0);
    if (!(bracket.width() < before)) return 0;
  }
}

}  // namespace sap
