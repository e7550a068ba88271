#include "sap/realize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "sap/errors.hpp"
#include "sap/newton.hpp"
#include "sap/nilpotent.hpp"
#include "sap/polynomial.hpp"
#include "sap/root_isolation.hpp"

namespace sap {

namespace {

constexpr int kMaxScalingLevel = 40;
// realize() steps the scale by 2^(1/kLadderSteps); coarser steps overshoot the
// needed scale and the rounding error grows like scale^n.
constexpr int kLadderSteps = 8;

// Polynomial in b_r with rational coefficients, ascending degree.
using RatPoly = std::vector<mpq_class>;

RatPoly rat_sub(const RatPoly& x, const RatPoly& y) {
  RatPoly out(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

RatPoly rat_times_b(const RatPoly& x) {
  RatPoly out(x.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i + 1] = x[i];
  return out;
}

mpq_class rat_eval(const RatPoly& x, const mpq_class& b) {
  mpq_class acc = 0;
  for (std::size_t i = x.size(); i-- > 0;) acc = acc * b + x[i];
  return acc;
}

// Positive multiple with integer coefficients (same roots and signs).
IntPolynomial to_int_poly(const RatPoly& x) {
  mpz_class l = 1;
  for (const auto& c : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class s = x[i] * l;
    v[i] = s.get_num();
  }
  return IntPolynomial(std::move(v));
}

std::vector<mpq_class> exact_target(const CoeffVector& target) {
  std::vector<mpq_class> t(target.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = to_rational(target[j]);
  return t;
}

double max_abs_diff(const std::vector<mpq_class>& got, const std::vector<mpq_class>& want) {
  mpq_class worst = 0;
  for (std::size_t j = 0; j < got.size(); ++j) worst = std::max(worst, mpq_class(abs(got[j] - want[j])));
  return nearest_double(worst);
}

void check_target(KnrParams p, const CoeffVector& target) {
  if (p.r >= p.n) throw Error(ErrorKind::UnsupportedParams, "realization needs r < n");
  if (target.size() != static_cast<std::size_t>(p.n))
    throw Error(ErrorKind::DimensionError, "target must have n coefficients");
  for (double v : target.alpha)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite target coefficient");
}

}  // namespace

RealizationResult realize(KnrParams p, const CoeffVector& target) {
  p = KnrParams::make(p.n, p.r);
  check_target(p, target);
  const auto n = static_cast<std::size_t>(p.n);
  const auto r = static_cast<std::size_t>(p.r);
  const std::vector<mpq_class> want = exact_target(target);
  const double tol = realization_tolerance(target);

  std::ostringstream diag;
  double best_residual = HUGE_VAL;
  for (int step = 0; step <= kMaxScalingLevel * kLadderSteps; ++step) {
    // tau_j = alpha_j / s^j; the matrix for tau is multiplied by s at the end.
    const double scale = std::exp2(static_cast<double>(step) / kLadderSteps);
    const mpq_class inv_scale = 1 / to_rational(scale);
    std::vector<mpq_class> tau(n);
    mpq_class power = 1;
    for (std::size_t j = 0; j < n; ++j) {
      power *= inv_scale;
      tau[j] = want[j] * power;
    }

    std::vector<RatPoly> a(n);
    a[0] = {1};
    for (std::size_t j = 1; j < n; ++j) {
      RatPoly v = a[j - 1];
      v[0] += tau[j - 1];
      if (j >= r) v = rat_sub(v, rat_times_b(a[j - r]));
      a[j] = std::move(v);
    }
    RatPoly g = rat_sub(rat_times_b(a[n - r]), a[n - 1]);
    g[0] -= tau[n - 1];

    std::vector<IntPolynomial> a_int;
    std::vector<std::optional<SturmSequence>> a_sturm;
    for (std::size_t j = 1; j < n; ++j) {
      a_int.push_back(to_int_poly(a[j]));
      if (a_int.back().degree() > 0) {
        a_sturm.emplace_back(std::in_place, a_int.back());
      } else {
        a_sturm.emplace_back();
      }
    }
    const IntPolynomial g_int = to_int_poly(g);
    std::vector<RootBracket> roots = isolate_positive_roots(g_int);

    double min_a_seen = HUGE_VAL;
    for (RootBracket& br : roots) {
      bool admissible = true;
      for (std::size_t j = 0; j + 1 < n && admissible; ++j) {
        int s = 0;
        if (a_int[j].is_zero()) {
          s = 0;
        } else if (a_int[j].degree() == 0) {
          s = sgn(a_int[j].leading());
        } else {
          s = sign_on_bracket(a_int[j], *a_sturm[j], br);
        }
        admissible = s > 0;
      }
      const double b = refine_bracket(br);
      const mpq_class bq = to_rational(b);
      std::vector<double> av(n - 1);
      for (std::size_t j = 1; j < n; ++j) av[j - 1] = nearest_double(rat_eval(a[j], bq));
      min_a_seen = std::min(min_a_seen, *std::min_element(av.begin(), av.end()));
      if (!admissible) continue;
      if (!(b > 0.0) || *std::min_element(av.begin(), av.end()) <= 0.0) continue;

      KnrRealization x(p, av, b);
      RealizationResult res{build_matrix(x).scaled(scale), x, build_pattern(p), 1.0 / scale, 0.0, 0};
      res.residual = max_abs_diff(char_coeffs_exact(res.matrix), want);
      best_residual = std::min(best_residual, res.residual);
      if (res.residual <= tol) return res;
    }
    if (step % kLadderSteps != 0) continue;
    diag << " [c=2^-" << step / kLadderSteps << ": " << roots.size() << " positive roots of g, g(0) sign "
         << g_int.sign_at(0.0) << ", min a_j " << min_a_seen << "]";
  }
  std::ostringstream msg;
  msg << "no admissible realization down to c = 2^-" << kMaxScalingLevel << " (best residual " << best_residual
      << ");" << diag.str();
  throw Error(ErrorKind::RealizationFailed, msg.str());
}

RealizationResult realize_superpattern(KnrParams p, std::span<const ExtraEntry> extra, const CoeffVector& target,
                                       Precision precision) {
  p = KnrParams::make(p.n, p.r);
  check_target(p, target);
  const auto n = static_cast<std::size_t>(p.n);
  SignPattern pattern = build_pattern(p);
  std::set<Position> seen;
  for (const ExtraEntry& e : extra) {
    if (e.pos.row >= n || e.pos.col >= n) throw Error(ErrorKind::InvalidInput, "extra entry out of range");
    if (e.sign == Sign::Zero) throw Error(ErrorKind::InvalidInput, "extra entry must be nonzero");
    if (pattern.at(e.pos) != Sign::Zero) throw Error(ErrorKind::InvalidInput, "extra entry is already nonzero in K_{n,r}");
    if (!seen.insert(e.pos).second) throw Error(ErrorKind::InvalidInput, "repeated extra entry");
  }
  for (const ExtraEntry& e : extra) pattern = pattern.with_entry(e.pos, e.sign);

  const NilpotentCertificate cert = nilpotent_realization(p, precision);
  double scale = std::max(1.0, cert.t_h);
  for (double v : cert.a0) scale = std::max(scale, v);
  const double eps0 = 1e-3 * scale;

  std::vector<double> x0 = cert.a0;
  x0.push_back(cert.t_h);
  const std::vector<bool> positive(n, true);
  const std::vector<mpq_class> want = exact_target(target);
  const double tol = realization_tolerance(target);
  const Position bp = p.b_position();

  auto assemble = [&](std::span<const double> x, double eps) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      m(i, 0) = x[i];
      m(i, i + 1) = -1.0;
    }
    m(bp.row, bp.col) = x[n - 1];
    m(n - 1, n - 1) = -1.0;
    for (const ExtraEntry& e : extra) m(e.pos.row, e.pos.col) = eps * to_int(e.sign);
    return m;
  };

  double best_residual = HUGE_VAL;
  for (int level = 0; level <= kMaxScalingLevel; ++level) {
    std::vector<double> tau(n);
    for (std::size_t j = 0; j < n; ++j) tau[j] = std::ldexp(target[j], -level * static_cast<int>(j + 1));
    const double newton_tol = 1e-13 * std::max(1.0, norm_inf(tau));

    double eps = eps0;
    for (int attempt = 0; attempt < 10; ++attempt, eps /= 4.0) {
      const VectorFunction F = [&](std::span<const double> x) {
        const CoeffVector c = char_coeffs(assemble(x, eps), precision);
        std::vector<double> out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = c[j] - tau[j];
        return out;
      };
      const JacobianSupplier J = [&](std::span<const double> x) { return finite_difference_jacobian(F, x); };

      NewtonResult sol;
      try {
        sol = newton_solve(F, J, x0, newton_tol, 100, positive);
      } catch (const NewtonFailure& fail) {
        sol = fail.best();  // may still meet the final tolerance
      }
      bool all_positive = true;
      for (double v : sol.x) all_positive = all_positive && v > 0.0;
      if (!all_positive) continue;

      const RealMatrix m = assemble(sol.x, eps).scaled(std::ldexp(1.0, level));
      if (!member_of_class_tol(m, pattern)) continue;
      const double residual = max_abs_diff(char_coeffs_exact(m), want);
      best_residual = std::min(best_residual, residual);
      if (residual > tol) continue;

      std::vector<double> a(sol.x.begin(), sol.x.end() - 1);
      return RealizationResult{m, KnrRealization(p, std::move(a), sol.x.back()), pattern, std::ldexp(1.0, -level),
                               residual, sol.iterations};
    }
  }
  std::ostringstream msg;
  msg << "Newton did not reach the target down to c = 2^-" << kMaxScalingLevel << " (best residual " << best_residual
      << ")";
  throw Error(ErrorKind::RealizationFailed, msg.str());
}

}  // namespace sap
