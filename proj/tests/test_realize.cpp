#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sap/charpoly.hpp"
#include "sap/errors.hpp"
#include "sap/jacobian.hpp"
#include "sap/newton.hpp"
#include "sap/nilpotent.hpp"
#include "sap/polynomial.hpp"
#include "sap/realize.hpp"

using namespace sap;

namespace {

CoeffVector random_target(std::mt19937_64& rng, int n, double bound = 5.0) {
  std::uniform_real_distribution<double> u(-bound, bound);
  CoeffVector t;
  for (int j = 0; j < n; ++j) t.alpha.push_back(u(rng));
  return t;
}

double exact_residual(const RealMatrix& m, const CoeffVector& target) {
  const auto exact = char_coeffs_exact(m);
  double worst = 0.0;
  for (std::size_t j = 0; j < exact.size(); ++j)
    worst = std::max(worst, std::abs(nearest_double(exact[j] - to_rational(target[j]))));
  return worst;
}

// Greedy nearest matching; targets below are well separated.
double spectrum_mismatch(SpectrumList got, const SpectrumList& want) {
  double worst = 0.0;
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](auto a, auto b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("newton_solve examples") {
  const VectorFunction f = [](std::span<const double> x) { return std::vector<double>{x[0] - 1.0}; };
  const JacobianSupplier j = [](std::span<const double>) { return RealMatrix{{1.0}}; };
  const NewtonResult r = newton_solve(f, j, {5.0}, 1e-14, 10);
  CHECK(r.x[0] == 1.0);
  CHECK(r.iterations == 1);

  const KnrParams p = KnrParams::make(6, 3);
  const NilpotentCertificate c = nilpotent_realization(p);
  std::vector<double> seed = c.a0;
  seed.push_back(c.t_h);
  auto alpha_minus = [&](const CoeffVector& target) {
    return VectorFunction([&p, target](std::span<const double> x) {
      std::vector<double> out = alpha_map({p, std::vector<double>(x.begin(), x.end() - 1), x.back()}).alpha;
      for (std::size_t k = 0; k < out.size(); ++k) out[k] -= target[k];
      return out;
    });
  };
  const JacobianSupplier jac = [&](std::span<const double> x) {
    return jacobian_matrix({p, std::vector<double>(x.begin(), x.end() - 1), x.back()});
  };
  const std::vector<bool> positive(6, true);
  CHECK(newton_solve(alpha_minus(CoeffVector{std::vector<double>(6, 0.0)}), jac, seed, 1e-12, 50, positive).iterations == 0);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const CoeffVector t = random_target(rng, 6, 0.1);
    const NewtonResult s = newton_solve(alpha_minus(t), jac, seed, 1e-12, 25, positive);
    CHECK(s.iterations <= 25);
    CHECK(s.residual <= 1e-12);
  }
}

TEST_CASE("newton_solve reports the best iterate on failure") {
  // x^2 + 1 has no real root.
  const VectorFunction f = [](std::span<const double> x) { return std::vector<double>{x[0] * x[0] + 1.0}; };
  const JacobianSupplier j = [](std::span<const double> x) { return RealMatrix{{2.0 * x[0]}}; };
  try {
    (void)newton_solve(f, j, {0.5}, 1e-12, 20);
    FAIL("expected NewtonFailure");
  } catch (const NewtonFailure& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceError);
    CHECK(e.best().residual >= 1.0);
  }
}

TEST_CASE("zero target recovers the nilpotent certificate") {
  for (int n = 3; n <= 12; ++n)
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      const RealizationResult res = realize(p, CoeffVector{std::vector<double>(static_cast<std::size_t>(n), 0.0)});
      const NilpotentCertificate c = nilpotent_realization(p);
      CHECK(res.scaling_c == 1.0);
      CHECK(res.params.b() == c.t_h);
      CHECK(res.params.a() == c.a0);
    }
}

TEST_CASE("realize the spectrum {1,2,3} in K_{3,2}") {
  const CoeffVector target{{6, 11, 6}};
  const RealizationResult res = realize(KnrParams::make(3, 2), target);
  CHECK(res.params.b() == 3.0);
  CHECK(res.params.a() == std::vector<double>{7.0, 15.0});
  CHECK(res.residual == 0.0);
  CHECK(spectrum_mismatch(spectrum(res.matrix), {{1, 0}, {2, 0}, {3, 0}}) <= 1e-6);
}

TEST_CASE("random targets: round trip, membership and scaling identity") {
  std::mt19937_64 rng(2718);
  for (int n = 3; n <= 8; ++n) {
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      for (int trial = 0; trial < (n == 4 && r == 2 ? 100 : 15); ++trial) {
        const CoeffVector t = random_target(rng, n);
        const RealizationResult res = realize(p, t);
        const double tol = realization_tolerance(t);
        INFO("n = " << n << ", r = " << r << ", trial " << trial);
        CHECK(member_of_class(res.matrix, build_pattern(p)));
        CHECK(member_of_class_tol(res.matrix, build_pattern(p), 1e-12));
        CHECK(res.residual <= tol);
        CHECK(exact_residual(res.matrix, t) <= tol);
        const CoeffVector fl = char_coeffs(res.matrix, Precision::Extended);
        for (int j = 0; j < n; ++j) CHECK(std::abs(fl[j] - t[j]) <= tol);
        // c * matrix has coefficients c^j alpha_j.
        const double c = res.scaling_c;
        const CoeffVector scaled = char_coeffs(res.matrix.scaled(c));
        for (int j = 0; j < n; ++j) CHECK(std::abs(scaled[j] - std::pow(c, j + 1) * t[j]) <= 1e-8);
      }
    }
  }
}

TEST_CASE("eigenvalue targets are reproduced") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      // Distinct real eigenvalues on a grid plus conjugate pairs.
      SpectrumList want;
      int k = 0;
      while (static_cast<int>(want.size()) < n) {
        const double re = -2.5 + 0.6 * k++ + 0.05 * u(rng);
        if (n - static_cast<int>(want.size()) >= 2 && k % 3 == 0) {
          const double im = 0.5 + 0.1 * std::abs(u(rng));
          want.emplace_back(re, im);
          want.emplace_back(re, -im);
        } else {
          want.emplace_back(re, 0.0);
        }
      }
      const CoeffVector t = coeffs_from_spectrum(want);
      const int r = 2 + trial % (n - 2);
      const RealizationResult res = realize(KnrParams::make(n, r), t);
      INFO("n = " << n << ", r = " << r);
      CHECK(spectrum_mismatch(spectrum(res.matrix), want) <= 1e-5);
    }
  }
}

TEST_CASE("realize preconditions") {
  CHECK(kind_of([] { (void)realize(KnrParams::make(3, 3), CoeffVector{{0, 0, 0}}); }) == ErrorKind::UnsupportedParams);
  CHECK(kind_of([] { (void)realize(KnrParams::make(3, 2), CoeffVector{{0, 0}}); }) == ErrorKind::DimensionError);
  CHECK(kind_of([] { (void)realize(KnrParams::make(3, 2), CoeffVector{{0, NAN, 0}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("superpattern realization") {
  const KnrParams p42 = KnrParams::make(4, 2);
  const std::vector<ExtraEntry> extra{{{1, 3}, Sign::Minus}};
  const CoeffVector t{{1, 0, 0, 0}};
  const RealizationResult res = realize_superpattern(p42, extra, t);
  const SignPattern super = build_pattern(p42).with_entry({1, 3}, Sign::Minus);
  CHECK(res.pattern == super);
  CHECK(member_of_class_tol(res.matrix, super, 1e-12));
  CHECK(res.residual <= 1e-8);
  CHECK(exact_residual(res.matrix, t) <= 1e-8);

  const std::vector<ExtraEntry> taken{{{2, 2}, Sign::Plus}};
  CHECK(kind_of([&] { (void)realize_superpattern(KnrParams::make(3, 2), taken, CoeffVector{{0, 0, 0}}); }) ==
        ErrorKind::InvalidInput);
  const std::vector<ExtraEntry> zero{{{0, 2}, Sign::Zero}};
  CHECK(kind_of([&] { (void)realize_superpattern(KnrParams::make(3, 2), zero, CoeffVector{{0, 0, 0}}); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("superpattern realization with no extra entries agrees with realize") {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 7; ++n)
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      const CoeffVector t = random_target(rng, n, 1.0);
      const RealizationResult a = realize(p, t), b = realize_superpattern(p, {}, t);
      const auto ca = char_coeffs_exact(a.matrix), cb = char_coeffs_exact(b.matrix);
      for (int j = 0; j < n; ++j) CHECK(std::abs(nearest_double(ca[j] - cb[j])) <= 1e-8);
      CHECK(member_of_class_tol(b.matrix, build_pattern(p)));
    }
}

TEST_CASE("superpattern realization with random extras") {
  std::mt19937_64 rng(13);
  for (int n = 3; n <= 7; ++n) {
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      const SignPattern k = build_pattern(p);
      std::vector<Position> zeros;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
          if (k(i, j) == Sign::Zero) zeros.push_back({i, j});
      std::shuffle(zeros.begin(), zeros.end(), rng);
      std::vector<ExtraEntry> extra;
      for (std::size_t e = 0; e < std::min<std::size_t>(2, zeros.size()); ++e)
        extra.push_back({zeros[e], e % 2 ? Sign::Minus : Sign::Plus});
      const CoeffVector t = random_target(rng, n, 2.0);
      const RealizationResult res = realize_superpattern(p, extra, t);
      INFO("n = " << n << ", r = " << r);
      CHECK(member_of_class_tol(res.matrix, res.pattern));
      CHECK(exact_residual(res.matrix, t) <= realization_tolerance(t));
    }
  }
}
