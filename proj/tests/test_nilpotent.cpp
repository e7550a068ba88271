#include <doctest.h>

#include <cmath>

#include "sap/charpoly.hpp"
#include "sap/errors.hpp"
#include "sap/nilpotent.hpp"
#include "sap/polynomial.hpp"

using namespace sap;

TEST_CASE("recurrence_polys examples") {
  const RecurrencePolys p32 = recurrence_polys(KnrParams::make(3, 2));
  CHECK(p32.a.at(2) == IntPolynomial{1, -1});
  CHECK(p32.h == IntPolynomial{1, -2});

  const RecurrencePolys p42 = recurrence_polys(KnrParams::make(4, 2));
  CHECK(p42.a.at(3) == IntPolynomial{1, -2});
  CHECK(p42.h == IntPolynomial{1, -3, 1});

  const RecurrencePolys p53 = recurrence_polys(KnrParams::make(5, 3));
  CHECK(p53.a.at(3) == IntPolynomial{1, -1});
  CHECK(p53.a.at(4) == IntPolynomial{1, -2});
  CHECK(p53.h == IntPolynomial{1, -3});

  try {
    (void)recurrence_polys(KnrParams::make(4, 4));
    FAIL("expected UnsupportedParams");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedParams);
  }
}

TEST_CASE("recurrence polynomials: degrees, constant terms, early closed form") {
  for (int n = 3; n <= 40; ++n) {
    for (int r = 2; r < n; ++r) {
      const RecurrencePolys rp = recurrence_polys(KnrParams::make(n, r));
      REQUIRE(rp.a.size() == static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        const IntPolynomial& aj = rp.a[static_cast<std::size_t>(j)];
        CHECK(aj.degree() == j / r);
        CHECK(aj.coeff(0) == 1);
        if (j >= 1) {
          const IntPolynomial rhs = rp.a[static_cast<std::size_t>(j - 1)] -
                                    (j >= r ? rp.a[static_cast<std::size_t>(j - r)].times_t() : IntPolynomial{});
          CHECK(aj == rhs);
        }
      }
      for (int i = 0; i <= r - 1 && r + i < n; ++i) CHECK(rp.a[static_cast<std::size_t>(r + i)] == IntPolynomial{1, -(i + 1)});
      CHECK(rp.h.coeff(0) == 1);
      CHECK(rp.h == rp.a[static_cast<std::size_t>(n - 1)] - rp.a[static_cast<std::size_t>(n - r)].times_t());
    }
  }
}

TEST_CASE("min chain examples") {
  const MinChain c42 = min_chain(KnrParams::make(4, 2));
  REQUIRE(c42.links.size() == 3);
  CHECK(c42.verified);
  CHECK(c42.links[0].index == 4);
  CHECK(std::abs(c42.links[0].root.value - (3 - std::sqrt(5.0)) / 2) <= 1e-14);
  CHECK(c42.links[1].root.value == 0.5);
  CHECK(c42.links[2].root.value == 1.0);
  CHECK(verify_min_chain(KnrParams::make(3, 2)));
}

TEST_CASE("min chain holds with strictly separated brackets") {
  for (int n = 3; n <= 40; ++n) {
    for (int r = 2; r < n; ++r) {
      const MinChain c = min_chain(KnrParams::make(n, r));
      CHECK(c.verified);
      REQUIRE(c.links.size() == static_cast<std::size_t>(n - r + 1));
      for (std::size_t i = 0; i + 1 < c.links.size(); ++i) CHECK(c.links[i].root.bracket.hi < c.links[i + 1].root.bracket.lo);
      const RootBracket& last = c.links.back().root.bracket;
      CHECK(last.lo < 1.0);
      CHECK(1.0 < last.hi);
    }
  }
}

TEST_CASE("nilpotent certificate examples") {
  const NilpotentCertificate c22 = nilpotent_realization(KnrParams::make(2, 2));
  CHECK(c22.t_h == 1.0);
  CHECK(c22.a0 == std::vector<double>{1.0});
  CHECK_FALSE(c22.bracket.has_value());
  CHECK(build_matrix(c22.realization()) == RealMatrix{{1, -1}, {1, -1}});

  const NilpotentCertificate c32 = nilpotent_realization(KnrParams::make(3, 2));
  CHECK(c32.t_h == 0.5);
  CHECK(c32.a0 == std::vector<double>{1.0, 0.5});
  CHECK(c32.residual == 0.0);

  const NilpotentCertificate c42 = nilpotent_realization(KnrParams::make(4, 2));
  const double s5 = std::sqrt(5.0);
  CHECK(std::abs(c42.t_h - (3 - s5) / 2) <= 1e-12);
  CHECK(std::abs(c42.a0[1] - (s5 - 1) / 2) <= 1e-12);
  CHECK(std::abs(c42.a0[2] - (s5 - 2)) <= 1e-12);
  CHECK(c42.residual <= 1e-12);
  for (auto z : spectrum(build_matrix(c42.realization()))) CHECK(std::abs(z) <= 1e-3);

  CHECK(nilpotent_realization(KnrParams::make(5, 2)).t_h == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(nilpotent_realization(KnrParams::make(5, 3)).t_h == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("r = n certificates use t = 1") {
  for (int n = 2; n <= 20; ++n) {
    const NilpotentCertificate c = nilpotent_realization(KnrParams::make(n, n));
    CHECK(c.t_h == 1.0);
    CHECK(c.a0 == std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
    CHECK(c.residual <= nilpotent_tolerance(n));
    for (const auto& v : char_coeffs_exact(build_matrix(c.realization()))) CHECK(v == 0);
  }
}

TEST_CASE("certificates: brackets, positivity and residuals") {
  for (int n = 3; n <= 40; ++n) {
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      const NilpotentCertificate c = nilpotent_realization(p);
      CHECK(c.chain_verified);
      CHECK(c.positivity_certified);
      CHECK(c.residual <= nilpotent_tolerance(n));
      REQUIRE(c.bracket.has_value());
      const RootBracket& b = *c.bracket;
      CHECK(b.width() <= 1e-14);
      CHECK(b.lo <= c.t_h);
      CHECK(c.t_h <= b.hi);
      CHECK(b.poly.sign_at(b.lo) == -b.poly.sign_at(b.hi));
      SturmSequence s(b.poly);
      CHECK(s.count(0.0, b.lo) == 0);
      CHECK(s.count(b.lo, b.hi) == 1);
      for (std::size_t j = 0; j < c.a0.size(); ++j) {
        CHECK(c.a0[j] > 0.0);
        if (static_cast<int>(j) + 1 <= r - 1) CHECK(c.a0[j] == 1.0);
      }
      // Certified margin: every a_j is positive at both exact bracket ends.
      const RecurrencePolys rp = recurrence_polys(p);
      for (int j = 1; j < n; ++j) {
        CHECK(rp.a[static_cast<std::size_t>(j)].sign_at(b.lo) > 0);
        CHECK(rp.a[static_cast<std::size_t>(j)].sign_at(b.hi) > 0);
      }
    }
  }
}

TEST_CASE("extended precision gives the same certificate") {
  for (int n = 3; n <= 15; ++n)
    for (int r = 2; r < n; ++r) {
      const KnrParams p = KnrParams::make(n, r);
      const NilpotentCertificate d = nilpotent_realization(p), e = nilpotent_realization(p, Precision::Extended);
      CHECK(d.t_h == e.t_h);
      CHECK(d.a0 == e.a0);
    }
}
