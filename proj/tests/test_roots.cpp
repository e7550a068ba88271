#include <doctest.h>

#include <cmath>
#include <random>

#include "sap/errors.hpp"
#include "sap/polynomial.hpp"
#include "sap/root_isolation.hpp"

using namespace sap;

namespace {

// prod (den_i t - num_i)
IntPolynomial from_roots(std::initializer_list<std::pair<long, long>> roots) {
  IntPolynomial p{1};
  for (auto [num, den] : roots) p = p * IntPolynomial{-num, den};
  return p;
}

void check_bracket(const RootBracket& b) {
  const int slo = b.poly.sign_at(b.lo), shi = b.poly.sign_at(b.hi);
  CHECK(slo != 0);
  CHECK(shi != 0);
  CHECK(slo == -shi);
  CHECK(b.lo < b.hi);
  SturmSequence s(b.poly);
  CHECK(s.count(0.0, b.lo) == 0);
  CHECK(s.count(b.lo, b.hi) == 1);
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

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p{1, -3, 1};  // t^2 - 3t + 1
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == IntPolynomial{-3, 2});
  CHECK(p.times_t() == IntPolynomial{0, 1, -3, 1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(IntPolynomial{6, 4, 2}.content() == 2);
  CHECK(IntPolynomial{-6, -4, -2}.primitive() == IntPolynomial{-3, -2, -1});
  CHECK(p.evaluate(mpq_class(1, 2)) == mpq_class(-1, 4));
  CHECK(p.to_string() == "t^2 - 3t + 1");
}

TEST_CASE("pseudo-division identity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpz_class> ac(1 + trial % 9), bc(1 + trial % 5);
    for (auto& c : ac) c = coef(rng);
    for (auto& c : bc) c = coef(rng);
    bc.back() = bc.back() == 0 ? 3 : bc.back();
    const IntPolynomial a(ac), b(bc);
    const PseudoDivision d = pseudo_divide(a, b);
    mpz_class lc_pow;
    mpz_pow_ui(lc_pow.get_mpz_t(), b.leading().get_mpz_t(), d.steps);
    CHECK(lc_pow * a == d.quotient * b + d.remainder);
    CHECK(d.remainder.degree() < b.degree());
  }
}

TEST_CASE("signs are exact at doubles") {
  const IntPolynomial p{-1, 2};  // 2t - 1
  CHECK(p.sign_at(0.5) == 0);
  CHECK(p.sign_at(std::nextafter(0.5, 1.0)) == 1);
  CHECK(p.sign_at(std::nextafter(0.5, 0.0)) == -1);
  // (3t - 1) has no double root; the sign flips between neighbours of 1/3.
  const IntPolynomial q{-1, 3};
  const double third = 1.0 / 3.0;
  CHECK(q.sign_at(third) * q.sign_at(std::nextafter(third, 1.0)) == -1);
}

TEST_CASE("rational conversions round trip") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(2.0, (i % 40) - 20);
    CHECK(nearest_double(to_rational(x)) == x);
  }
  CHECK(nearest_double(mpq_class(1, 3)) == 1.0 / 3.0);
  CHECK(nearest_double(mpq_class(-2, 7)) == -2.0 / 7.0);
}

TEST_CASE("min_positive_root examples") {
  const IsolatedRoot a = min_positive_root(IntPolynomial{1, -2});
  CHECK(a.value == 0.5);
  const IsolatedRoot b = min_positive_root(IntPolynomial{1, -3, 1});
  CHECK(std::abs(b.value - (3.0 - std::sqrt(5.0)) / 2.0) <= 1e-14);
  CHECK(b.bracket.width() <= 1e-14);
  check_bracket(b.bracket);
  CHECK(min_positive_root(IntPolynomial{1, -1}).value == 1.0);
}

TEST_CASE("min_positive_root errors") {
  CHECK(kind_of([] { (void)min_positive_root(IntPolynomial{1, 1}); }) == ErrorKind::NoPositiveRoot);
  CHECK(kind_of([] { (void)min_positive_root(IntPolynomial{1, 0, 1}); }) == ErrorKind::NoPositiveRoot);
  CHECK(kind_of([] { (void)min_positive_root(IntPolynomial{-1, 1}); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { (void)min_positive_root(IntPolynomial{0, 1}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("close and repeated roots are separated and counted once") {
  // Roots 1/1000, 1/999 (double), 5 and a negative one.
  const IntPolynomial p = from_roots({{1, 1000}, {1, 999}, {1, 999}, {5, 1}, {-2, 1}});
  SturmSequence s(p);
  CHECK(s.count(0.0, 10.0) == 3);
  CHECK(s.count(-10.0, 10.0) == 4);
  const auto roots = isolate_positive_roots(p);
  REQUIRE(roots.size() == 3);
  RootBracket r0 = roots[0];
  CHECK(std::abs(refine_bracket(r0) - 0.001) <= 1e-15);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  const IsolatedRoot m = min_positive_root(p);
  CHECK(std::abs(m.value - 0.001) <= 1e-15);
  check_bracket(m.bracket);
}

TEST_CASE("isolated roots match known rationals") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(1, 50), den(1, 30);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> want;
    IntPolynomial p{1};
    for (int k = 0; k < 1 + trial % 6; ++k) {
      const long a = num(rng), b = den(rng);
      p = p * IntPolynomial{-a, b};
      want.push_back(double(a) / double(b));
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    auto roots = isolate_positive_roots(p);
    REQUIRE(roots.size() == want.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(std::abs(refine_bracket(roots[i]) - want[i]) <= 1e-14 * std::max(1.0, want[i]));
    }
  }
}

TEST_CASE("sign_on_bracket decides the sign of a second polynomial") {
  // Root of 1 - 2t at 1/2; q = 3t - 1 is positive there, q2 = 2t - 1 vanishes.
  RootBracket b = isolate_positive_roots(IntPolynomial{1, -2}).at(0);
  const IntPolynomial q{-1, 3};
  CHECK(sign_on_bracket(q, SturmSequence(q), b) == 1);
  const IntPolynomial q2{-1, 2};
  RootBracket b2 = isolate_positive_roots(IntPolynomial{1, -2}).at(0);
  CHECK(sign_on_bracket(q2, SturmSequence(q2), b2) == 0);
}

TEST_CASE("positive_root_bound bounds every root") {
  const IntPolynomial p = from_roots({{7, 2}, {-9, 1}, {1, 3}});
  const double bound = positive_root_bound(p);
  CHECK(bound >= 9.0);
  CHECK(std::log2(bound) == std::floor(std::log2(bound)));
}
