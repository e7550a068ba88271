#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "sap/errors.hpp"
#include "sap/knr.hpp"
#include "sap/pattern.hpp"
#include "support.hpp"

using namespace sap;

namespace {

const SignPattern kS22 = SignPattern::from_rows({"+-", "+-"});

void check_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("sign_of compares exactly against zero") {
  CHECK(sign_of(3.5) == Sign::Plus);
  CHECK(sign_of(0.0) == Sign::Zero);
  CHECK(sign_of(-0.0) == Sign::Zero);
  CHECK(sign_of(-2.0) == Sign::Minus);
  CHECK(sign_of(std::numeric_limits<double>::denorm_min()) == Sign::Plus);
  check_error(ErrorKind::InvalidInput, [] { (void)sign_of(std::nan("")); });
  check_error(ErrorKind::InvalidInput, [] { (void)sign_of(-HUGE_VAL); });
}

TEST_CASE("member_of_class") {
  CHECK(member_of_class(RealMatrix{{1, -1}, {1, -1}}, kS22));
  CHECK_FALSE(member_of_class(RealMatrix{{0, -1}, {1, -1}}, kS22));
  CHECK(member_of_class(RealMatrix{{2, -3}, {5, -7}}, kS22));
  check_error(ErrorKind::DimensionError, [] { (void)member_of_class(RealMatrix(3, 3), kS22); });
}

TEST_CASE("member_of_class_tol treats tiny entries as zero") {
  CHECK(member_of_class_tol(RealMatrix{{1, -1}, {1, -1}}, kS22));
  CHECK_FALSE(member_of_class_tol(RealMatrix{{1e-13, -1}, {1, -1}}, kS22));
  const SignPattern s = SignPattern::from_rows({"+0", "+-"});
  CHECK(member_of_class_tol(RealMatrix{{1, 1e-13}, {1, -1}}, s));
  CHECK_FALSE(member_of_class_tol(RealMatrix{{1, 1e-3}, {1, -1}}, s));
  CHECK(member_of_class_tol(RealMatrix{{1, 1e-3}, {1, -1}}, s, 1e-2));
}

TEST_CASE("positive scaling preserves the sign class") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RealMatrix a = testing::random_matrix(rng, 1 + trial % 7, -3.0, 3.0);
    SignPattern s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) s = s.with_entry({i, j}, sign_of(a(i, j)));
    REQUIRE(member_of_class(a, s));
    for (double c : {1e-3, 0.5, 2.0, 1e5}) CHECK(member_of_class(a.scaled(c), s));
  }
}

TEST_CASE("is_superpattern") {
  CHECK(is_superpattern(kS22, SignPattern::from_rows({"+0", "+-"})));
  CHECK_FALSE(is_superpattern(SignPattern::from_rows({"--", "+-"}), kS22));
  CHECK(is_superpattern(kS22, kS22));
  check_error(ErrorKind::DimensionError, [] { (void)is_superpattern(kS22, SignPattern(3, 3)); });
}

TEST_CASE("is_superpattern is reflexive, transitive and antisymmetric") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const SignPattern u = testing::random_pattern(rng, n);
    CHECK(is_superpattern(u, u));
    // Random subpatterns by zeroing entries.
    SignPattern s = u;
    std::bernoulli_distribution drop(0.3);
    for (Position p : u.nonzero_positions())
      if (drop(rng)) s = s.with_entry(p, Sign::Zero);
    SignPattern t = s;
    for (Position p : s.nonzero_positions())
      if (drop(rng)) t = t.with_entry(p, Sign::Zero);
    CHECK(is_superpattern(u, s));
    CHECK(is_superpattern(s, t));
    CHECK(is_superpattern(u, t));
    const SignPattern v = testing::random_pattern(rng, n);
    if (is_superpattern(u, v) && is_superpattern(v, u)) CHECK(u == v);
  }
}

TEST_CASE("one_entry_subpatterns") {
  const auto subs = one_entry_subpatterns(kS22);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].first == Position{0, 0});
  CHECK(subs[0].second == SignPattern::from_rows({"0-", "+-"}));
  CHECK(subs[3].second == SignPattern::from_rows({"+-", "+0"}));
  CHECK(one_entry_subpatterns(SignPattern(3, 3)).empty());
  CHECK(one_entry_subpatterns(build_pattern(KnrParams::make(3, 2))).size() == 6);
}

TEST_CASE("each one-entry subpattern drops exactly one nonzero") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const SignPattern s = testing::random_pattern(rng, 1 + trial % 5);
    const auto subs = one_entry_subpatterns(s);
    CHECK(subs.size() == nonzero_count(s));
    for (const auto& [pos, sub] : subs) {
      CHECK(is_superpattern(s, sub));
      CHECK(nonzero_count(sub) + 1 == nonzero_count(s));
      CHECK(sub.at(pos) == Sign::Zero);
      CHECK(sub.with_entry(pos, s.at(pos)) == s);
    }
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(kS22));
  CHECK_FALSE(is_irreducible(SignPattern::from_rows({"+0", "+-"})));
  for (int n = 2; n <= 8; ++n)
    for (int r = 2; r <= n; ++r) CHECK(is_irreducible(build_pattern(KnrParams::make(n, r))));
}

TEST_CASE("strongly connected components come out sinks first") {
  // K_{3,2} without (1,2): {1} is a sink reached from {2,3}.
  const SignPattern s = build_pattern(KnrParams::make(3, 2)).with_entry({0, 1}, Sign::Zero);
  const auto comps = strongly_connected_components(s);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0});
  CHECK(comps[1] == std::vector<std::size_t>{1, 2});
}

TEST_CASE("nonzero_count") {
  CHECK(nonzero_count(kS22) == 4);
  CHECK(nonzero_count(SignPattern(3, 3)) == 0);
  for (int n = 2; n <= 20; ++n)
    for (int r = 2; r <= n; ++r) CHECK(nonzero_count(build_pattern(KnrParams::make(n, r))) == static_cast<std::size_t>(2 * n));
}

TEST_CASE("pattern rows reject unknown characters and ragged input") {
  check_error(ErrorKind::InvalidInput, [] { (void)SignPattern::from_rows({"+x"}); });
  check_error(ErrorKind::DimensionError, [] { (void)SignPattern::from_rows({"+-", "+"}); });
}
