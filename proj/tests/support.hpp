#pragma once

#include <cmath>
#include <random>

#include "sap/pattern.hpp"

namespace sap::testing {

inline RealMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

inline SignPattern random_pattern(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> u(0, 2);
  SignPattern s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s = s.with_entry({i, j}, u(rng) == 0 ? Sign::Plus : u(rng) == 1 ? Sign::Minus : Sign::Zero);
  return s;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace sap::testing
