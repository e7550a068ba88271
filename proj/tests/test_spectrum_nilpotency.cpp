#include <doctest.h>

#include <cmath>

#include "sap/charpoly.hpp"
#include "sap/nilpotent.hpp"

using namespace sap;

// Eigenvalues of every certificate within 1e-6 * n of zero, n <= 20.
TEST_CASE("eigenvalues of nilpotent certificates are near zero") {
  for (int n = 2; n <= 20; ++n) {
    for (int r = 2; r <= n; ++r) {
      const SpectrumList s = spectrum(build_matrix(nilpotent_realization(KnrParams::make(n, r)).realization()));
      double worst = 0.0;
      for (auto z : s) worst = std::max(worst, std::abs(z));
      INFO("n = " << n << ", r = " << r << ", max |lambda| = " << worst);
      CHECK(worst <= 1e-6 * n);
    }
  }
}
