#include "sap/newton.hpp"

#include <algorithm>
#include <cmath>

#include "sap/linalg.hpp"

namespace sap {

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::isfinite(x) ? std::abs(x) : HUGE_VAL);
  return m;
}

RealMatrix finite_difference_jacobian(const VectorFunction& f, std::span<const double> x, double rel_step) {
  std::vector<double> xp(x.begin(), x.end());
  RealMatrix J;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double h = rel_step * std::max(1.0, std::abs(x[k]));
    xp[k] = x[k] + h;
    const std::vector<double> fp = f(xp);
    xp[k] = x[k] - h;
    const std::vector<double> fm = f(xp);
    const double step = (x[k] + h) - (x[k] - h);
    xp[k] = x[k];
    if (k == 0) J = RealMatrix(fp.size(), x.size());
    for (std::size_t j = 0; j < fp.size(); ++j) J(j, k) = (fp[j] - fm[j]) / step;
  }
  return J;
}

NewtonResult newton_solve(const VectorFunction& f, const JacobianSupplier& jac, std::vector<double> x0, double tol,
                          int max_iter, const std::vector<bool>& positive) {
  for (double v : x0)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite Newton seed");
  NewtonResult cur{std::move(x0), 0, 0.0};
  std::vector<double> fx = f(cur.x);
  cur.residual = norm_inf(fx);
  auto admissible = [&](const std::vector<double>& x) {
    for (std::size_t i = 0; i < positive.size() && i < x.size(); ++i)
      if (positive[i] && !(x[i] > 0.0)) return false;
    return true;
  };

  while (cur.residual > tol) {
    if (cur.iterations >= max_iter) throw NewtonFailure("Newton iteration limit reached", cur);
    const LuDecomposition lu(jac(cur.x));
    std::vector<double> rhs(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) rhs[i] = -fx[i];
    const auto dx = lu.solve(rhs);
    if (!dx) throw NewtonFailure("singular Jacobian in Newton step", cur);

    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= 30; ++halving, lambda *= 0.5) {
      std::vector<double> trial = cur.x;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += lambda * (*dx)[i];
      if (!admissible(trial)) continue;
      std::vector<double> ft = f(trial);
      const double rt = norm_inf(ft);
      if (rt < cur.residual) {
        cur.x = std::move(trial);
        fx = std::move(ft);
        cur.residual = rt;
        accepted = true;
        break;
      }
    }
    ++cur.iterations;
    if (!accepted) throw NewtonFailure("no decreasing step within 30 halvings", cur);
  }
  return cur;
}

}  // namespace sap
