#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sap/errors.hpp"
#include "sap/pattern.hpp"

namespace sap {

using VectorFunction = std::function<std::vector<double>(std::span<const double>)>;
using JacobianSupplier = std::function<RealMatrix(std::span<const double>)>;

struct NewtonResult {
  std::vector<double> x;
  int iterations = 0;
  double residual = 0.0;  // ||F(x)||_inf
};

/// Thrown with ConvergenceError; carries the best iterate seen.
class NewtonFailure : public Error {
 public:
  NewtonFailure(const std::string& message, NewtonResult best)
      : Error(ErrorKind::ConvergenceError, message), best_(std::move(best)) {}
  const NewtonResult& best() const noexcept { return best_; }

 private:
  NewtonResult best_;
};

/// Damped Newton: each step is halved (up to 30 times) until ||F||_inf
/// decreases and every coordinate flagged in `positive` stays > 0.
NewtonResult newton_solve(const VectorFunction& f, const JacobianSupplier& jac, std::vector<double> x0, double tol,
                          int max_iter, const std::vector<bool>& positive = {});

/// Central differences with step rel_step * max(1, |x_k|).
RealMatrix finite_difference_jacobian(const VectorFunction& f, std::span<const double> x, double rel_step = 1e-6);

double norm_inf(std::span<const double> v);

}  // namespace sap
