#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace ccc {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int levels = 0;
  bool converged = false;
};

/// Raised when the tanh-sinh refinement stalls before reaching the
/// requested tolerance; carries the best value and the achieved estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_result(best) {}
  QuadratureResult best_result;
};

/// Adaptive tanh-sinh rule on the finite interval [a, b]. Converges
/// geometrically for integrands analytic on the open interval, including
/// ones with integrable endpoint behaviour such as (1-x)^s.
QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_floor = 0.0);

/// As tanh_sinh but throws QuadratureError instead of returning a
/// non-converged result.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor = 0.0);

}  // namespace ccc
