#pragma once

#include <stdexcept>

#include "ccc/scalar.hpp"

namespace ccc {

/// Urn-model parameters: m coupon types, clumsiness probability p in [0,1).
struct ModelParams {
  int m = 1;
  Scalar p = Scalar::exact(0);

  void validate() const {
    if (m < 1) throw std::domain_error("ModelParams: m must be >= 1");
    Scalar zero = Scalar::zero(p.mode());
    Scalar one = Scalar::one(p.mode());
    if (p < zero || p >= one) throw std::domain_error("ModelParams: p must lie in [0, 1)");
  }

  /// Exact arithmetic is used when p is rational and m is small enough
  /// that series division stays cheap; otherwise long-double mode.
  bool exact_mode() const { return p.is_exact() && m <= 64; }
  ScalarMode working_mode() const {
    return exact_mode() ? ScalarMode::exact : ScalarMode::floating;
  }
  /// p in the working mode (converted once, explicitly).
  Scalar working_p() const {
    return exact_mode() ? p : p.to_floating();
  }
  double p_double() const { return p.to_double(); }
};

}  // namespace ccc
