#pragma once

#include <functional>

#include "ccc/model.hpp"
#include "ccc/series.hpp"

namespace ccc {

enum class LetterClass { collect, drop };
enum class ThresholdDirection { below, at_or_above };

/// One-letter repetition language over a 2m-letter alphabet where collect
/// letters carry probability (1-p)/m and drop letters p/m: the words
/// a^n with n < k (below) or n >= k (at_or_above).
struct PrimitiveLangSpec {
  LetterClass letter_class = LetterClass::collect;
  int coupon_count = 1;               // m
  Scalar clumsiness = Scalar::exact(0);  // p
  int threshold = 0;                  // k
  ThresholdDirection direction = ThresholdDirection::at_or_above;

  void validate() const;
};

/// Partial exponential e_k(x) = sum_{l=0}^{k} x^l / l!, with e_{-1} = 0.
Scalar partial_exponential(int k, const Scalar& x);

/// EGF of a primitive language truncated at `order`.
FormalSeries primitive_egf(const PrimitiveLangSpec& spec, int order);

/// OGF of the all-types-collected-and-standing language:
///   numerator (1-p)^m m! z^m, denominator prod_{j=1..m} (m - j z).
/// In floating mode both polynomials are scaled by m^{-m} so large m stays
/// representable; exact mode keeps the literal product form.
RationalGF ogf_H(const ModelParams& params);

/// OGF of the every-drop-recovered language over the shared denominator
/// prod_{k=1..m} (m - k z); numerator
///   sum_{l=0..m} m-falling-l (1-p)^l z^l prod_{k=l+1..m} (m - k z).
RationalGF ogf_G(const ModelParams& params);

/// Numeric transform int_0^inf egf(x t) e^{-t} dt for 0 < x < 1, evaluated
/// on the truncated domain [0, T*] with T* = ln(10/rel_tol)/(1-x) chosen
/// from the e^{xt} envelope of admissible EGFs.
double laplace_borel(const std::function<double(double)>& egf_eval, double x,
                     double rel_tol = 1e-10);

}  // namespace ccc
