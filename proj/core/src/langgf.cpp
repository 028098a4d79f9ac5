#include "ccc/langgf.hpp"

#include <cmath>
#include <stdexcept>

#include "ccc/numeric.hpp"
#include "ccc/quadrature.hpp"

namespace ccc {

namespace {

Scalar scalar_int(long n, ScalarMode mode) {
  return mode == ScalarMode::exact ? Scalar::exact(n)
                                   : Scalar::floating(static_cast<long double>(n));
}

}  // namespace

void PrimitiveLangSpec::validate() const {
  if (coupon_count < 1) throw std::domain_error("PrimitiveLangSpec: m must be >= 1");
  if (threshold < 0) throw std::domain_error("PrimitiveLangSpec: k must be >= 0");
  const Scalar zero = Scalar::zero(clumsiness.mode());
  const Scalar one = Scalar::one(clumsiness.mode());
  if (clumsiness < zero || clumsiness >= one)
    throw std::domain_error("PrimitiveLangSpec: p must lie in [0, 1)");
}

Scalar partial_exponential(int k, const Scalar& x) {
  if (k < -1) throw std::domain_error("partial_exponential: k must be >= -1");
  Scalar sum = Scalar::zero(x.mode());
  Scalar term = Scalar::one(x.mode());
  for (int l = 0; l <= k; ++l) {
    if (l > 0) term = term * x / scalar_int(l, x.mode());
    sum += term;
  }
  return sum;
}

FormalSeries primitive_egf(const PrimitiveLangSpec& spec, int order) {
  spec.validate();
  if (order < 0) throw std::invalid_argument("primitive_egf: negative order");
  const ScalarMode mode = spec.clumsiness.mode();
  const Scalar m = scalar_int(spec.coupon_count, mode);
  const Scalar rate = spec.letter_class == LetterClass::collect
                          ? (Scalar::one(mode) - spec.clumsiness) / m
                          : spec.clumsiness / m;
  // Coefficient n of exp(rate z) is rate^n / n!; a threshold keeps or
  // removes the head of that list.
  std::vector<Scalar> c(static_cast<size_t>(order) + 1, Scalar::zero(mode));
  Scalar term = Scalar::one(mode);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) term = term * rate / scalar_int(n, mode);
    const bool below = n < spec.threshold;
    if ((spec.direction == ThresholdDirection::below) == below)
      c[static_cast<size_t>(n)] = term;
  }
  return FormalSeries(SeriesKind::egf, std::move(c));
}

namespace {

// prod_{k=lo..hi} (m - k z) as a polynomial, optionally scaled so the
// constant term stays O(1) for large m.
Polynomial linear_product(int m, int lo, int hi, ScalarMode mode, bool scaled) {
  Polynomial acc = Polynomial::constant(Scalar::one(mode));
  for (int k = lo; k <= hi; ++k) {
    Scalar a = scalar_int(m, mode);
    Scalar b = -scalar_int(k, mode);
    if (scaled) {
      a = a / scalar_int(m, mode);
      b = b / scalar_int(m, mode);
    }
    acc = acc * Polynomial({a, b});
  }
  return acc;
}

}  // namespace

RationalGF ogf_H(const ModelParams& params) {
  params.validate();
  const ScalarMode mode = params.working_mode();
  const Scalar p = params.working_p();
  const int m = params.m;
  const bool scaled = mode == ScalarMode::floating;

  Scalar lead = (Scalar::one(mode) - p).pow(m);
  for (int k = 1; k <= m; ++k) {
    lead *= scalar_int(k, mode);
    if (scaled) lead /= scalar_int(m, mode);  // m! / m^m stays representable
  }
  if (scaled && lead.is_zero()) {
    // (1-p)^m m!/m^m fell below the floating range; the series route is
    // unusable here and the Markov route should be used instead.
    const double pd = p.to_double();
    const double log10_lead =
        (m * std::log1p(-pd) + std::lgamma(m + 1.0) - m * std::log(m)) / std::log(10.0);
    throw OverflowError("ogf_H: numerator underflows in floating mode", log10_lead);
  }
  std::vector<Scalar> num(static_cast<size_t>(m) + 1, Scalar::zero(mode));
  num[static_cast<size_t>(m)] = lead;
  return RationalGF(Polynomial(std::move(num)), linear_product(m, 1, m, mode, scaled));
}

RationalGF ogf_G(const ModelParams& params) {
  params.validate();
  const ScalarMode mode = params.working_mode();
  const Scalar p = params.working_p();
  const int m = params.m;
  const bool scaled = mode == ScalarMode::floating;

  Polynomial num = Polynomial::constant(Scalar::zero(mode));
  Scalar falling = Scalar::one(mode);       // m (m-1) ... (m-l+1)
  Scalar q_pow = Scalar::one(mode);         // (1-p)^l
  const Scalar q = Scalar::one(mode) - p;
  for (int l = 0; l <= m; ++l) {
    if (l > 0) {
      falling *= scalar_int(m - l + 1, mode);
      if (scaled) falling /= scalar_int(m, mode);
      q_pow *= q;
    }
    std::vector<Scalar> zl(static_cast<size_t>(l) + 1, Scalar::zero(mode));
    zl[static_cast<size_t>(l)] = falling * q_pow;
    num = num + Polynomial(std::move(zl)) * linear_product(m, l + 1, m, mode, scaled);
  }
  return RationalGF(num, linear_product(m, 1, m, mode, scaled));
}

double laplace_borel(const std::function<double(double)>& egf_eval, double x,
                     double rel_tol) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("laplace_borel: x must lie in (0, 1)");
  if (!(rel_tol > 0))
    throw std::domain_error("laplace_borel: rel_tol must be positive");
  const double t_star = std::log(10.0 / rel_tol) / (1.0 - x);
  return integrate([&](double t) { return egf_eval(x * t) * std::exp(-t); }, 0.0,
                   t_star, rel_tol * 0.1);
}

}  // namespace ccc
