#include "ccc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccc {

FormalSeries::FormalSeries(SeriesKind kind, std::vector<Scalar> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("FormalSeries: empty coefficient list");
  for (const auto& c : coeffs_)
    if (c.mode() != coeffs_.front().mode()) throw ModeMismatchError();
}

FormalSeries FormalSeries::zero(SeriesKind kind, int order, ScalarMode mode) {
  if (order < 0) throw std::invalid_argument("FormalSeries: negative order");
  return FormalSeries(kind, std::vector<Scalar>(static_cast<size_t>(order) + 1,
                                                Scalar::zero(mode)));
}

FormalSeries FormalSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("FormalSeries: negative order");
  std::vector<Scalar> c(coeffs_.begin(),
                        coeffs_.begin() + std::min<size_t>(coeffs_.size(), order + 1));
  c.resize(static_cast<size_t>(order) + 1, Scalar::zero(mode()));
  return FormalSeries(kind_, std::move(c));
}

FormalSeries FormalSeries::with_kind(SeriesKind kind) const {
  if (kind == kind_) return *this;
  std::vector<Scalar> c = coeffs_;
  Scalar factorial = Scalar::one(mode());
  for (size_t n = 1; n < c.size(); ++n) {
    factorial *= mode() == ScalarMode::exact
                     ? Scalar::exact(static_cast<long>(n))
                     : Scalar::floating(static_cast<long double>(n));
    if (kind_ == SeriesKind::egf)
      c[n] *= factorial;  // egf -> ogf
    else
      c[n] /= factorial;  // ogf -> egf
  }
  return FormalSeries(kind, std::move(c));
}

FormalSeries combine(CombineOp op, const FormalSeries& a, const FormalSeries& b) {
  switch (op) {
    case CombineOp::shuffle:
      if (a.kind() != SeriesKind::egf || b.kind() != SeriesKind::egf)
        throw std::invalid_argument("combine: shuffle requires two EGFs");
      break;
    case CombineOp::concat:
      if (a.kind() != SeriesKind::ogf || b.kind() != SeriesKind::ogf)
        throw std::invalid_argument("combine: concat requires two OGFs");
      break;
    case CombineOp::unite:
      if (a.kind() != b.kind())
        throw std::invalid_argument("combine: union requires matching kinds");
      break;
  }
  const int order = std::min(a.order(), b.order());
  FormalSeries out = FormalSeries::zero(a.kind(), order, a.mode());
  std::vector<Scalar> c = out.coeffs();
  if (op == CombineOp::unite) {
    for (int n = 0; n <= order; ++n) c[static_cast<size_t>(n)] = a[n] + b[n];
  } else {
    // Cauchy product; for EGFs the stored coefficients already carry 1/n!.
    for (int n = 0; n <= order; ++n) {
      Scalar s = Scalar::zero(a.mode());
      for (int k = 0; k <= n; ++k) s += a[k] * b[n - k];
      c[static_cast<size_t>(n)] = s;
    }
  }
  return FormalSeries(a.kind(), std::move(c));
}

FormalSeries series_divide(const FormalSeries& a, const FormalSeries& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("series_divide: kind mismatch");
  if (b[0].is_zero())
    throw std::domain_error("series_divide: divisor has zero constant term");
  const int order = std::min(a.order(), b.order());
  std::vector<Scalar> c(static_cast<size_t>(order) + 1, Scalar::zero(a.mode()));
  for (int n = 0; n <= order; ++n) {
    Scalar s = a[n];
    for (int k = 1; k <= n; ++k) s -= b[k] * c[static_cast<size_t>(n - k)];
    c[static_cast<size_t>(n)] = s / b[0];
  }
  return FormalSeries(a.kind(), std::move(c));
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Polynomial: empty coefficient list");
  for (const auto& v : c_)
    if (v.mode() != c_.front().mode()) throw ModeMismatchError();
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(x.mode());
  for (size_t i = c_.size(); i-- > 0;) {
    Scalar ci = c_[i].mode() == x.mode() ? c_[i]
                                         : c_[i].to_floating();
    acc = acc * x + ci;
  }
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(c_.front().mode()));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()),
                        Scalar::zero(c_.front().mode()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_[0].is_zero())
    throw std::domain_error("RationalGF: denominator constant term is zero");
}

FormalSeries RationalGF::expand(int order) const {
  if (order < 0) throw std::invalid_argument("RationalGF: negative order");
  std::vector<Scalar> c(static_cast<size_t>(order) + 1, Scalar::zero(num_[0].mode()));
  const int dd = den_.degree();
  for (int n = 0; n <= order; ++n) {
    Scalar s = n <= num_.degree() ? num_[n] : Scalar::zero(num_[0].mode());
    for (int k = 1; k <= std::min(n, dd); ++k) s -= den_[k] * c[static_cast<size_t>(n - k)];
    c[static_cast<size_t>(n)] = s / den_[0];
  }
  return FormalSeries(SeriesKind::ogf, std::move(c));
}

Scalar RationalGF::evaluate(const Scalar& x) const {
  return num_.evaluate(x) / den_.evaluate(x);
}

RationalGF RationalGF::divide(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace ccc
