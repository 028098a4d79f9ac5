#pragma once

#include <vector>

#include "ccc/scalar.hpp"

namespace ccc {

enum class SeriesKind { ogf, egf };

/// Truncated power series. An OGF stores [z^n] directly; an EGF stores the
/// weight of length-n words divided by n!, so that pointwise products of
/// EGF coefficient lists realise the shuffle rule.
class FormalSeries {
 public:
  FormalSeries(SeriesKind kind, std::vector<Scalar> coeffs);
  static FormalSeries zero(SeriesKind kind, int order, ScalarMode mode);

  SeriesKind kind() const { return kind_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int n) const { return coeffs_.at(static_cast<size_t>(n)); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  ScalarMode mode() const { return coeffs_.front().mode(); }

  FormalSeries truncated(int order) const;
  /// Multiplies every coefficient n by n!, turning an EGF into the matching
  /// OGF coefficient list (and vice versa for divide).
  FormalSeries with_kind(SeriesKind kind) const;

 private:
  SeriesKind kind_;
  std::vector<Scalar> coeffs_;
};

enum class CombineOp { shuffle, concat, unite };

/// Language combinators on series: shuffle = EGF product, concat = OGF
/// product, unite = coefficientwise sum. Disjointness / unique
/// factorisation of the underlying languages is the caller's obligation;
/// the algebra is computed unconditionally. Output order is the smaller
/// of the input orders.
FormalSeries combine(CombineOp op, const FormalSeries& a, const FormalSeries& b);

/// Coefficients of a/b up to min(order) where b has a nonzero constant term.
FormalSeries series_divide(const FormalSeries& a, const FormalSeries& b);

/// Dense polynomial over Scalar; coefficient i multiplies z^i.
class Polynomial {
 public:
  Polynomial() : c_{Scalar::exact(0)} {}
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(Scalar v) { return Polynomial({std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar evaluate(const Scalar& x) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;

 private:
  std::vector<Scalar> c_;
};

/// Ratio of polynomials with a nonzero denominator constant term, so a
/// power-series expansion at the origin exists. Kept unnormalised: no GCD
/// cancellation is performed, preserving structural product forms.
class RationalGF {
 public:
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// OGF series of the ratio, truncated at `order`.
  FormalSeries expand(int order) const;
  Scalar evaluate(const Scalar& x) const;

  /// (a.num * b.den) / (a.den * b.num); requires b's numerator to have a
  /// nonzero constant term.
  static RationalGF divide(const RationalGF& a, const RationalGF& b);

 private:
  Polynomial num_, den_;
};

}  // namespace ccc
