#include <doctest.h>

#include "ccc/series.hpp"

using namespace ccc;

namespace {

FormalSeries exact_series(SeriesKind kind, std::vector<Rational> cs) {
  std::vector<Scalar> out;
  out.reserve(cs.size());
  for (auto& c : cs) out.push_back(Scalar::exact(std::move(c)));
  return FormalSeries(kind, std::move(out));
}

}  // namespace

TEST_CASE("union is coefficientwise with additive identity") {
  const FormalSeries a = exact_series(SeriesKind::ogf, {Rational(1), Rational(2, 3)});
  const FormalSeries z = FormalSeries::zero(SeriesKind::ogf, 1, ScalarMode::exact);
  const FormalSeries u = combine(CombineOp::unite, a, z);
  CHECK(u[0] == a[0]);
  CHECK(u[1] == a[1]);
}

TEST_CASE("concat of a single-letter language with itself") {
  const Rational q(2, 7);
  const FormalSeries a =
      exact_series(SeriesKind::ogf, {Rational(0), q, Rational(0), Rational(0)});
  const FormalSeries c = combine(CombineOp::concat, a, a);
  CHECK(c[0] == Scalar::exact(0));
  CHECK(c[1] == Scalar::exact(0));
  CHECK(c[2] == Scalar::exact(q * q));
  CHECK(c[3] == Scalar::exact(0));
}

TEST_CASE("shuffle of two single-word languages counts interleavings") {
  // Words of lengths 2 and 3 over a uniform 5-letter alphabet: the z^5/5!
  // coefficient of the product must be C(5,2) (1/5)^5.
  const Rational w(1, 5);
  std::vector<Rational> a(6, Rational(0)), b(6, Rational(0));
  a[2] = w.pow(2) / Rational(2);        // weight / 2!
  b[3] = w.pow(3) / Rational(6);        // weight / 3!
  const FormalSeries sa = exact_series(SeriesKind::egf, a);
  const FormalSeries sb = exact_series(SeriesKind::egf, b);
  const FormalSeries sh = combine(CombineOp::shuffle, sa, sb);
  Rational coeff5 = sh[5].rat() * Rational(120);  // times 5!
  CHECK(coeff5 == Rational(10) * w.pow(5));
}

TEST_CASE("combine enforces kinds and truncates to the smaller order") {
  const FormalSeries ogf = FormalSeries::zero(SeriesKind::ogf, 3, ScalarMode::exact);
  const FormalSeries egf = FormalSeries::zero(SeriesKind::egf, 5, ScalarMode::exact);
  CHECK_THROWS_AS(combine(CombineOp::shuffle, ogf, ogf), std::invalid_argument);
  CHECK_THROWS_AS(combine(CombineOp::concat, egf, egf), std::invalid_argument);
  CHECK_THROWS_AS(combine(CombineOp::unite, ogf, egf), std::invalid_argument);
  CHECK(combine(CombineOp::unite, egf, FormalSeries::zero(SeriesKind::egf, 2,
                                                          ScalarMode::exact))
            .order() == 2);
}

TEST_CASE("series division inverts multiplication") {
  const FormalSeries a = exact_series(
      SeriesKind::ogf, {Rational(1), Rational(-1, 2), Rational(1, 3), Rational(2)});
  const FormalSeries b = exact_series(
      SeriesKind::ogf, {Rational(2), Rational(1), Rational(0), Rational(-1, 5)});
  const FormalSeries q = series_divide(combine(CombineOp::concat, a, b).truncated(3), b);
  for (int n = 0; n <= 3; ++n) CHECK(q[n] == a[n]);
  CHECK_THROWS_AS(series_divide(a, exact_series(SeriesKind::ogf, {Rational(0), Rational(1)})),
                  std::domain_error);
}

TEST_CASE("kind conversion multiplies and divides factorials") {
  const FormalSeries egf = exact_series(
      SeriesKind::egf, {Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)});
  const FormalSeries ogf = egf.with_kind(SeriesKind::ogf);
  for (int n = 0; n <= 3; ++n) CHECK(ogf[n] == Scalar::exact(1));
  const FormalSeries back = ogf.with_kind(SeriesKind::egf);
  for (int n = 0; n <= 3; ++n) CHECK(back[n] == egf[n]);
}

TEST_CASE("rational gf expansion and evaluation") {
  // z / (1 - z)
  const RationalGF gf(Polynomial({Scalar::exact(0), Scalar::exact(1)}),
                      Polynomial({Scalar::exact(1), Scalar::exact(-1)}));
  const FormalSeries s = gf.expand(5);
  CHECK(s[0] == Scalar::exact(0));
  for (int n = 1; n <= 5; ++n) CHECK(s[n] == Scalar::exact(1));
  CHECK(gf.evaluate(Scalar::exact(1, 3)) == Scalar::exact(1, 2));

  CHECK_THROWS_AS(RationalGF(Polynomial({Scalar::exact(1)}),
                             Polynomial({Scalar::exact(0), Scalar::exact(1)})),
                  std::domain_error);
}

TEST_CASE("rational gf division cancels shared denominators") {
  // (z/(1-z)) / ((1+z)/(1-z)) = z/(1+z): series 0, 1, -1, 1, -1, ...
  const RationalGF a(Polynomial({Scalar::exact(0), Scalar::exact(1)}),
                     Polynomial({Scalar::exact(1), Scalar::exact(-1)}));
  const RationalGF b(Polynomial({Scalar::exact(1), Scalar::exact(1)}),
                     Polynomial({Scalar::exact(1), Scalar::exact(-1)}));
  const FormalSeries q = RationalGF::divide(a, b).expand(4);
  CHECK(q[0] == Scalar::exact(0));
  for (int n = 1; n <= 4; ++n) CHECK(q[n] == Scalar::exact(n % 2 == 1 ? 1 : -1));
  // The divisor's numerator must have a nonzero constant term.
  CHECK_THROWS_AS(RationalGF::divide(b, a), std::domain_error);
}
