#include <doctest.h>

#include "ccc/scalar.hpp"

using namespace ccc;

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK((a / b).str() == "2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational pow handles negative exponents") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("abc").has_value());
  CHECK_FALSE(Rational::parse("").has_value());
}

TEST_CASE("scalar keeps modes separate") {
  const Scalar e = Scalar::exact(1, 2);
  const Scalar f = Scalar::floating(0.5L);
  CHECK(e.is_exact());
  CHECK_FALSE(f.is_exact());
  CHECK_THROWS_AS(e + f, ModeMismatchError);
  CHECK_THROWS_AS((void)(e < f), ModeMismatchError);
  CHECK((e.to_floating() + f).to_double() == doctest::Approx(1.0));
  CHECK((e + e) == Scalar::exact(1));
  CHECK(e.pow(-2) == Scalar::exact(4));
}

TEST_CASE("scalar parse routes rationals to exact mode") {
  CHECK(Scalar::parse("1/2")->is_exact());
  CHECK(Scalar::parse("7")->is_exact());
  CHECK_FALSE(Scalar::parse("0.25")->is_exact());
  CHECK(Scalar::parse("0.25")->to_double() == doctest::Approx(0.25));
  CHECK_FALSE(Scalar::parse("nonsense").has_value());
}

TEST_CASE("scalar formatting round-trips") {
  CHECK(Scalar::exact(1, 3).str() == "1/3");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(1.0) == "1");
}
