#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "ccc/rational.hpp"

namespace ccc {

enum class ScalarMode { exact, floating };

/// Thrown when an arithmetic operation would mix an exact operand with a
/// floating one. Mode changes must go through Scalar::to_floating().
class ModeMismatchError : public std::logic_error {
 public:
  ModeMismatchError() : std::logic_error("Scalar: mixed exact/floating arithmetic") {}
};

/// Coefficient domain shared by the series and pmf code paths: either an
/// arbitrary-precision rational or an extended-precision float. A value
/// never changes mode implicitly.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}

  static Scalar exact(Rational r) { return Scalar(std::move(r)); }
  static Scalar exact(long num, long den = 1) { return Scalar(Rational(num, den)); }
  static Scalar floating(long double x) { return Scalar(x); }
  static Scalar zero(ScalarMode mode) {
    return mode == ScalarMode::exact ? exact(0) : floating(0.0L);
  }
  static Scalar one(ScalarMode mode) {
    return mode == ScalarMode::exact ? exact(1) : floating(1.0L);
  }

  /// "a/b" (or plain integer / decimal). A slash selects exact mode,
  /// anything else parses as a decimal and selects floating mode.
  static std::optional<Scalar> parse(std::string_view text);

  ScalarMode mode() const {
    return std::holds_alternative<Rational>(v_) ? ScalarMode::exact : ScalarMode::floating;
  }
  bool is_exact() const { return mode() == ScalarMode::exact; }

  const Rational& rat() const;
  long double flt() const;

  Scalar to_floating() const {
    return is_exact() ? floating(static_cast<long double>(rat().to_double())) : *this;
  }
  double to_double() const {
    return is_exact() ? rat().to_double() : static_cast<double>(flt());
  }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar pow(long e) const;

  bool is_zero() const;
  int sign() const;

  /// Same-mode comparison; throws ModeMismatchError otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  /// Exact values print as "a/b"; floating values print as a round-trip
  /// decimal.
  std::string str() const;

 private:
  explicit Scalar(Rational r) : v_(std::move(r)) {}
  explicit Scalar(long double x) : v_(x) {}
  std::variant<Rational, long double> v_;
};

/// Round-trip decimal formatting used for every number the project writes
/// to CSV or structured reports.
std::string format_double(double x);

}  // namespace ccc
