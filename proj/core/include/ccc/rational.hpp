#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ccc {

/// Arbitrary-precision rational, always kept in canonical (reduced) form
/// with a positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a", "a/b" or "-a/b" in base 10. Returns nullopt on malformed
  /// input or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Integer power; negative exponents invert (throws std::domain_error on 0).
  Rational pow(long e) const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  struct NoCanon {};
  Rational(mpq_class v, NoCanon) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace ccc
