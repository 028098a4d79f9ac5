#include "ccc/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace ccc {

namespace {

bool same_mode(const Scalar& a, const Scalar& b) { return a.mode() == b.mode(); }

}  // namespace

std::optional<Scalar> Scalar::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    auto r = Rational::parse(text);
    if (!r) return std::nullopt;
    return Scalar::exact(*r);
  }
  // Integers without a slash still parse exactly; decimals go floating.
  if (text.find('.') == std::string_view::npos &&
      text.find('e') == std::string_view::npos &&
      text.find('E') == std::string_view::npos) {
    auto r = Rational::parse(text);
    if (!r) return std::nullopt;
    return Scalar::exact(*r);
  }
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return Scalar::floating(value);
}

const Rational& Scalar::rat() const {
  if (!is_exact()) throw ModeMismatchError();
  return std::get<Rational>(v_);
}

long double Scalar::flt() const {
  if (is_exact()) throw ModeMismatchError();
  return std::get<long double>(v_);
}

Scalar Scalar::operator-() const {
  return is_exact() ? Scalar(-std::get<Rational>(v_)) : Scalar(-std::get<long double>(v_));
}

#define CCC_SCALAR_COMPOUND(op)                                   \
  Scalar& Scalar::operator op##=(const Scalar& o) {               \
    if (!same_mode(*this, o)) throw ModeMismatchError();          \
    if (is_exact())                                               \
      std::get<Rational>(v_) op## = std::get<Rational>(o.v_);     \
    else                                                          \
      std::get<long double>(v_) op## = std::get<long double>(o.v_); \
    return *this;                                                 \
  }

CCC_SCALAR_COMPOUND(+)
CCC_SCALAR_COMPOUND(-)
CCC_SCALAR_COMPOUND(*)
#undef CCC_SCALAR_COMPOUND

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!same_mode(*this, o)) throw ModeMismatchError();
  if (is_exact()) {
    std::get<Rational>(v_) /= std::get<Rational>(o.v_);
  } else {
    if (std::get<long double>(o.v_) == 0.0L)
      throw std::domain_error("Scalar: division by zero");
    std::get<long double>(v_) /= std::get<long double>(o.v_);
  }
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (is_exact()) return Scalar(std::get<Rational>(v_).pow(e));
  long double base = std::get<long double>(v_);
  if (base == 0.0L && e < 0) throw std::domain_error("Scalar: zero to a negative power");
  return Scalar(powl(base, static_cast<long double>(e)));
}

bool Scalar::is_zero() const {
  return is_exact() ? std::get<Rational>(v_).is_zero() : std::get<long double>(v_) == 0.0L;
}

int Scalar::sign() const {
  if (is_exact()) return std::get<Rational>(v_).sign();
  long double x = std::get<long double>(v_);
  return x > 0 ? 1 : x < 0 ? -1 : 0;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!same_mode(a, b)) throw ModeMismatchError();
  if (a.is_exact()) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
  return std::get<long double>(a.v_) == std::get<long double>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (!same_mode(a, b)) throw ModeMismatchError();
  if (a.is_exact()) return std::get<Rational>(a.v_) < std::get<Rational>(b.v_);
  return std::get<long double>(a.v_) < std::get<long double>(b.v_);
}

std::string Scalar::str() const {
  if (is_exact()) return rat().str();
  return format_double(static_cast<double>(flt()));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  return std::string(buf, ptr);
}

}  // namespace ccc
