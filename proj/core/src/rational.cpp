#include "ccc/rational.hpp"

#include <stdexcept>

namespace ccc {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  mpq_class v;
  if (v.set_str(s, 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: zero to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r = e > 0 ? mpq_class(num) / mpq_class(den) : mpq_class(den) / mpq_class(num);
  r.canonicalize();
  return Rational(std::move(r));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

}  // namespace ccc
