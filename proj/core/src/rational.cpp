#include "ty/rational.hpp"

#include <ostream>

#include "ty/error.hpp"

namespace ty {

Rational::Rational(long n, long d) {
  require(d != 0, "Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const std::string& num, const std::string& den) {
  mpz_class n(num), d(den);
  require(sgn(d) != 0, "Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(s, "1");
  return Rational(s.substr(0, slash), s.substr(slash + 1));
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), "Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::inverse() const {
  require(!is_zero(), "Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ty
