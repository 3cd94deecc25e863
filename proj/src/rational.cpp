#include "hyperarr/rational.hpp"

#include <cctype>
#include <ostream>

namespace hyperarr {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("rational: zero denominator");
  v_ = mpq_class(static_cast<signed long>(n), static_cast<signed long>(d));
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  // Grammar: -?[0-9]+(/[0-9]+)? with a nonzero denominator. mpq_class's own
  // parser is laxer (accepts whitespace, signs after '/'), so validate first.
  auto fail = [&]() -> Rational {
    throw ParseError("rational: malformed value '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    std::size_t den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) fail();
    mpz_class den(text.substr(den_begin));
    if (den == 0) fail();
  }
  mpq_class v(text);
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  return v_.get_str();
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("rational: not an integer: " + str());
  mpz_class num = v_.get_num();
  if (!num.fits_slong_p()) throw DomainError("rational: integer too large: " + str());
  return num.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

}  // namespace hyperarr
