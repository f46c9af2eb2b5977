#include "ncps/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ncps {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  // strict "p" or "p/q" with optional leading sign
  size_t pos = 0;
  auto digits = [&](size_t start) {
    size_t k = start;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    return k;
  };
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  size_t end_num = digits(pos);
  if (end_num == pos) throw std::invalid_argument("malformed rational: '" + text + "'");
  pos = end_num;
  if (pos < text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("malformed rational: '" + text + "'");
    size_t end_den = digits(pos + 1);
    if (end_den != text.size() || end_den == pos + 1)
      throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

Rational Scalar::majorant() const { return Rational(abs(re) + abs(im)); }

Scalar& Scalar::operator+=(const Scalar& other) {
  re += other.re;
  im += other.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re -= other.re;
  im -= other.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  *this = *this / other;
  return *this;
}

Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }

Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  Rational re(lhs.re * rhs.re - lhs.im * rhs.im);
  Rational im(lhs.re * rhs.im + lhs.im * rhs.re);
  return Scalar(std::move(re), std::move(im));
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
  Rational norm(rhs.re * rhs.re + rhs.im * rhs.im);
  if (norm == 0) throw std::domain_error("scalar division by zero");
  Rational re((lhs.re * rhs.re + lhs.im * rhs.im) / norm);
  Rational im((lhs.im * rhs.re - lhs.re * rhs.im) / norm);
  return Scalar(std::move(re), std::move(im));
}

Scalar operator-(const Scalar& value) {
  return Scalar(Rational(-value.re), Rational(-value.im));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.re == rhs.re && lhs.im == rhs.im;
}

std::string scalar_str(const Scalar& value) {
  // imaginary unit with coefficient +-1 prints bare
  auto imag_str = [](const Rational& im) -> std::string {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  };
  if (value.im == 0) return value.re.get_str();
  if (value.re == 0) return imag_str(value.im);
  std::string out = value.re.get_str();
  if (value.im > 0) out += "+";
  out += imag_str(value.im);
  return out;
}

Scalar parse_scalar(const std::string& text) {
  // sum of signed atoms; each atom is "i", "r", "r*i"
  Scalar result;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty scalar literal");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw std::invalid_argument("empty scalar literal");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("malformed scalar: '" + text + "'");
    }
    first = false;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      result.im += sign;
      continue;
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    if (start == pos) throw std::invalid_argument("malformed scalar: '" + text + "'");
    Rational r = parse_rational(text.substr(start, pos - start));
    if (sign < 0) r = -r;
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos == text.size() || text[pos] != 'i')
        throw std::invalid_argument("malformed scalar: '" + text + "'");
      ++pos;
      result.im += r;
    } else {
      result.re += r;
    }
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << scalar_str(value);
}

}  // namespace ncps
