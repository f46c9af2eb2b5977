#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ncps {

using Rational = mpq_class;

/// Builds a rational in lowest terms; throws std::domain_error for den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (lowest terms enforced on the result).
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& value);

/// A Gaussian rational re + im*i, the exact coefficient field of all series.
/// Arithmetic never rounds, so equality of scalars is mathematical equality.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long value) : re(value), im(0) {}
  Scalar(Rational real) : re(std::move(real)), im(0) {}
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  /// l1 surrogate |re| + |im| for the complex modulus. Subadditive,
  /// submultiplicative, zero only at zero, and it dominates the modulus.
  Rational majorant() const;

  Scalar conjugate() const { return Scalar(re, Rational(-im)); }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
};

Scalar operator+(Scalar lhs, const Scalar& rhs);
Scalar operator-(Scalar lhs, const Scalar& rhs);
Scalar operator*(const Scalar& lhs, const Scalar& rhs);
Scalar operator/(const Scalar& lhs, const Scalar& rhs);
Scalar operator-(const Scalar& value);

bool operator==(const Scalar& lhs, const Scalar& rhs);

/// Canonical text form: "p/q", "p/q+r/s*i", "i", "-i", "r/s*i", ...
std::string scalar_str(const Scalar& value);

/// Inverse of scalar_str; also accepts any sum/difference of rational and
/// imaginary literals, e.g. "2-3/4*i".
Scalar parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace ncps
