#ifndef TANAKA_RATIONAL_HPP
#define TANAKA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace tanaka {

// Exact rational scalar. mpq_class keeps the canonical form (positive
// denominator, gcd 1) as long as values are built through these helpers;
// raw num/den constructors are not canonicalized by GMP.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Element of the field Q(i). All arithmetic is exact.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(make_rational(r)) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

GaussianRational gr_i();  // the imaginary unit

// Serialization: "p/q" (q omitted when 1) for the real part, "r/s*i" for the
// imaginary part, zero parts omitted, "0" for zero.
std::string to_string(const GaussianRational& z);
GaussianRational parse_gaussian(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace tanaka

#endif
