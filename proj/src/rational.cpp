#include "tanaka/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tanaka {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational gr_i() { return {make_rational(0), make_rational(1)}; }

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (sgn(z.re) != 0) out = to_string(z.re);
  if (sgn(z.im) != 0) {
    if (!out.empty() && sgn(z.im) > 0) out += "+";
    out += to_string(z.im) + "*i";
  }
  return out;
}

namespace {

// Splits "a+b*i" / "a-b*i" at the top-level sign separating the two parts.
// The leading sign belongs to the first part.
size_t find_part_split(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-')
      return k;
  }
  return std::string::npos;
}

Rational parse_im_coef(std::string part) {
  // part ends with "i"; accepted forms: "i", "-i", "+i", "r/s*i", "r/si" is rejected
  if (part == "i" || part == "+i") return make_rational(1);
  if (part == "-i") return make_rational(-1);
  if (part.size() >= 2 && part.compare(part.size() - 2, 2, "*i") == 0)
    return parse_rational(part.substr(0, part.size() - 2));
  throw std::invalid_argument("malformed imaginary part: '" + part + "'");
}

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() == 'i') {
    size_t split = find_part_split(s);
    if (split == std::string::npos) return {make_rational(0), parse_im_coef(s)};
    std::string head = s.substr(0, split);
    std::string tail = s.substr(split);
    if (tail[0] == '+') tail = tail.substr(1);
    return {parse_rational(head), parse_im_coef(tail)};
  }
  return {parse_rational(s), make_rational(0)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace tanaka
