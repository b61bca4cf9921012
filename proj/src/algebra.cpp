#include "tanaka/algebra.hpp"

#include <cctype>
#include <stdexcept>

#include "tanaka/errors.hpp"

namespace tanaka {

Element& Element::add_scaled(const Element& o, const GaussianRational& s) {
  if (s.is_zero()) return *this;
  for (const auto& [i, v] : o.c) {
    auto it = c.find(i);
    if (it == c.end()) {
      c.emplace(i, v * s);
    } else {
      it->second += v * s;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  return *this;
}

Element& Element::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    c.clear();
    return *this;
  }
  for (auto& [i, v] : c) v *= s;
  return *this;
}

void Element::set(int i, GaussianRational v) {
  if (v.is_zero())
    c.erase(i);
  else
    c[i] = std::move(v);
}

GaussianRational Element::coeff(int i) const {
  auto it = c.find(i);
  return it == c.end() ? GaussianRational() : it->second;
}

Element conj_coeffs(const Element& x) {
  Element out;
  for (const auto& [i, v] : x.c) out.c.emplace(i, v.conj());
  return out;
}

void GradedAlgebra::set_grading(int depth, std::vector<int> dims) {
  depth_ = depth;
  dims_ = std::move(dims);
  offsets_.assign(1, 0);
  for (int d : dims_) offsets_.push_back(offsets_.back() + d);
}

int GradedAlgebra::degree_of(int gi) const {
  for (int p = 1; p <= depth_; ++p)
    if (gi < offsets_[p]) return p;
  throw std::out_of_range("basis index out of range");
}

Element GradedAlgebra::bracket(const Element& x, const Element& y) const {
  Element acc;
  for (const auto& [i, xi] : x.c)
    for (const auto& [j, yj] : y.c) acc.add_scaled(bracket_basis(i, j), xi * yj);
  return acc;
}

int BracketExpr::degree() const {
  if (is_leaf()) return 1;
  return a->degree() + b->degree();
}

BracketExpr BracketExpr::leaf(int g) {
  BracketExpr e;
  e.generator = g;
  return e;
}

BracketExpr BracketExpr::pair(BracketExpr x, BracketExpr y) {
  BracketExpr e;
  e.a = std::make_unique<BracketExpr>(std::move(x));
  e.b = std::make_unique<BracketExpr>(std::move(y));
  return e;
}

BracketExpr BracketExpr::clone() const {
  if (is_leaf()) return leaf(generator);
  return pair(a->clone(), b->clone());
}

void collect_leaf_counts(const BracketExpr& e, std::vector<int>& counts) {
  if (e.is_leaf()) {
    counts.at(e.generator)++;
    return;
  }
  collect_leaf_counts(*e.a, counts);
  collect_leaf_counts(*e.b, counts);
}

std::vector<int> BracketExpr::leaf_counts(int generators) const {
  std::vector<int> counts(generators, 0);
  collect_leaf_counts(*this, counts);
  return counts;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::function<int(const std::string&)>& resolve;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError(msg + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  BracketExpr parse_monomial() {
    skip_ws();
    if (accept('[')) {
      BracketExpr l = parse_monomial();
      expect(',');
      BracketExpr r = parse_monomial();
      expect(']');
      return BracketExpr::pair(std::move(l), std::move(r));
    }
    if (pos >= s.size() || !isalpha(static_cast<unsigned char>(s[pos])))
      fail("expected generator name or '['");
    size_t start = pos;
    while (pos < s.size() && isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    return BracketExpr::leaf(resolve(name));
  }

  // rational token: digits with optional '/', used inside scalar factors
  Rational parse_rational_token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos == start) fail("expected number");
    return parse_rational(s.substr(start, pos - start));
  }

  // scalar factor: "i", "p/q", or a parenthesized gaussian like "(1/2+3/4*i)"
  GaussianRational parse_scalar_factor() {
    skip_ws();
    if (accept('(')) {
      size_t start = pos;
      int level = 1;
      while (pos < s.size() && level > 0) {
        if (s[pos] == '(') ++level;
        if (s[pos] == ')') --level;
        ++pos;
      }
      if (level != 0) fail("unbalanced '('");
      return parse_gaussian(s.substr(start, pos - 1 - start));
    }
    if (pos < s.size() && s[pos] == 'i' &&
        (pos + 1 >= s.size() || !isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      return gr_i();
    }
    return GaussianRational(parse_rational_token());
  }

  bool at_scalar_start() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    if (isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return c == 'i' &&
           (pos + 1 >= s.size() || !isalnum(static_cast<unsigned char>(s[pos + 1])));
  }

  std::pair<GaussianRational, BracketExpr> parse_term() {
    GaussianRational coef(1);
    bool have_monomial = false;
    BracketExpr mono;
    for (;;) {
      if (at_scalar_start()) {
        coef *= parse_scalar_factor();
      } else {
        if (have_monomial) fail("two monomials in one term");
        mono = parse_monomial();
        have_monomial = true;
      }
      if (!accept('*')) break;
    }
    if (!have_monomial) fail("term without a bracket monomial");
    return {coef, std::move(mono)};
  }

  std::vector<std::pair<GaussianRational, BracketExpr>> parse_element() {
    std::vector<std::pair<GaussianRational, BracketExpr>> terms;
    skip_ws();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      auto [coef, mono] = parse_term();
      if (negate) coef = -coef;
      terms.emplace_back(std::move(coef), std::move(mono));
      skip_ws();
      if (accept('-'))
        negate = true;
      else if (accept('+'))
        negate = false;
      else
        break;
    }
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return terms;
  }
};

}  // namespace

std::vector<std::pair<GaussianRational, BracketExpr>> parse_bracket_element(
    const std::string& text, const std::function<int(const std::string&)>& resolve) {
  Parser p{text, 0, resolve};
  return p.parse_element();
}

std::string to_string(const Element& x, const GradedAlgebra& a) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, v] : x.c) {
    GaussianRational coef = v;
    int sign = sgn(coef.re) != 0 ? sgn(coef.re) : sgn(coef.im);
    if (sign < 0) coef = -coef;
    if (first) {
      if (sign < 0) out += "-";
      first = false;
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    if (coef == GaussianRational(1)) {
      out += a.label(i);
    } else if (coef == gr_i()) {
      out += "i*" + a.label(i);
    } else if (coef.is_real() || sgn(coef.re) == 0) {
      out += to_string(coef) + "*" + a.label(i);
    } else {
      out += "(" + to_string(coef) + ")*" + a.label(i);
    }
  }
  return out;
}

}  // namespace tanaka
