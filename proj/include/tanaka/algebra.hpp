#ifndef TANAKA_ALGEBRA_HPP
#define TANAKA_ALGEBRA_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

// Sparse linear combination of graded basis vectors, keyed by global basis
// index. No zero coefficients are stored.
struct Element {
  std::map<int, GaussianRational> c;

  bool is_zero() const { return c.empty(); }
  Element& add_scaled(const Element& o, const GaussianRational& s);
  Element& operator+=(const Element& o) { return add_scaled(o, GaussianRational(1)); }
  Element& operator-=(const Element& o) { return add_scaled(o, GaussianRational(-1)); }
  Element& operator*=(const GaussianRational& s);
  void set(int i, GaussianRational v);
  GaussianRational coeff(int i) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.c == b.c; }

  static Element unit(int i) {
    Element e;
    e.c.emplace(i, GaussianRational(1));
    return e;
  }
};

Element conj_coeffs(const Element& x);  // entrywise conjugation of coefficients

// Negatively graded algebra m^{-1} + ... + m^{-depth} with per-degree ordered
// bases indexed globally (degree-major). Brackets of total degree beyond
// `depth` are zero.
class GradedAlgebra {
 public:
  virtual ~GradedAlgebra() = default;

  int depth() const { return depth_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim_at(int p) const { return (p >= 1 && p <= depth_) ? dims_[p - 1] : 0; }
  int offset(int p) const { return offsets_[p - 1]; }  // first index of degree -p
  int total_dim() const { return offsets_.back(); }
  int degree_of(int gi) const;                       // returns p >= 1 for degree -p
  int local_index(int gi) const { return gi - offsets_[degree_of(gi) - 1]; }

  virtual Element bracket_basis(int i, int j) const = 0;
  virtual std::string label(int i) const = 0;

  Element bracket(const Element& x, const Element& y) const;

 protected:
  void set_grading(int depth, std::vector<int> dims);

 private:
  int depth_ = 0;
  std::vector<int> dims_;
  std::vector<int> offsets_{0};
};

// Formal bracket tree over 0-based generator indices; input to rewriting.
struct BracketExpr {
  int generator = -1;  // leaf when >= 0
  std::unique_ptr<BracketExpr> a, b;

  bool is_leaf() const { return generator >= 0; }
  int degree() const;
  static BracketExpr leaf(int g);
  static BracketExpr pair(BracketExpr x, BracketExpr y);
  BracketExpr clone() const;
  std::vector<int> leaf_counts(int generators) const;  // multidegree of the tree
};

// Parses the element syntax "3/2*[[E2,E1],E1] - [E2,E1]" into (coefficient,
// tree) terms. Generator names resolve through the callback (throwing
// resolvers reject unknown names). Whitespace is insignificant.
std::vector<std::pair<GaussianRational, BracketExpr>> parse_bracket_element(
    const std::string& text, const std::function<int(const std::string&)>& resolve);

std::string to_string(const Element& x, const GradedAlgebra& a);

}  // namespace tanaka

#endif
