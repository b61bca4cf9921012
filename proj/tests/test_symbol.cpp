#include <doctest.h>

#include <random>

#include "tanaka/symbol.hpp"

using namespace tanaka;

namespace {

Element random_element(std::mt19937& rng, const GradedAlgebra& a) {
  Element x;
  std::uniform_int_distribution<int> val(-3, 3);
  for (int k = 0; k < 4; ++k)
    x.set(static_cast<int>(rng() % a.total_dim()),
          GaussianRational(make_rational(val(rng)), make_rational(val(rng))));
  return x;
}

// Small hand-built graded algebra with a degree -3 vector that bracketing
// cannot reach: e1,e2 | t | u,v with [e1,e2]=t, [t,e1]=u and nothing hits v.
struct NotFundamental : GradedAlgebra {
  NotFundamental() { set_grading(3, {2, 1, 2}); }
  Element bracket_basis(int i, int j) const override {
    if (i == j) return {};
    if (i < j) {
      Element e = bracket_basis(j, i);
      e *= GaussianRational(-1);
      return e;
    }
    if (i == 2 && j == 0) return Element::unit(3);  // [t,e1] = u
    if (i == 1 && j == 0) return Element::unit(2);  // [e2,e1] = t
    return {};
  }
  std::string label(int i) const override { return "b" + std::to_string(i); }
};

}  // namespace

TEST_CASE("zero ideal keeps the universal dims") {
  auto u = build_universal_cr(1, 4);
  CRSymbol s = build_symbol(u, {});
  CHECK(s.dims() == std::vector<int>{2, 1, 2, 3});
  CHECK(check_fundamental(s));
}

TEST_CASE("one real relation cuts the lowest degree") {
  auto u = build_universal_cr(1, 4);
  Element gen = parse_in_universal("[E1,[E1,[E1,F1]]] + [F1,[F1,[E1,F1]]]", *u);
  CRSymbol s = build_symbol(u, {gen});
  CHECK(s.dims() == std::vector<int>{2, 1, 2, 2});
  CHECK(check_fundamental(s));
  CHECK(s.project_from_universal(gen).is_zero());
}

TEST_CASE("ideal validation errors") {
  auto u = build_universal_cr(1, 4);
  Element not_real = parse_in_universal("[E1,[E1,[E1,F1]]]", *u);
  CHECK_THROWS_WITH_AS(build_symbol(u, {not_real}), "ideal not real", std::invalid_argument);

  Element mixed = parse_in_universal("[E1,F1] + [E1,[E1,F1]]", *u);
  CHECK_THROWS_WITH_AS(build_symbol(u, {mixed}), "ideal not in lowest degree",
                       std::invalid_argument);

  auto u2 = build_universal_cr(1, 2);
  Element full = parse_in_universal("[E1,F1]", *u2);
  CHECK_THROWS_WITH_AS(build_symbol(u2, {full}), "depth collapses below mu",
                       std::invalid_argument);
}

TEST_CASE("conjugation on the symbol") {
  auto u = build_universal_cr(1, 4);
  CRSymbol s = build_symbol(u, {});
  CHECK(s.conjugate(Element::unit(0)) == Element::unit(1));  // E1 -> F1

  // conjugate(i [E1,F1]) = i [E1,F1]
  Element x = parse_in_symbol("i*[E1,F1]", s);
  CHECK(s.conjugate(x) == x);

  std::mt19937 rng(2718);
  for (int k = 0; k < 30; ++k) {
    Element a = random_element(rng, s);
    Element b = random_element(rng, s);
    CHECK(s.conjugate(s.conjugate(a)) == a);
    CHECK(s.conjugate(s.bracket(a, b)) == s.bracket(s.conjugate(a), s.conjugate(b)));
  }
}

TEST_CASE("real form bases") {
  auto u2 = build_universal_cr(1, 2);
  CRSymbol heis = build_symbol(u2, {});
  RealForm rf = real_form(heis);
  CHECK(rf.dims == std::vector<int>{2, 1});

  // degree -1: {E1 + F1, i(E1 - F1)}
  REQUIRE(rf.basis[0].size() == 2);
  Element ef = Element::unit(0) + Element::unit(1);
  CHECK(rf.basis[0][0] == ef);
  Element ief = (Element::unit(0) - Element::unit(1)) * gr_i();
  CHECK(rf.basis[0][1] == ief);

  // degree -2 is the line i*[F1,E1]; the basis vector is a real multiple
  REQUIRE(rf.basis[1].size() == 1);
  const Element& z = rf.basis[1][0];
  REQUIRE(z.c.size() == 1);
  CHECK(z.c.begin()->first == 2);
  CHECK(sgn(z.c.begin()->second.re) == 0);  // purely imaginary coefficient

  // every real basis vector is conjugation fixed
  for (const auto& level : rf.basis)
    for (const auto& v : level) CHECK(heis.conjugate(v) == v);

  auto u4 = build_universal_cr(1, 4);
  CRSymbol s4 = build_symbol(u4, {});
  RealForm rf4 = real_form(s4);
  CHECK(rf4.total_dim() == 8);
  for (int d = 1; d <= 4; ++d) CHECK(rf4.dims[d - 1] == s4.dim_at(d));
}

TEST_CASE("real structure constants are rational and reproduce the bracket") {
  auto u = build_universal_cr(1, 3);
  CRSymbol s = build_symbol(u, {});
  RealForm rf = real_form(s);
  // reconstruct [r_i, r_j] from the stored constants and compare exactly
  std::vector<Element> flat;
  for (const auto& level : rf.basis)
    for (const auto& v : level) flat.push_back(v);
  for (int i = 0; i < rf.total_dim(); ++i) {
    for (int j = 0; j < i; ++j) {
      Element expected = s.bracket(flat[i], flat[j]);
      Element got;
      auto it = rf.brackets.find({i, j});
      if (it != rf.brackets.end())
        for (const auto& [t, c] : it->second) got.add_scaled(flat[t], GaussianRational(c));
      CHECK(got == expected);
    }
  }
}

TEST_CASE("check_fundamental detects a dead vector") {
  NotFundamental bad;
  CHECK_FALSE(check_fundamental(bad));

  auto u = build_universal_cr(1, 2);
  CHECK(check_fundamental(build_symbol(u, {})));
}

TEST_CASE("levi kernel profile") {
  auto u2 = build_universal_cr(1, 2);
  CRSymbol heis = build_symbol(u2, {});
  Element x0 = Element::unit(0) + Element::unit(1);  // E1 + F1
  CHECK(levi_kernel_profile(heis, x0) == std::vector<int>{1});

  auto u4 = build_universal_cr(1, 4);
  CRSymbol s4 = build_symbol(u4, {});
  CHECK(levi_kernel_profile(s4, Element::unit(0)) == std::vector<int>{1, 0, 0});

  CHECK_THROWS_AS(levi_kernel_profile(s4, Element{}), std::invalid_argument);
  CHECK_THROWS_AS(levi_kernel_profile(s4, Element::unit(2)), std::invalid_argument);
}

TEST_CASE("symbol brackets satisfy antisymmetry and jacobi") {
  auto u = build_universal_cr(1, 4);
  Element gen = parse_in_universal("[E1,[E1,[E1,F1]]] + [F1,[F1,[E1,F1]]]", *u);
  CRSymbol s = build_symbol(u, {gen});
  const int N = s.total_dim();
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Element sum = s.bracket_basis(i, j) + s.bracket_basis(j, i);
      CHECK(sum.is_zero());
    }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k) {
        Element jac = s.bracket(Element::unit(i), s.bracket_basis(j, k));
        jac += s.bracket(Element::unit(j), s.bracket_basis(k, i));
        jac += s.bracket(Element::unit(k), s.bracket_basis(i, j));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("integrability survives in every built symbol") {
  auto u = build_universal_cr(2, 3);
  CRSymbol s = build_symbol(u, {});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(s.bracket_basis(i, j).is_zero());
      CHECK(s.bracket_basis(2 + i, 2 + j).is_zero());
    }
}
