#include <doctest.h>

#include <random>

#include "tanaka/cr.hpp"

using namespace tanaka;

namespace {

std::vector<Element> independent_rows(const std::vector<Element>& vecs, int cols, int col_offset) {
  SparseMatrix m(static_cast<int>(vecs.size()), cols);
  for (size_t r = 0; r < vecs.size(); ++r)
    for (const auto& [gi, v] : vecs[r].c) m.add(static_cast<int>(r), gi - col_offset, v);
  EchelonForm ech = rref(m);
  std::vector<Element> rows;
  for (const auto& row : ech.rows) {
    Element e;
    for (const auto& [c, v] : row) e.set(c + col_offset, v);
    rows.push_back(std::move(e));
  }
  return rows;
}

// Oracle: the ideal generated by degree-2 brackets of the given generator
// range, grown degree by degree as span{[x, w]} and measured by exact rank.
// Independent of the Hall-intersection route.
std::vector<std::vector<Element>> ideal_span_oracle(const FreeLieAlgebra& a, int gen_begin,
                                                    int gen_end) {
  std::vector<std::vector<Element>> basis(a.depth());
  std::vector<Element> cands;
  for (int i = gen_begin; i < gen_end; ++i)
    for (int j = gen_begin; j < i; ++j) cands.push_back(a.bracket_basis(i, j));
  if (a.depth() >= 2) basis[1] = independent_rows(cands, a.dim_at(2), a.offset(2));
  for (int d = 3; d <= a.depth(); ++d) {
    cands.clear();
    for (int g = 0; g < a.generators(); ++g)
      for (const auto& w : basis[d - 2]) cands.push_back(a.bracket(Element::unit(g), w));
    basis[d - 1] = independent_rows(cands, a.dim_at(d), a.offset(d));
  }
  return basis;
}

Element random_element(std::mt19937& rng, const GradedAlgebra& a) {
  Element x;
  std::uniform_int_distribution<int> val(-3, 3);
  for (int k = 0; k < 4; ++k)
    x.set(static_cast<int>(rng() % a.total_dim()),
          GaussianRational(make_rational(val(rng)), make_rational(val(rng))));
  return x;
}

}  // namespace

TEST_CASE("adapted basis examples") {
  // n=1: two holomorphic generators never meet in a bracket, so the ideal is empty
  AdaptedBasis a1 = adapted_hall_basis({1}, 3, AdaptedOrder::HolomorphicFirst);
  for (const auto& level : a1.ideal_monomials) CHECK(level.empty());

  AdaptedBasis a2 = adapted_hall_basis({2}, 2, AdaptedOrder::HolomorphicFirst);
  REQUIRE(a2.ideal_monomials[1].size() == 1);
  CHECK(a2.algebra->label(a2.ideal_monomials[1][0]) == "[E2,E1]");

  AdaptedBasis a3 = adapted_hall_basis({2}, 3, AdaptedOrder::HolomorphicFirst);
  CHECK(a3.ideal_monomials[2].size() == 4);
}

TEST_CASE("hall ideal intersection matches the span oracle") {
  for (auto [n, mu] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
    for (auto order : {AdaptedOrder::HolomorphicFirst, AdaptedOrder::AntiholomorphicFirst}) {
      AdaptedBasis ab = adapted_hall_basis({n}, mu, order);
      auto oracle = ideal_span_oracle(*ab.algebra, 0, n);
      for (int d = 2; d <= mu; ++d) {
        CHECK(ab.ideal_monomials[d - 1].size() == oracle[d - 1].size());
        // the Hall monomials in the ideal really span it: joint rank stays put
        std::vector<Element> joint = oracle[d - 1];
        for (int gi : ab.ideal_monomials[d - 1]) joint.push_back(Element::unit(gi));
        CHECK(independent_rows(joint, ab.algebra->dim_at(d), ab.algebra->offset(d)).size() ==
              oracle[d - 1].size());
      }
    }
  }
}

TEST_CASE("universal CR dims") {
  UniversalCRAlgebra u14(1, 4);
  CHECK(u14.dims() == std::vector<int>{2, 1, 2, 3});

  UniversalCRAlgebra u22(2, 2);
  CHECK(u22.dims() == std::vector<int>{4, 4});

  UniversalCRAlgebra u23(2, 3);
  CHECK(u23.dims() == std::vector<int>{4, 4, 12});

  // cross-check degree 3 against the span oracle: 20 - dim(i10 + i01)
  const FreeLieAlgebra& ref = u23.reference();
  auto oracle10 = ideal_span_oracle(ref, 0, 2);
  std::vector<Element> joint = oracle10[2];
  for (const auto& v : u23.ideal01_basis()[2]) joint.push_back(v);
  const int joint_rank =
      static_cast<int>(independent_rows(joint, ref.dim_at(3), ref.offset(3)).size());
  CHECK(u23.dim_at(3) == ref.dim_at(3) - joint_rank);
  CHECK(u23.ideal10_basis()[2].size() == 4);
  CHECK(u23.ideal01_basis()[2].size() == 4);
}

TEST_CASE("ideal dims are conjugation symmetric") {
  for (auto [n, mu] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4}}) {
    UniversalCRAlgebra u(n, mu);
    for (int d = 2; d <= mu; ++d)
      CHECK(u.ideal10_basis()[d - 1].size() == u.ideal01_basis()[d - 1].size());
  }
}

TEST_CASE("projection behaves like a quotient map") {
  UniversalCRAlgebra u(2, 3);
  for (int qi = 0; qi < u.total_dim(); ++qi) {
    Element p = u.project(Element::unit(u.representative(qi)));
    CHECK(p == Element::unit(qi));
  }
  for (int d = 2; d <= 3; ++d) {
    for (const auto& v : u.ideal10_basis()[d - 1]) CHECK(u.project(v).is_zero());
    for (const auto& v : u.ideal01_basis()[d - 1]) CHECK(u.project(v).is_zero());
  }
}

TEST_CASE("ideal vectors are B-type homogeneous") {
  UniversalCRAlgebra u(2, 4);
  const FreeLieAlgebra& ref = u.reference();
  for (int d = 2; d <= 4; ++d) {
    for (const auto& v : u.ideal01_basis()[d - 1]) {
      REQUIRE(!v.is_zero());
      const auto& bt = ref.b_type(v.c.begin()->first);
      for (const auto& [gi, c] : v.c) CHECK(ref.b_type(gi) == bt);
    }
  }
}

TEST_CASE("change of basis between the two adapted orders is invertible") {
  UniversalCRAlgebra u(2, 3);
  const FreeLieAlgebra& ref = u.reference();
  for (int d = 1; d <= 3; ++d) {
    std::vector<Element> imgs;
    const FreeLieAlgebra& anti = *u.adapted_antiholomorphic().algebra;
    for (int gi = anti.offset(d); gi < anti.offset(d) + anti.dim_at(d); ++gi)
      imgs.push_back(u.anti_to_reference()[gi]);
    CHECK(independent_rows(imgs, ref.dim_at(d), ref.offset(d)).size() ==
          static_cast<size_t>(ref.dim_at(d)));
  }
}

TEST_CASE("integrability relations hold in the quotient") {
  UniversalCRAlgebra u(3, 3);
  const int n = u.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(u.bracket_basis(i, j).is_zero());          // holomorphic pair
      CHECK(u.bracket_basis(n + i, n + j).is_zero());  // antiholomorphic pair
    }
}

TEST_CASE("quotient is a Lie algebra") {
  UniversalCRAlgebra u(2, 3);
  const int N = u.total_dim();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Element s = u.bracket_basis(i, j) + u.bracket_basis(j, i);
      CHECK(s.is_zero());
    }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k) {
        Element jac = u.bracket(Element::unit(i), u.bracket_basis(j, k));
        jac += u.bracket(Element::unit(j), u.bracket_basis(k, i));
        jac += u.bracket(Element::unit(k), u.bracket_basis(i, j));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("fundamentality of the quotient") {
  UniversalCRAlgebra u(2, 4);
  for (int d = 1; d < 4; ++d) {
    std::vector<Element> imgs;
    for (int i = u.offset(d); i < u.offset(d) + u.dim_at(d); ++i)
      for (int g = 0; g < u.dim_at(1); ++g) imgs.push_back(u.bracket_basis(i, g));
    CHECK(independent_rows(imgs, u.dim_at(d + 1), u.offset(d + 1)).size() ==
          static_cast<size_t>(u.dim_at(d + 1)));
  }
}

TEST_CASE("type blocks") {
  UniversalCRAlgebra u(1, 3);
  auto k1 = u.type_blocks(1);
  REQUIRE(k1.size() == 2);
  CHECK(k1[0].first == std::vector<int>{0, 1});
  CHECK(k1[1].first == std::vector<int>{1, 0});
  CHECK(k1[0].second.size() == 1);
  CHECK(k1[1].second.size() == 1);

  auto k2 = u.type_blocks(2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].first == std::vector<int>{1, 1});
  CHECK(k2[0].second.size() == 1);

  auto k3 = u.type_blocks(3);
  REQUIRE(k3.size() == 2);
  CHECK(k3[0].first == std::vector<int>{1, 2});
  CHECK(k3[1].first == std::vector<int>{2, 1});
  CHECK(k3[0].second.size() == 1);
  CHECK(k3[1].second.size() == 1);
}

TEST_CASE("block dims partition every degree") {
  for (auto [n, mu] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{2, 4}}) {
    UniversalCRAlgebra u(n, mu);
    for (int k = 1; k <= mu; ++k) {
      int total = 0;
      for (const auto& [bt, idxs] : u.type_blocks(k)) {
        int sum = 0;
        for (int t : bt) sum += t;
        CHECK(sum == k);
        total += static_cast<int>(idxs.size());
      }
      CHECK(total == u.dim_at(k));
    }
  }
}

TEST_CASE("independent_by_type") {
  UniversalCRAlgebra u1(1, 3);
  const FreeLieAlgebra& ref1 = u1.reference();
  const int fe = ref1.hall_pair(1, 0);  // [F1,E1]
  REQUIRE(fe >= 0);
  const int fee = ref1.hall_pair(fe, 0);  // [[F1,E1],E1]
  const int fef = ref1.hall_pair(fe, 1);  // [[F1,E1],F1]
  REQUIRE(fee >= 0);
  REQUIRE(fef >= 0);
  CHECK(u1.independent_by_type({fe, fee}));   // distinct degrees, nonzero
  CHECK(u1.independent_by_type({fef, fee}));  // distinct B-types (1,2) vs (2,1)

  UniversalCRAlgebra u2(2, 2);
  const int ee = u2.reference().hall_pair(1, 0);  // [E2,E1], generator of the ideal
  REQUIRE(ee >= 0);
  CHECK_FALSE(u2.independent_by_type({ee}));  // projects to zero -> fallback rank 0
}

TEST_CASE("independent_by_type falls back to rank on shared B-types") {
  UniversalCRAlgebra u3(2, 3);
  const FreeLieAlgebra& r3 = u3.reference();
  const int a = r3.hall_pair(r3.hall_pair(2, 0), 1);  // [[F1,E1],E2]
  const int b = r3.hall_pair(r3.hall_pair(1, 0), 2);  // [[E2,E1],F1], same type, ideal
  REQUIRE(r3.b_type(a) == r3.b_type(b));
  CHECK_FALSE(u3.independent_by_type({a, b}));

  UniversalCRAlgebra u4(2, 4);
  const FreeLieAlgebra& r4 = u4.reference();
  const int p = r4.hall_pair(r4.hall_pair(3, 0), r4.hall_pair(2, 1));  // [[F2,E1],[F1,E2]]
  const int q = r4.hall_pair(r4.hall_pair(3, 1), r4.hall_pair(2, 0));  // [[F2,E2],[F1,E1]]
  REQUIRE(r4.b_type(p) == r4.b_type(q));
  CHECK(u4.independent_by_type({p, q}));  // same type but independent images
}

TEST_CASE("conjugation on the universal algebra") {
  UniversalCRAlgebra u(2, 3);
  std::mt19937 rng(314);
  for (int k = 0; k < 25; ++k) {
    Element x = random_element(rng, u);
    Element y = random_element(rng, u);
    CHECK(u.conjugate(u.conjugate(x)) == x);
    Element lhs = u.conjugate(u.bracket(x, y));
    Element rhs = u.bracket(u.conjugate(x), u.conjugate(y));
    CHECK(lhs == rhs);
  }
  // degree -1: plain swap
  CHECK(u.conjugate(Element::unit(0)) == Element::unit(2));  // E1 -> F1
  CHECK(u.conjugate(Element::unit(3)) == Element::unit(1));  // F2 -> E2
}
