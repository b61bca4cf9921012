#include "tanaka/cr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tanaka {

namespace {

std::vector<std::string> order_labels(int n, AdaptedOrder order) {
  std::vector<std::string> labels;
  const char* first = order == AdaptedOrder::HolomorphicFirst ? "E" : "F";
  const char* second = order == AdaptedOrder::HolomorphicFirst ? "F" : "E";
  for (int i = 1; i <= n; ++i) labels.push_back(first + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back(second + std::to_string(i));
  return labels;
}

}  // namespace

AdaptedBasis adapted_hall_basis(CRGeneratorSplit split, int depth, AdaptedOrder order,
                                std::size_t basis_cap) {
  if (split.n < 1) throw std::invalid_argument("CR dimension must be >= 1");
  AdaptedBasis out;
  out.order = order;
  out.algebra = std::make_unique<FreeLieAlgebra>(2 * split.n, depth, basis_cap,
                                                 order_labels(split.n, order));
  const FreeLieAlgebra& a = *out.algebra;
  const int n = split.n;
  out.in_ideal.assign(a.total_dim(), 0);
  out.ideal_monomials.resize(depth);
  for (int gi = 0; gi < a.total_dim(); ++gi) {
    const HallMonomial& m = a.monomial(gi);
    if (m.is_leaf()) continue;
    const HallMonomial& l = a.monomial(m.left);
    const HallMonomial& r = a.monomial(m.right);
    // In the adapted ideal iff the tree contains a degree-2 sub-bracket of
    // two first-half generators.
    bool ideal = out.in_ideal[m.left] || out.in_ideal[m.right];
    if (!ideal && l.is_leaf() && r.is_leaf() && l.generator < n && r.generator < n) ideal = true;
    if (ideal) {
      out.in_ideal[gi] = 1;
      out.ideal_monomials[m.degree - 1].push_back(gi);
    }
  }
  return out;
}

UniversalCRAlgebra::UniversalCRAlgebra(int n, int depth, std::size_t basis_cap) : n_(n) {
  if (n < 1 || depth < 1) throw std::invalid_argument("need n >= 1 and depth >= 1");
  ref_ = adapted_hall_basis({n}, depth, AdaptedOrder::HolomorphicFirst, basis_cap);
  anti_ = adapted_hall_basis({n}, depth, AdaptedOrder::AntiholomorphicFirst, basis_cap);
  const FreeLieAlgebra& ref = *ref_.algebra;
  const FreeLieAlgebra& anti = *anti_.algebra;

  // Position i in the antiholomorphic-first order names F_{i+1} (i < n) or
  // E_{i-n+1} (i >= n), sitting at reference position i+n resp. i-n.
  auto anti_pos_to_ref_pos = [n](int pos) { return pos < n ? pos + n : pos - n; };

  // Change of basis: every antiholomorphic-first Hall monomial rewritten in
  // reference coordinates.
  anti_to_ref_.resize(anti.total_dim());
  {
    std::function<BracketExpr(int)> tree_of = [&](int gi) -> BracketExpr {
      const HallMonomial& m = anti.monomial(gi);
      if (m.is_leaf()) return BracketExpr::leaf(anti_pos_to_ref_pos(m.generator));
      return BracketExpr::pair(tree_of(m.left), tree_of(m.right));
    };
    for (int gi = 0; gi < anti.total_dim(); ++gi) anti_to_ref_[gi] = ref.rewrite(tree_of(gi));
  }

  ideal10_.resize(depth);
  ideal01_.resize(depth);
  for (int d = 2; d <= depth; ++d) {
    for (int gi : ref_.ideal_monomials[d - 1]) ideal10_[d - 1].push_back(Element::unit(gi));
    for (int gi : anti_.ideal_monomials[d - 1]) ideal01_[d - 1].push_back(anti_to_ref_[gi]);
  }

  // Per degree: eliminate the ideal span; surviving reference monomials are
  // the coset representatives.
  std::vector<int> dims(depth);
  dims[0] = 2 * n;
  ideal_rref_.resize(depth);
  col_to_q_.resize(depth);
  col_to_q_[0].resize(2 * n);
  for (int d = 2; d <= depth; ++d) {
    const int fd = ref.dim_at(d);
    const int off = ref.offset(d);
    SparseMatrix span(static_cast<int>(ideal10_[d - 1].size() + ideal01_[d - 1].size()), fd);
    int r = 0;
    for (const auto& v : ideal10_[d - 1]) {
      for (const auto& [gi, c] : v.c) span.add(r, gi - off, c);
      ++r;
    }
    for (const auto& v : ideal01_[d - 1]) {
      for (const auto& [gi, c] : v.c) span.add(r, gi - off, c);
      ++r;
    }
    ideal_rref_[d - 1] = rref(span);
    dims[d - 1] = fd - ideal_rref_[d - 1].rank();
    col_to_q_[d - 1].assign(fd, -1);
  }
  set_grading(depth, std::move(dims));

  // Quotient index assignment, degree-major over non-pivot columns.
  for (int p = 0; p < 2 * n; ++p) {
    col_to_q_[0][p] = p;
    rep_mono_.push_back(p);
  }
  for (int d = 2; d <= depth; ++d) {
    std::vector<bool> pivot(ref.dim_at(d), false);
    for (int c : ideal_rref_[d - 1].pivot_cols) pivot[c] = true;
    for (int c = 0; c < ref.dim_at(d); ++c) {
      if (pivot[c]) continue;
      col_to_q_[d - 1][c] = static_cast<int>(rep_mono_.size());
      rep_mono_.push_back(ref.offset(d) + c);
    }
  }

  // Conjugation of each representative: swap E/F leaves, rewrite, project.
  conj_basis_.resize(total_dim());
  {
    std::function<BracketExpr(int)> swapped_tree = [&](int gi) -> BracketExpr {
      const HallMonomial& m = ref.monomial(gi);
      if (m.is_leaf())
        return BracketExpr::leaf(m.generator < n ? m.generator + n : m.generator - n);
      return BracketExpr::pair(swapped_tree(m.left), swapped_tree(m.right));
    };
    for (int qi = 0; qi < total_dim(); ++qi)
      conj_basis_[qi] = project(ref.rewrite(swapped_tree(rep_mono_[qi])));
  }

  // Structure constants of the quotient.
  table_.resize(total_dim());
  for (int i = 0; i < total_dim(); ++i) {
    const int di = degree_of(i);
    for (int j = 0; j < i; ++j) {
      if (di + degree_of(j) > depth) continue;
      Element br = project(ref.bracket_basis(rep_mono_[i], rep_mono_[j]));
      if (!br.is_zero()) table_[i].emplace(j, std::move(br));
    }
  }
}

Element UniversalCRAlgebra::project(const Element& free_element) const {
  const FreeLieAlgebra& ref = *ref_.algebra;
  Element out;
  for (const auto& [gi, v] : free_element.c) {
    const int d = ref.degree_of(gi);
    const int c = gi - ref.offset(d);
    const int q = col_to_q_[d - 1][c];
    if (q >= 0) {
      out.add_scaled(Element::unit(q), v);
      continue;
    }
    // Pivot column: reduce by its RREF row, which rewrites the coset in
    // terms of surviving monomials.
    const EchelonForm& ech = ideal_rref_[d - 1];
    const auto it = std::lower_bound(ech.pivot_cols.begin(), ech.pivot_cols.end(), c);
    const auto row = static_cast<size_t>(it - ech.pivot_cols.begin());
    for (const auto& [col, a] : ech.rows[row]) {
      if (col == c) continue;
      const int qc = col_to_q_[d - 1][col];
      if (qc >= 0) out.add_scaled(Element::unit(qc), -(v * a));
    }
  }
  return out;
}

const std::vector<int>& UniversalCRAlgebra::b_type(int qi) const {
  return ref_.algebra->b_type(rep_mono_[qi]);
}

Element UniversalCRAlgebra::conjugate(const Element& x) const {
  Element out;
  for (const auto& [qi, v] : x.c) out.add_scaled(conj_basis_[qi], v.conj());
  return out;
}

Element UniversalCRAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table_[j].find(i);
    if (it == table_[j].end()) return {};
    Element e = it->second;
    e *= GaussianRational(-1);
    return e;
  }
  auto it = table_[i].find(j);
  return it == table_[i].end() ? Element{} : it->second;
}

std::string UniversalCRAlgebra::label(int i) const {
  return ref_.algebra->label(rep_mono_[i]);
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> UniversalCRAlgebra::type_blocks(
    int k) const {
  if (k < 1 || k > depth()) throw std::invalid_argument("degree out of range");
  std::map<std::vector<int>, std::vector<int>> blocks;
  for (int qi = offset(k); qi < offset(k) + dim_at(k); ++qi) blocks[b_type(qi)].push_back(qi);
  return {blocks.begin(), blocks.end()};
}

bool UniversalCRAlgebra::independent_by_type(const std::vector<int>& reference_monomials) const {
  const FreeLieAlgebra& ref = *ref_.algebra;
  std::vector<Element> images;
  bool fast = true;
  std::vector<std::vector<int>> seen;
  for (int gi : reference_monomials) {
    images.push_back(project(Element::unit(gi)));
    if (images.back().is_zero()) fast = false;
    const auto& bt = ref.b_type(gi);
    if (std::find(seen.begin(), seen.end(), bt) != seen.end()) fast = false;
    seen.push_back(bt);
  }
  if (fast) return true;
  SparseMatrix m(static_cast<int>(images.size()), total_dim());
  for (size_t r = 0; r < images.size(); ++r)
    for (const auto& [qi, v] : images[r].c) m.add(static_cast<int>(r), qi, v);
  return rank(m) == static_cast<int>(images.size());
}

std::shared_ptr<UniversalCRAlgebra> build_universal_cr(int n, int depth, std::size_t basis_cap) {
  return std::make_shared<UniversalCRAlgebra>(n, depth, basis_cap);
}

}  // namespace tanaka
