#include "tanaka/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanaka {

namespace {

// Realified coordinates (re, im interleaved) of an element restricted to one
// degree slice, for rank work over the rationals.
std::vector<GaussianRational> realify(const Element& x, int offset, int dim) {
  std::vector<GaussianRational> v(2 * dim);
  for (const auto& [gi, c] : x.c) {
    const int loc = gi - offset;
    if (loc < 0 || loc >= dim) throw std::logic_error("element leaves the degree slice");
    v[2 * loc] = GaussianRational(c.re);
    v[2 * loc + 1] = GaussianRational(c.im);
  }
  return v;
}

int rank_of(const std::vector<std::vector<GaussianRational>>& rows, int cols) {
  SparseMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m.add(static_cast<int>(r), c, rows[r][c]);
  return rank(m);
}

}  // namespace

CRSymbol::CRSymbol(std::shared_ptr<const UniversalCRAlgebra> universal,
                   const std::vector<Element>& ideal_generators)
    : universal_(std::move(universal)) {
  const UniversalCRAlgebra& u = *universal_;
  const int mu = u.depth();
  if (mu < 2) throw std::invalid_argument("depth must be at least 2");
  const int mu_off = u.offset(mu);
  const int mu_dim = u.dim_at(mu);

  for (const auto& g : ideal_generators) {
    if (g.is_zero()) continue;
    for (const auto& [gi, v] : g.c)
      if (u.degree_of(gi) != mu) throw std::invalid_argument("ideal not in lowest degree");
  }

  // Span of the generators in local -mu coordinates.
  SparseMatrix span(static_cast<int>(ideal_generators.size()), mu_dim);
  for (size_t r = 0; r < ideal_generators.size(); ++r)
    for (const auto& [gi, v] : ideal_generators[r].c)
      span.add(static_cast<int>(r), gi - mu_off, v);
  ideal_rref_ = rref(span);
  const int ideal_dim = ideal_rref_.rank();

  // Conjugation stability: conj of every generator must stay in the span.
  {
    SparseMatrix doubled(static_cast<int>(2 * ideal_generators.size()), mu_dim);
    int r = 0;
    for (const auto& g : ideal_generators) {
      for (const auto& [gi, v] : g.c) doubled.add(r, gi - mu_off, v);
      ++r;
      Element cg = u.conjugate(g);
      for (const auto& [gi, v] : cg.c) doubled.add(r, gi - mu_off, v);
      ++r;
    }
    if (rank(doubled) != ideal_dim) throw std::invalid_argument("ideal not real");
  }
  if (ideal_dim == mu_dim) throw std::invalid_argument("depth collapses below mu");

  for (const auto& row : ideal_rref_.rows) {
    Element e;
    for (const auto& [c, v] : row) e.set(mu_off + c, v);
    lowest_ideal_.push_back(std::move(e));
  }

  std::vector<int> dims = u.dims();
  dims[mu - 1] = mu_dim - ideal_dim;
  set_grading(mu, std::move(dims));

  col_to_s_.assign(mu_dim, -1);
  rep_universal_.resize(total_dim());
  for (int i = 0; i < u.offset(mu); ++i) rep_universal_[i] = i;
  {
    std::vector<bool> pivot(mu_dim, false);
    for (int c : ideal_rref_.pivot_cols) pivot[c] = true;
    int next = offset(mu);
    for (int c = 0; c < mu_dim; ++c) {
      if (pivot[c]) continue;
      col_to_s_[c] = next;
      rep_universal_[next] = mu_off + c;
      ++next;
    }
  }

  conj_basis_.resize(total_dim());
  for (int i = 0; i < total_dim(); ++i)
    conj_basis_[i] = project_from_universal(u.conjugate_basis(rep_universal_[i]));

  table_.resize(total_dim());
  for (int i = 0; i < total_dim(); ++i) {
    const int di = degree_of(i);
    for (int j = 0; j < i; ++j) {
      if (di + degree_of(j) > mu) continue;
      Element br =
          project_from_universal(u.bracket_basis(rep_universal_[i], rep_universal_[j]));
      if (!br.is_zero()) table_[i].emplace(j, std::move(br));
    }
  }
}

Element CRSymbol::project_from_universal(const Element& x) const {
  const UniversalCRAlgebra& u = *universal_;
  const int mu = u.depth();
  const int mu_off = u.offset(mu);
  Element out;
  for (const auto& [gi, v] : x.c) {
    if (gi < mu_off) {
      out.add_scaled(Element::unit(gi), v);
      continue;
    }
    const int c = gi - mu_off;
    if (col_to_s_[c] >= 0) {
      out.add_scaled(Element::unit(col_to_s_[c]), v);
      continue;
    }
    const auto it =
        std::lower_bound(ideal_rref_.pivot_cols.begin(), ideal_rref_.pivot_cols.end(), c);
    const auto row = static_cast<size_t>(it - ideal_rref_.pivot_cols.begin());
    for (const auto& [col, a] : ideal_rref_.rows[row]) {
      if (col == c) continue;
      if (col_to_s_[col] >= 0) out.add_scaled(Element::unit(col_to_s_[col]), -(v * a));
    }
  }
  return out;
}

Element CRSymbol::conjugate(const Element& x) const {
  Element out;
  for (const auto& [i, v] : x.c) out.add_scaled(conj_basis_[i], v.conj());
  return out;
}

Element CRSymbol::bracket_basis(int i, int j) const {
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

std::string CRSymbol::label(int i) const { return universal_->label(rep_universal_[i]); }

CRSymbol build_symbol(std::shared_ptr<const UniversalCRAlgebra> universal,
                      const std::vector<Element>& ideal_generators) {
  return CRSymbol(std::move(universal), ideal_generators);
}

int RealForm::total_dim() const { return offsets.back(); }

RealForm real_form(const CRSymbol& s) {
  RealForm rf;
  rf.basis.resize(s.depth());
  rf.offsets.assign(1, 0);
  for (int d = 1; d <= s.depth(); ++d) {
    const int off = s.offset(d);
    const int dim = s.dim_at(d);
    std::vector<std::vector<GaussianRational>> accepted;
    for (int i = off; i < off + dim; ++i) {
      Element v = Element::unit(i);
      Element cv = s.conjugate_basis(i);
      Element fixed_sum = v + cv;                         // v + conj v
      Element fixed_diff = (v - cv) * gr_i();             // i (v - conj v)
      for (Element* cand : {&fixed_sum, &fixed_diff}) {
        if (cand->is_zero()) continue;
        auto realified = realify(*cand, off, dim);
        accepted.push_back(realified);
        if (rank_of(accepted, 2 * dim) < static_cast<int>(accepted.size())) {
          accepted.pop_back();
          continue;
        }
        rf.basis[d - 1].push_back(*cand);
      }
      if (static_cast<int>(rf.basis[d - 1].size()) == dim) break;
    }
    if (static_cast<int>(rf.basis[d - 1].size()) != dim)
      throw std::logic_error("real form dimension mismatch");
    rf.dims.push_back(dim);
    rf.offsets.push_back(rf.offsets.back() + dim);
  }

  // Real structure constants, solved degree by degree in the real basis.
  for (int di = 1; di <= s.depth(); ++di) {
    for (int dj = 1; dj <= di; ++dj) {
      const int dt = di + dj;
      if (dt > s.depth()) continue;
      const int t_off = s.offset(dt);
      const int t_dim = s.dim_at(dt);
      std::vector<std::vector<GaussianRational>> span;
      for (const auto& w : rf.basis[dt - 1]) span.push_back(realify(w, t_off, t_dim));
      for (size_t a = 0; a < rf.basis[di - 1].size(); ++a) {
        for (size_t b = 0; b < rf.basis[dj - 1].size(); ++b) {
          const int gi = rf.offsets[di - 1] + static_cast<int>(a);
          const int gj = rf.offsets[dj - 1] + static_cast<int>(b);
          if (gi <= gj) continue;
          Element br = s.bracket(rf.basis[di - 1][a], rf.basis[dj - 1][b]);
          if (br.is_zero()) continue;
          auto coords = solve_in_span(span, realify(br, t_off, t_dim));
          if (!coords) throw std::logic_error("real bracket leaves the real span");
          std::map<int, Rational> row;
          for (size_t t = 0; t < coords->size(); ++t) {
            if ((*coords)[t].is_zero()) continue;
            if (!(*coords)[t].is_real()) throw std::logic_error("non-real structure constant");
            row[rf.offsets[dt - 1] + static_cast<int>(t)] = (*coords)[t].re;
          }
          rf.brackets[{gi, gj}] = std::move(row);
        }
      }
    }
  }
  return rf;
}

bool check_fundamental(const GradedAlgebra& a) {
  for (int d = 1; d < a.depth(); ++d) {
    const int t_dim = a.dim_at(d + 1);
    if (t_dim == 0) return false;
    SparseMatrix m(a.dim_at(d) * a.dim_at(1), t_dim);
    int r = 0;
    for (int i = a.offset(d); i < a.offset(d) + a.dim_at(d); ++i) {
      for (int g = a.offset(1); g < a.offset(1) + a.dim_at(1); ++g) {
        for (const auto& [t, v] : a.bracket_basis(i, g).c) m.add(r, t - a.offset(d + 1), v);
        ++r;
      }
    }
    if (rank(m) != t_dim) return false;
  }
  return true;
}

std::vector<int> levi_kernel_profile(const CRSymbol& s, const Element& x0) {
  if (x0.is_zero()) throw std::invalid_argument("x0 must be nonzero");
  for (const auto& [gi, v] : x0.c)
    if (s.degree_of(gi) != 1) throw std::invalid_argument("x0 must have degree -1");
  std::vector<int> profile;
  for (int k = 1; k < s.depth(); ++k) {
    SparseMatrix m(s.dim_at(k), s.dim_at(k + 1));
    for (int i = 0; i < s.dim_at(k); ++i) {
      Element img = s.bracket(x0, Element::unit(s.offset(k) + i));
      for (const auto& [t, v] : img.c) m.add(i, t - s.offset(k + 1), v);
    }
    profile.push_back(s.dim_at(k) - rank(m));
  }
  return profile;
}

Element parse_in_universal(const std::string& text, const UniversalCRAlgebra& u) {
  return u.project(parse_element(text, u.reference()));
}

Element parse_in_symbol(const std::string& text, const CRSymbol& s) {
  return s.project_from_universal(parse_in_universal(text, s.universal()));
}

}  // namespace tanaka
