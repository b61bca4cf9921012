#ifndef TANAKA_SYMBOL_HPP
#define TANAKA_SYMBOL_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "tanaka/cr.hpp"

namespace tanaka {

// Totally nondegenerate CR symbol: the universal CR algebra with an optional
// further quotient by a conjugation-stable ideal inside the lowest degree.
class CRSymbol : public GradedAlgebra {
 public:
  CRSymbol(std::shared_ptr<const UniversalCRAlgebra> universal,
           const std::vector<Element>& ideal_generators);

  int n() const { return universal_->n(); }
  int mu() const { return depth(); }
  const UniversalCRAlgebra& universal() const { return *universal_; }
  std::shared_ptr<const UniversalCRAlgebra> universal_ptr() const { return universal_; }

  // RREF basis of the lowest-degree ideal, in universal coordinates.
  const std::vector<Element>& lowest_ideal_basis() const { return lowest_ideal_; }

  Element project_from_universal(const Element& x) const;

  Element conjugate(const Element& x) const;
  const Element& conjugate_basis(int i) const { return conj_basis_[i]; }

  // Degree -1 split: indices 0..n-1 are E_i (holomorphic), n..2n-1 are F_i.
  bool is_holomorphic(int i) const { return i < universal_->n(); }

  Element bracket_basis(int i, int j) const override;
  std::string label(int i) const override;

 private:
  std::shared_ptr<const UniversalCRAlgebra> universal_;
  std::vector<Element> lowest_ideal_;
  EchelonForm ideal_rref_;          // columns = local coords of the -mu slice
  std::vector<int> col_to_s_;      // local col -> symbol global (-1 for pivots)
  std::vector<int> rep_universal_;  // symbol global -> universal global
  std::vector<Element> conj_basis_;
  std::vector<std::map<int, Element>> table_;
};

CRSymbol build_symbol(std::shared_ptr<const UniversalCRAlgebra> universal,
                      const std::vector<Element>& ideal_generators);

// Real form of the symbol: fixed points of the conjugation, one basis per
// degree built from {v + conj v, i(v - conj v)} candidates, with structure
// constants over the rationals.
struct RealForm {
  std::vector<std::vector<Element>> basis;  // per degree, conj-fixed complex vectors
  std::vector<int> dims;
  // global real index = degree offset + position; brackets keyed by (i, j), i > j
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets;
  std::vector<int> offsets;

  int total_dim() const;
};

RealForm real_form(const CRSymbol& s);

// True iff bracketing with degree -1 surjects onto each lower degree.
bool check_fundamental(const GradedAlgebra& a);

// dim ker(ad_x0 : m^{-k} -> m^{-k-1}) for k = 1..mu-1; x0 of degree -1.
std::vector<int> levi_kernel_profile(const CRSymbol& s, const Element& x0);

Element parse_in_universal(const std::string& text, const UniversalCRAlgebra& u);
Element parse_in_symbol(const std::string& text, const CRSymbol& s);

}  // namespace tanaka

#endif
