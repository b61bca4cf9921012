#ifndef TANAKA_CR_HPP
#define TANAKA_CR_HPP

#include <memory>
#include <utility>
#include <vector>

#include "tanaka/hall.hpp"
#include "tanaka/sparse.hpp"

namespace tanaka {

// Degree -1 generators of a CR algebra: E1..En span the holomorphic half,
// F1..Fn the antiholomorphic half, conjugation pairs E_i with F_i.
struct CRGeneratorSplit {
  int n = 1;
};

enum class AdaptedOrder { HolomorphicFirst, AntiholomorphicFirst };

// Hall basis for one adapted generator order, together with the Hall
// monomials lying in the corresponding quadratic ideal (those containing a
// degree-2 sub-bracket of two first-half generators).
struct AdaptedBasis {
  AdaptedOrder order = AdaptedOrder::HolomorphicFirst;
  std::unique_ptr<FreeLieAlgebra> algebra;
  std::vector<std::vector<int>> ideal_monomials;  // per degree 1..depth
  std::vector<char> in_ideal;                     // per global index
};

AdaptedBasis adapted_hall_basis(CRGeneratorSplit split, int depth, AdaptedOrder order,
                                std::size_t basis_cap = kDefaultBasisCap);

// Quotient of the free Lie algebra on E1..En, F1..Fn by the ideals generated
// by [E_i, E_j] and [F_i, F_j]. Coset representatives are the
// holomorphic-first Hall monomials that survive elimination of both ideal
// bases; everything is expressed in those reference coordinates.
class UniversalCRAlgebra : public GradedAlgebra {
 public:
  UniversalCRAlgebra(int n, int depth, std::size_t basis_cap = kDefaultBasisCap);

  int n() const { return n_; }
  const FreeLieAlgebra& reference() const { return *ref_.algebra; }
  const AdaptedBasis& adapted_holomorphic() const { return ref_; }
  const AdaptedBasis& adapted_antiholomorphic() const { return anti_; }

  // Ideal bases in reference coordinates, indexed by degree 1..depth.
  const std::vector<std::vector<Element>>& ideal10_basis() const { return ideal10_; }
  const std::vector<std::vector<Element>>& ideal01_basis() const { return ideal01_; }

  // Change of basis: antiholomorphic-first Hall monomial (global index in
  // that algebra) expressed in reference coordinates.
  const std::vector<Element>& anti_to_reference() const { return anti_to_ref_; }

  // Linear projection from reference free coordinates to quotient
  // coordinates; kernel is the sum of the two ideals.
  Element project(const Element& free_element) const;

  int representative(int qi) const { return rep_mono_[qi]; }  // reference monomial index
  const std::vector<int>& b_type(int qi) const;  // E-counts then F-counts

  // Antilinear conjugation E_i <-> F_i on the quotient.
  Element conjugate(const Element& x) const;
  const Element& conjugate_basis(int qi) const { return conj_basis_[qi]; }

  Element bracket_basis(int i, int j) const override;
  std::string label(int i) const override;

  // B-type blocks at degree k: (type, quotient indices), keys sorted.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> type_blocks(int k) const;

  // Corollary-style independence test for reference Hall monomials: pairwise
  // distinct B-types with nonzero projections certify independence without
  // rank work; otherwise falls back to an exact rank computation.
  bool independent_by_type(const std::vector<int>& reference_monomials) const;

 private:
  int n_;
  AdaptedBasis ref_;
  AdaptedBasis anti_;
  std::vector<std::vector<Element>> ideal10_, ideal01_;
  std::vector<Element> anti_to_ref_;
  std::vector<EchelonForm> ideal_rref_;     // per degree, columns = local free coords
  std::vector<std::vector<int>> col_to_q_;  // per degree: local col -> quotient global (-1 pivot)
  std::vector<int> rep_mono_;
  std::vector<Element> conj_basis_;
  std::vector<std::map<int, Element>> table_;  // table_[i][j] for i > j
};

std::shared_ptr<UniversalCRAlgebra> build_universal_cr(int n, int depth,
                                                       std::size_t basis_cap = kDefaultBasisCap);

}  // namespace tanaka

#endif
