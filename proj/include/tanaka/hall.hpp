#ifndef TANAKA_HALL_HPP
#define TANAKA_HALL_HPP

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tanaka/algebra.hpp"

namespace tanaka {

inline constexpr std::size_t kDefaultBasisCap = 20000;

// Dimension of the degree-d component of the free Lie algebra on k
// generators: (1/d) sum_{e|d} moebius(e) k^{d/e}. Independent oracle for the
// Hall construction.
std::size_t witt_dimension(int generators, int degree);

// Hall basis monomial: a bracket tree whose children are themselves Hall
// monomials, referenced by global basis index. Leaves carry a generator.
struct HallMonomial {
  int degree = 1;
  int left = -1;       // global index; -1 for a leaf
  int right = -1;
  int generator = -1;  // 0-based generator index for leaves
  std::vector<int> btype;

  bool is_leaf() const { return left < 0; }
};

// Free nilpotent Lie algebra of the given depth with the classical Hall
// basis. Order is degree-major; within a degree monomials [U,V] sort by
// (degree of U, index of U, index of V). Brackets beyond the depth truncate
// to zero. Bracket expansions are memoized on demand.
class FreeLieAlgebra : public GradedAlgebra {
 public:
  FreeLieAlgebra(int generators, int depth, std::size_t basis_cap = kDefaultBasisCap,
                 std::vector<std::string> labels = {});
  FreeLieAlgebra(const FreeLieAlgebra& o);
  FreeLieAlgebra& operator=(const FreeLieAlgebra&) = delete;

  int generators() const { return generators_; }
  const HallMonomial& monomial(int gi) const { return monos_[gi]; }
  const std::vector<HallMonomial>& monomials() const { return monos_; }
  int generator_index(const std::string& name) const;  // -1 if unknown

  // Global index of the Hall monomial [u, v], or -1 when the pair does not
  // satisfy the Hall conditions (or exceeds the depth).
  int hall_pair(int u, int v) const;

  // Canonical Hall-basis expansion of a formal bracket tree.
  Element rewrite(const BracketExpr& expr) const;

  Element bracket_basis(int i, int j) const override;
  std::string label(int i) const override { return labels_[i]; }

  const std::vector<int>& b_type(int gi) const { return monos_[gi].btype; }

 private:
  Element hall_product(int u, int v) const;

  int generators_;
  std::vector<std::string> gen_labels_;
  std::vector<HallMonomial> monos_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint64_t, int> pair_index_;
  mutable std::unordered_map<std::uint64_t, Element> product_memo_;
  mutable std::mutex memo_mutex_;
};

// Parses an element in the monomial text syntax against the algebra's
// generator names and rewrites it into the Hall basis.
Element parse_element(const std::string& text, const FreeLieAlgebra& algebra);

}  // namespace tanaka

#endif
