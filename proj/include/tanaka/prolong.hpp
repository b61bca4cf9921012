#ifndef TANAKA_PROLONG_HPP
#define TANAKA_PROLONG_HPP

#include <optional>
#include <vector>

#include "tanaka/symbol.hpp"

namespace tanaka {

// Degree-shifting linear map on the symbol: the basis vector with global
// index b (degree -p) maps into m^{-p+shift} when p > shift, with image keyed
// by symbol global indices, or into prolongation level (shift - p) when
// p <= shift, keyed by that level's basis positions.
struct DegreeShiftMap {
  int shift = 0;
  std::vector<Element> images;
};

// One computed prolongation level: complex solution basis, the matrix of the
// induced antilinear involution in that basis, and the fixed-point (real)
// basis extracted by realification.
struct ProlongationLevel {
  std::vector<DegreeShiftMap> complex_basis;
  std::vector<std::vector<GaussianRational>> conj_matrix;  // column t = coords of sigma(K_t)
  std::vector<std::vector<GaussianRational>> real_coords;  // fixed combinations
  std::vector<DegreeShiftMap> real_basis;
};

struct ProlongationResult {
  std::vector<int> complex_dims;  // level 0, 1, ...
  std::vector<int> real_dims;
  std::optional<int> stabilized_at;  // first level with g^l = 0
  bool recheck_passed = false;       // one level beyond the first zero is zero too
  std::vector<ProlongationLevel> levels;
  std::vector<double> level_seconds;
};

// Unknown-vector layout for the level-l constraint system.
struct LevelLayout {
  int level = 0;
  std::vector<int> col_offset;   // per symbol basis index
  std::vector<int> target_size;  // per symbol basis index
  int total_cols = 0;
};

LevelLayout level_layout(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                         int level);

// Degree-0 derivations of the symbol preserving both eigenspaces of the
// complex structure, with the conjugation-fixed real subalgebra.
ProlongationLevel compute_g0(const CRSymbol& s);

// Complex solution basis at the given level >= 1, from constraints
// instantiated on (Y, Z) with Y of degree -1, then re-verified on all pairs.
std::vector<DegreeShiftMap> compute_next_level(const CRSymbol& s,
                                               const std::vector<ProlongationLevel>& lower,
                                               int level);

// Fills conj_matrix / real_coords / real_basis of levels[level] by
// restricting the induced involution to the solution span and realifying.
void reality_restrict(const CRSymbol& s, std::vector<ProlongationLevel>& levels, int level);

ProlongationResult prolong_until_zero(const CRSymbol& s, int max_level);

// Left side minus right side of the defining constraint, evaluated for the
// basis pair (y, z); zero for genuine prolongation elements.
Element defg1_residual(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                       const DegreeShiftMap& x, int y, int z);

// Image of an element under a degree-shift map (m-degree arguments only).
Element apply_map(const DegreeShiftMap& x, const Element& arg);

// Induced antilinear involution on maps: sigma(X) = conj . X . conj, with
// level-valued targets conjugated through the stored level involutions.
DegreeShiftMap conjugate_map(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                             const DegreeShiftMap& x);

// Unknown-coordinate vector of a map in the layout of its level.
std::vector<GaussianRational> flatten_map(const CRSymbol& s, const LevelLayout& layout,
                                          const DegreeShiftMap& x);

}  // namespace tanaka

#endif
