#ifndef TANAKA_SPARSE_HPP
#define TANAKA_SPARSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

// One matrix row, sorted by column, no zero entries after compress().
using SparseRow = std::vector<std::pair<int, GaussianRational>>;

struct SparseMatrix {
  int rows = 0;
  int cols = 0;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), data_(r) {}

  // Accumulates v into (r, c). Duplicates are merged by compress().
  void add(int r, int c, GaussianRational v);
  void compress();

  const std::vector<SparseRow>& row_data() const { return data_; }
  GaussianRational entry(int r, int c) const;
  int nnz() const;

 private:
  std::vector<SparseRow> data_;
  bool compressed_ = true;
};

// Reduced row echelon form: unit pivots, zeros above and below, rows ordered
// by pivot column. Unique for a given matrix, so every downstream basis
// choice is deterministic.
struct EchelonForm {
  std::vector<SparseRow> rows;
  std::vector<int> pivot_cols;  // parallel to rows, strictly increasing
  int cols = 0;
  int rank() const { return static_cast<int>(rows.size()); }
};

// Fraction-free forward elimination (integer cross-multiplication with
// content reduction) followed by back substitution.
EchelonForm rref(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of the right null space, each vector scaled so its first nonzero
// coordinate is 1; ordered by free column. Empty iff rank == cols.
std::vector<std::vector<GaussianRational>> kernel_basis(const SparseMatrix& m);

// Basis of { v : m v = 0 and sigma(v) = v } where sigma(v) = S * conj(v) is
// an antilinear involution. Computed by realification: each complex unknown
// splits into two real unknowns and the semilinear condition becomes linear.
// Throws std::invalid_argument unless S * conj(S) = I.
std::vector<std::vector<GaussianRational>> solve_semilinear_fixed_points(
    const SparseMatrix& m, const SparseMatrix& sigma);

// Coordinates x with sum_i x_i span[i] = target, if target lies in the span.
// Free coordinates (if the span is dependent) are set to zero.
std::optional<std::vector<GaussianRational>> solve_in_span(
    const std::vector<std::vector<GaussianRational>>& span,
    const std::vector<GaussianRational>& target);

}  // namespace tanaka

#endif
