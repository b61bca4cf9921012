#include "tanaka/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tanaka {

void SparseMatrix::add(int r, int c, GaussianRational v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("sparse matrix index out of range");
  if (v.is_zero()) return;
  data_[r].emplace_back(c, std::move(v));
  compressed_ = false;
}

void SparseMatrix::compress() {
  if (compressed_) return;
  for (auto& row : data_) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second.is_zero(); }),
                 merged.end());
    row = std::move(merged);
  }
  compressed_ = true;
}

GaussianRational SparseMatrix::entry(int r, int c) const {
  for (const auto& [col, v] : data_[r])
    if (col == c) return v;
  return {};
}

int SparseMatrix::nnz() const {
  int n = 0;
  for (const auto& row : data_) n += static_cast<int>(row.size());
  return n;
}

namespace {

// Clears denominators and divides out the integer content, keeping entries
// in Z[i]. Cross-multiplication stays exact and coefficient growth bounded.
void normalize_content(SparseRow& row) {
  if (row.empty()) return;
  mpz_class lcm_den = 1;
  for (const auto& [c, v] : row) {
    if (sgn(v.re) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.re.get_den().get_mpz_t());
    if (sgn(v.im) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.im.get_den().get_mpz_t());
  }
  mpz_class gcd_num = 0;
  for (auto& [c, v] : row) {
    if (lcm_den != 1) {
      v.re *= lcm_den;
      v.im *= lcm_den;
    }
    if (sgn(v.re) != 0) mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.re.get_num().get_mpz_t());
    if (sgn(v.im) != 0) mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.im.get_num().get_mpz_t());
  }
  if (gcd_num > 1) {
    Rational g(gcd_num);
    for (auto& [c, v] : row) {
      v.re /= g;
      v.im /= g;
    }
  }
}

// target -= (m/p) * pivot, computed fraction-free as p*target - m*pivot.
SparseRow eliminate_row(const SparseRow& target, const SparseRow& pivot,
                        const GaussianRational& p, const GaussianRational& m) {
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, p * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -(m * pivot[j].second));
      ++j;
    } else {
      GaussianRational v = p * target[i].second - m * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize_content(out);
  return out;
}

GaussianRational row_entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return {};
}

}  // namespace

EchelonForm rref(const SparseMatrix& m_in) {
  SparseMatrix m = m_in;
  m.compress();

  struct Rec {
    SparseRow row;
    int order;  // original index, tie-break for pivot selection
  };
  // Rows bucketed by current leading column.
  std::vector<std::vector<Rec>> buckets(m.cols + 1);
  {
    int idx = 0;
    for (const auto& row : m.row_data()) {
      if (!row.empty()) {
        SparseRow r = row;
        normalize_content(r);
        buckets[r.front().first].push_back({std::move(r), idx});
      }
      ++idx;
    }
  }

  EchelonForm ech;
  ech.cols = m.cols;
  for (int col = 0; col < m.cols; ++col) {
    auto& bucket = buckets[col];
    if (bucket.empty()) continue;
    size_t best = 0;
    for (size_t k = 1; k < bucket.size(); ++k) {
      if (bucket[k].row.size() < bucket[best].row.size() ||
          (bucket[k].row.size() == bucket[best].row.size() &&
           bucket[k].order < bucket[best].order))
        best = k;
    }
    Rec pivot = std::move(bucket[best]);
    bucket.erase(bucket.begin() + static_cast<long>(best));
    const GaussianRational p = pivot.row.front().second;
    for (auto& rec : bucket) {
      SparseRow reduced = eliminate_row(rec.row, pivot.row, p, rec.row.front().second);
      if (!reduced.empty())
        buckets[reduced.front().first].push_back({std::move(reduced), rec.order});
    }
    bucket.clear();
    ech.pivot_cols.push_back(col);
    ech.rows.push_back(std::move(pivot.row));
  }

  // Back substitution: unit pivots, then clear entries above each pivot.
  for (size_t r = 0; r < ech.rows.size(); ++r) {
    const GaussianRational lead = ech.rows[r].front().second;
    if (!(lead == GaussianRational(1)))
      for (auto& [c, v] : ech.rows[r]) v /= lead;
  }
  for (size_t r = ech.rows.size(); r-- > 0;) {
    const int pc = ech.pivot_cols[r];
    for (size_t s = 0; s < r; ++s) {
      GaussianRational factor = row_entry(ech.rows[s], pc);
      if (factor.is_zero()) continue;
      ech.rows[s] = eliminate_row(ech.rows[s], ech.rows[r], GaussianRational(1), factor);
      // eliminate_row rescales by content; restore the unit pivot
      const GaussianRational lead = row_entry(ech.rows[s], ech.pivot_cols[s]);
      if (!(lead == GaussianRational(1)))
        for (auto& [c, v] : ech.rows[s]) v /= lead;
    }
  }
  return ech;
}

int rank(const SparseMatrix& m) { return rref(m).rank(); }

std::vector<std::vector<GaussianRational>> kernel_basis(const SparseMatrix& m) {
  EchelonForm ech = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<GaussianRational>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussianRational> v(m.cols);
    v[f] = GaussianRational(1);
    for (size_t r = 0; r < ech.rows.size(); ++r) {
      GaussianRational a = row_entry(ech.rows[r], f);
      if (!a.is_zero()) v[ech.pivot_cols[r]] = -a;
    }
    for (auto& x : v) {
      if (!x.is_zero()) {
        if (!(x == GaussianRational(1))) {
          GaussianRational scale = x;
          for (auto& y : v) y /= scale;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Identity check for S * conj(S) where S is cols x cols.
bool is_involution(const SparseMatrix& s) {
  if (s.rows != s.cols) return false;
  const auto& rows = s.row_data();
  for (int i = 0; i < s.rows; ++i) {
    std::map<int, GaussianRational> acc;
    for (const auto& [k, v] : rows[i])
      for (const auto& [j, w] : rows[k]) acc[j] += v * w.conj();
    for (int j = 0; j < s.cols; ++j) {
      GaussianRational want = (i == j) ? GaussianRational(1) : GaussianRational(0);
      auto it = acc.find(j);
      GaussianRational got = (it == acc.end()) ? GaussianRational(0) : it->second;
      if (!(got == want)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<GaussianRational>> solve_semilinear_fixed_points(
    const SparseMatrix& m_in, const SparseMatrix& sigma_in) {
  SparseMatrix m = m_in;
  m.compress();
  SparseMatrix sigma = sigma_in;
  sigma.compress();
  if (sigma.rows != m.cols || sigma.cols != m.cols)
    throw std::invalid_argument("sigma shape does not match column space");
  if (!is_involution(sigma)) throw std::invalid_argument("sigma is not an involution");

  const int n = m.cols;
  // Real unknowns interleaved: x_j at 2j, y_j at 2j+1 with v_j = x_j + i y_j.
  SparseMatrix real_sys(2 * m.rows + 2 * n, 2 * n);
  for (int r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.row_data()[r]) {
      real_sys.add(2 * r, 2 * c, GaussianRational(v.re));
      real_sys.add(2 * r, 2 * c + 1, GaussianRational(-v.im));
      real_sys.add(2 * r + 1, 2 * c, GaussianRational(v.im));
      real_sys.add(2 * r + 1, 2 * c + 1, GaussianRational(v.re));
    }
  }
  // v = S conj(v):  x_j = sum Re(S_jk) x_k + Im(S_jk) y_k,
  //                 y_j = sum Im(S_jk) x_k - Re(S_jk) y_k.
  const int base = 2 * m.rows;
  for (int j = 0; j < n; ++j) {
    real_sys.add(base + 2 * j, 2 * j, GaussianRational(1));
    real_sys.add(base + 2 * j + 1, 2 * j + 1, GaussianRational(1));
    for (const auto& [k, s] : sigma.row_data()[j]) {
      real_sys.add(base + 2 * j, 2 * k, GaussianRational(-s.re));
      real_sys.add(base + 2 * j, 2 * k + 1, GaussianRational(-s.im));
      real_sys.add(base + 2 * j + 1, 2 * k, GaussianRational(-s.im));
      real_sys.add(base + 2 * j + 1, 2 * k + 1, GaussianRational(s.re));
    }
  }

  std::vector<std::vector<GaussianRational>> fixed;
  for (const auto& w : kernel_basis(real_sys)) {
    std::vector<GaussianRational> v(n);
    for (int j = 0; j < n; ++j) v[j] = GaussianRational(w[2 * j].re, w[2 * j + 1].re);
    fixed.push_back(std::move(v));
  }
  return fixed;
}

std::optional<std::vector<GaussianRational>> solve_in_span(
    const std::vector<std::vector<GaussianRational>>& span,
    const std::vector<GaussianRational>& target) {
  const int k = static_cast<int>(span.size());
  const int len = static_cast<int>(target.size());
  SparseMatrix aug(len, k + 1);
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(span[j].size()) != len)
      throw std::invalid_argument("span vector length mismatch");
    for (int r = 0; r < len; ++r) aug.add(r, j, span[j][r]);
  }
  for (int r = 0; r < len; ++r) aug.add(r, k, target[r]);

  EchelonForm ech = rref(aug);
  std::vector<GaussianRational> x(k);
  for (size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivot_cols[r] == k) return std::nullopt;  // inconsistent
    x[ech.pivot_cols[r]] = row_entry(ech.rows[r], k);
  }
  return x;
}

}  // namespace tanaka
