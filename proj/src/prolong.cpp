#include "tanaka/prolong.hpp"

#include <chrono>
#include <stdexcept>

namespace tanaka {

namespace {

// Target of X(b) for b of degree -p at the given level: the symbol slice of
// degree p - level when p > level, otherwise prolongation level (level - p).
int target_size_of(const CRSymbol& s, const std::vector<ProlongationLevel>& lower, int level,
                   int b) {
  const int p = s.degree_of(b);
  if (p > level) return s.dim_at(p - level);
  return static_cast<int>(lower[level - p].complex_basis.size());
}

// Image coordinates of [G, z] for a lower-level basis element G; stored
// directly in G's images.
const Element& level_action(const std::vector<ProlongationLevel>& lower, int level_j, int t,
                            int z) {
  return lower[level_j].complex_basis[t].images[z];
}

// Local key of a coordinate of (level-j map applied to a degree -arg_degree
// vector): m-valued images are keyed by symbol global index, level-valued
// ones by basis position.
int target_local(const CRSymbol& s, int map_level, int arg_degree, int key) {
  if (arg_degree > map_level) return key - s.offset(arg_degree - map_level);
  return key;
}

}  // namespace

LevelLayout level_layout(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                         int level) {
  LevelLayout lay;
  lay.level = level;
  lay.col_offset.resize(s.total_dim());
  lay.target_size.resize(s.total_dim());
  int acc = 0;
  for (int b = 0; b < s.total_dim(); ++b) {
    lay.col_offset[b] = acc;
    lay.target_size[b] = target_size_of(s, lower, level, b);
    acc += lay.target_size[b];
  }
  lay.total_cols = acc;
  return lay;
}

namespace {

struct SystemBuilder {
  const CRSymbol& s;
  const std::vector<ProlongationLevel>& lower;
  const int level;
  const LevelLayout& lay;
  std::vector<SparseRow> rows;

  // Column of unknown coordinate t of X(b).
  int col(int b, int t) const { return lay.col_offset[b] + t; }

  // Appends the constraint block for the pair (y, z): one scalar row per
  // coordinate of the target space of the equation.
  void add_pair(int y, int z) {
    const int dy = s.degree_of(y), dz = s.degree_of(z);
    const int q = dy + dz - level;  // equation lives in m^{-q} or level -q
    int eq_dim;
    if (q >= 1) {
      if (q > s.depth()) return;  // all three terms vanish identically
      eq_dim = s.dim_at(q);
    } else {
      eq_dim = static_cast<int>(lower[-q].complex_basis.size());
    }
    if (eq_dim == 0) return;
    std::vector<std::map<int, GaussianRational>> block(eq_dim);

    auto put = [&](int local, int column, const GaussianRational& v) {
      if (v.is_zero()) return;
      auto& cell = block[local][column];
      cell += v;
    };

    // [X(Y), Z]
    if (dy > level) {
      for (int m = 0; m < lay.target_size[y]; ++m) {
        Element br = s.bracket_basis(s.offset(dy - level) + m, z);
        for (const auto& [key, v] : br.c) put(key - s.offset(q), col(y, m), v);
      }
    } else {
      for (int t = 0; t < lay.target_size[y]; ++t) {
        const Element& act = level_action(lower, level - dy, t, z);
        for (const auto& [key, v] : act.c) put(target_local(s, level - dy, dz, key), col(y, t), v);
      }
    }

    // [Y, X(Z)] = -[X(Z), Y]
    if (dz > level) {
      for (int m = 0; m < lay.target_size[z]; ++m) {
        Element br = s.bracket_basis(y, s.offset(dz - level) + m);
        for (const auto& [key, v] : br.c) put(key - s.offset(q), col(z, m), v);
      }
    } else {
      for (int t = 0; t < lay.target_size[z]; ++t) {
        const Element& act = level_action(lower, level - dz, t, y);
        for (const auto& [key, v] : act.c)
          put(target_local(s, level - dz, dy, key), col(z, t), -v);
      }
    }

    // -X([Y, Z]): the t-th unknown coordinate of X(w) sits at local target
    // coordinate t of the equation space.
    if (dy + dz <= s.depth()) {
      Element br = s.bracket_basis(y, z);
      for (const auto& [w, c] : br.c)
        for (int t = 0; t < lay.target_size[w]; ++t) put(t, col(w, t), -c);
    }
    for (auto& cells : block) {
      SparseRow row(cells.begin(), cells.end());
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
};

}  // namespace

namespace {

std::vector<DegreeShiftMap> kernel_to_maps(const CRSymbol& s, const LevelLayout& lay,
                                           const std::vector<std::vector<GaussianRational>>& ker,
                                           int level) {
  std::vector<DegreeShiftMap> maps;
  for (const auto& v : ker) {
    DegreeShiftMap x;
    x.shift = level;
    x.images.resize(s.total_dim());
    for (int b = 0; b < s.total_dim(); ++b) {
      const int p = s.degree_of(b);
      for (int t = 0; t < lay.target_size[b]; ++t) {
        const GaussianRational& c = v[lay.col_offset[b] + t];
        if (c.is_zero()) continue;
        const int key = p > level ? s.offset(p - level) + t : t;
        x.images[b].set(key, c);
      }
    }
    maps.push_back(std::move(x));
  }
  return maps;
}

void verify_all_pairs(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                      const std::vector<DegreeShiftMap>& basis) {
  for (const auto& x : basis)
    for (int y = 0; y < s.total_dim(); ++y)
      for (int z = 0; z < s.total_dim(); ++z)
        if (!defg1_residual(s, lower, x, y, z).is_zero())
          throw std::logic_error("constraint violated on the full pair sweep");
}

std::vector<DegreeShiftMap> solve_level(const CRSymbol& s,
                                        const std::vector<ProlongationLevel>& lower, int level,
                                        bool g0_split_rows) {
  const LevelLayout lay = level_layout(s, lower, level);
  SystemBuilder builder{s, lower, level, lay, {}};

  if (g0_split_rows) {
    // L(E_i) must have no F-component and L(F_i) no E-component.
    const int n = s.n();
    for (int b = 0; b < 2 * n; ++b)
      for (int t = 0; t < 2 * n; ++t)
        if ((b < n) != (t < n)) builder.rows.push_back({{lay.col_offset[b] + t, GaussianRational(1)}});
  }
  for (int y = 0; y < s.dim_at(1); ++y)
    for (int z = 0; z < s.total_dim(); ++z) builder.add_pair(y, z);

  SparseMatrix m(static_cast<int>(builder.rows.size()), lay.total_cols);
  for (size_t r = 0; r < builder.rows.size(); ++r)
    for (const auto& [c, v] : builder.rows[r]) m.add(static_cast<int>(r), c, v);

  std::vector<DegreeShiftMap> basis = kernel_to_maps(s, lay, kernel_basis(m), level);
  verify_all_pairs(s, lower, basis);
  return basis;
}

}  // namespace

ProlongationLevel compute_g0(const CRSymbol& s) {
  ProlongationLevel level0;
  std::vector<ProlongationLevel> none;
  level0.complex_basis = solve_level(s, none, 0, true);
  return level0;
}

std::vector<DegreeShiftMap> compute_next_level(const CRSymbol& s,
                                               const std::vector<ProlongationLevel>& lower,
                                               int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (static_cast<int>(lower.size()) < level)
    throw std::invalid_argument("lower levels incomplete");
  return solve_level(s, lower, level, false);
}

Element apply_map(const DegreeShiftMap& x, const Element& arg) {
  Element out;
  for (const auto& [b, c] : arg.c) out.add_scaled(x.images[b], c);
  return out;
}

Element defg1_residual(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                       const DegreeShiftMap& x, int y, int z) {
  const int dy = s.degree_of(y), dz = s.degree_of(z);
  const int level = x.shift;
  Element res;

  auto bracket_image_with = [&](const Element& img, int img_level_or_deg, bool img_is_level,
                                int other, bool other_on_right, Element& acc) {
    // img is X(Y); other is Z. Adds [img, Z] (or -[Z, img] when on the left).
    if (!img_is_level) {
      for (const auto& [m, c] : img.c) {
        Element br = other_on_right ? s.bracket_basis(m, other) : s.bracket_basis(other, m);
        acc.add_scaled(br, other_on_right ? c : -c);
      }
    } else {
      for (const auto& [t, c] : img.c) {
        const Element& act = lower[img_level_or_deg].complex_basis[t].images[other];
        acc.add_scaled(act, other_on_right ? c : -c);
      }
    }
  };

  // [X(Y), Z]
  bracket_image_with(x.images[y], level - dy, dy <= level, z, true, res);
  // [Y, X(Z)] = -[X(Z), Y]
  {
    Element tmp;
    bracket_image_with(x.images[z], level - dz, dz <= level, y, true, tmp);
    res.add_scaled(tmp, GaussianRational(-1));
  }
  // -X([Y, Z])
  if (dy + dz <= s.depth()) {
    Element br = s.bracket_basis(y, z);
    res.add_scaled(apply_map(x, br), GaussianRational(-1));
  }
  return res;
}

DegreeShiftMap conjugate_map(const CRSymbol& s, const std::vector<ProlongationLevel>& lower,
                             const DegreeShiftMap& x) {
  DegreeShiftMap out;
  out.shift = x.shift;
  out.images.resize(s.total_dim());
  for (int b = 0; b < s.total_dim(); ++b) {
    const int p = s.degree_of(b);
    // X(conj(b)) by linearity
    Element w = apply_map(x, s.conjugate_basis(b));
    // then the antilinear conjugation of the target
    if (p > x.shift) {
      out.images[b] = s.conjugate(w);
    } else {
      const auto& R = lower[x.shift - p].conj_matrix;
      Element acc;
      for (const auto& [t, c] : w.c) {
        const auto& col = R[t];
        for (size_t u = 0; u < col.size(); ++u)
          if (!col[u].is_zero()) acc.add_scaled(Element::unit(static_cast<int>(u)), c.conj() * col[u]);
      }
      out.images[b] = std::move(acc);
    }
  }
  return out;
}

std::vector<GaussianRational> flatten_map(const CRSymbol& s, const LevelLayout& lay,
                                          const DegreeShiftMap& x) {
  std::vector<GaussianRational> v(lay.total_cols);
  for (int b = 0; b < s.total_dim(); ++b) {
    const int p = s.degree_of(b);
    for (const auto& [key, c] : x.images[b].c) {
      const int t = p > x.shift ? key - s.offset(p - x.shift) : key;
      v[lay.col_offset[b] + t] = c;
    }
  }
  return v;
}

void reality_restrict(const CRSymbol& s, std::vector<ProlongationLevel>& levels, int level) {
  ProlongationLevel& lv = levels[level];
  const int k = static_cast<int>(lv.complex_basis.size());
  lv.conj_matrix.assign(k, {});
  lv.real_coords.clear();
  lv.real_basis.clear();
  if (k == 0) return;

  std::vector<ProlongationLevel> const& lower = levels;
  const LevelLayout lay = level_layout(s, lower, level);
  std::vector<std::vector<GaussianRational>> span;
  for (const auto& b : lv.complex_basis) span.push_back(flatten_map(s, lay, b));

  for (int t = 0; t < k; ++t) {
    DegreeShiftMap st = conjugate_map(s, lower, lv.complex_basis[t]);
    auto coords = solve_in_span(span, flatten_map(s, lay, st));
    if (!coords) throw std::logic_error("conjugate of a solution leaves the solution space");
    lv.conj_matrix[t] = std::move(*coords);
  }

  // sigma on basis coordinates: v -> R conj(v); fixed points by realification.
  SparseMatrix zero_rows(0, k);
  SparseMatrix sigma(k, k);
  for (int t = 0; t < k; ++t)
    for (int u = 0; u < k; ++u)
      if (!lv.conj_matrix[t][u].is_zero()) sigma.add(u, t, lv.conj_matrix[t][u]);
  lv.real_coords = solve_semilinear_fixed_points(zero_rows, sigma);
  if (static_cast<int>(lv.real_coords.size()) != k)
    throw std::logic_error("real form of a self-conjugate solution space has wrong dimension");

  for (const auto& combo : lv.real_coords) {
    DegreeShiftMap r;
    r.shift = level;
    r.images.resize(s.total_dim());
    for (int t = 0; t < k; ++t) {
      if (combo[t].is_zero()) continue;
      for (int b = 0; b < s.total_dim(); ++b)
        r.images[b].add_scaled(lv.complex_basis[t].images[b], combo[t]);
    }
    lv.real_basis.push_back(std::move(r));
  }
}

ProlongationResult prolong_until_zero(const CRSymbol& s, int max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
  ProlongationResult res;
  auto tick = [] { return std::chrono::steady_clock::now(); };
  auto seconds = [](auto a, auto b) { return std::chrono::duration<double>(b - a).count(); };

  auto t0 = tick();
  res.levels.push_back(compute_g0(s));
  reality_restrict(s, res.levels, 0);
  res.level_seconds.push_back(seconds(t0, tick()));
  res.complex_dims.push_back(static_cast<int>(res.levels[0].complex_basis.size()));
  res.real_dims.push_back(static_cast<int>(res.levels[0].real_basis.size()));

  for (int level = 1; level <= max_level; ++level) {
    auto t1 = tick();
    ProlongationLevel lv;
    lv.complex_basis = compute_next_level(s, res.levels, level);
    res.levels.push_back(std::move(lv));
    reality_restrict(s, res.levels, level);
    res.level_seconds.push_back(seconds(t1, tick()));
    res.complex_dims.push_back(static_cast<int>(res.levels[level].complex_basis.size()));
    res.real_dims.push_back(static_cast<int>(res.levels[level].real_basis.size()));
    if (res.real_dims.back() == 0) {
      res.stabilized_at = level;
      // consistency re-check one level beyond the first zero
      res.recheck_passed = compute_next_level(s, res.levels, level + 1).empty();
      break;
    }
  }
  return res;
}

}  // namespace tanaka
