#include "tanaka/hall.hpp"

#include <algorithm>
#include <stdexcept>

#include "tanaka/errors.hpp"

namespace tanaka {

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared factor
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

std::size_t witt_dimension(int generators, int degree) {
  if (generators < 1 || degree < 1) throw std::invalid_argument("witt_dimension arguments");
  mpz_class total = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    int mu = moebius(e);
    if (mu == 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(generators),
                  static_cast<unsigned long>(degree / e));
    total += mu * pw;
  }
  total /= degree;
  if (!total.fits_ulong_p()) throw ResourceError("witt dimension overflow");
  return total.get_ui();
}

FreeLieAlgebra::FreeLieAlgebra(int generators, int depth, std::size_t basis_cap,
                               std::vector<std::string> labels)
    : generators_(generators), gen_labels_(std::move(labels)) {
  if (generators < 1 || depth < 1)
    throw std::invalid_argument("free Lie algebra needs generators >= 1, depth >= 1");
  if (gen_labels_.empty()) {
    for (int g = 0; g < generators; ++g) gen_labels_.push_back("X" + std::to_string(g + 1));
  }
  if (static_cast<int>(gen_labels_.size()) != generators)
    throw std::invalid_argument("label count does not match generators");

  std::size_t predicted = 0;
  for (int d = 1; d <= depth; ++d) predicted += witt_dimension(generators, d);
  if (predicted > basis_cap)
    throw ResourceError("predicted basis size " + std::to_string(predicted) +
                        " exceeds cap " + std::to_string(basis_cap));

  std::vector<int> dims;
  std::vector<int> degree_start;  // global index of first monomial of each degree
  degree_start.push_back(0);
  for (int g = 0; g < generators; ++g) {
    HallMonomial m;
    m.degree = 1;
    m.generator = g;
    m.btype.assign(generators, 0);
    m.btype[g] = 1;
    monos_.push_back(std::move(m));
    labels_.push_back(gen_labels_[g]);
  }
  dims.push_back(generators);
  degree_start.push_back(static_cast<int>(monos_.size()));

  for (int d = 2; d <= depth; ++d) {
    struct Cand {
      int left, right;
    };
    std::vector<Cand> cands;
    for (int du = 1; du < d; ++du) {
      const int dv = d - du;
      for (int u = degree_start[du - 1]; u < degree_start[du]; ++u) {
        for (int v = degree_start[dv - 1]; v < degree_start[dv]; ++v) {
          if (!(v < u)) continue;  // global order encodes the Hall order
          const HallMonomial& mu_ = monos_[u];
          if (!mu_.is_leaf() && !(mu_.right <= v)) continue;
          cands.push_back({u, v});
        }
      }
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      const int da = monos_[a.left].degree, db = monos_[b.left].degree;
      if (da != db) return da < db;
      if (a.left != b.left) return a.left < b.left;
      return a.right < b.right;
    });
    for (const Cand& c : cands) {
      HallMonomial m;
      m.degree = d;
      m.left = c.left;
      m.right = c.right;
      m.btype = monos_[c.left].btype;
      for (int g = 0; g < generators; ++g) m.btype[g] += monos_[c.right].btype[g];
      pair_index_.emplace(pair_key(c.left, c.right), static_cast<int>(monos_.size()));
      labels_.push_back("[" + labels_[c.left] + "," + labels_[c.right] + "]");
      monos_.push_back(std::move(m));
    }
    dims.push_back(static_cast<int>(cands.size()));
    degree_start.push_back(static_cast<int>(monos_.size()));
    if (static_cast<std::size_t>(dims.back()) != witt_dimension(generators, d))
      throw std::logic_error("hall basis size disagrees with witt dimension");
  }
  set_grading(depth, std::move(dims));
}

FreeLieAlgebra::FreeLieAlgebra(const FreeLieAlgebra& o)
    : GradedAlgebra(o),
      generators_(o.generators_),
      gen_labels_(o.gen_labels_),
      monos_(o.monos_),
      labels_(o.labels_),
      pair_index_(o.pair_index_) {
  std::lock_guard<std::mutex> lock(o.memo_mutex_);
  product_memo_ = o.product_memo_;
}

int FreeLieAlgebra::generator_index(const std::string& name) const {
  for (int g = 0; g < generators_; ++g)
    if (gen_labels_[g] == name) return g;
  return -1;
}

int FreeLieAlgebra::hall_pair(int u, int v) const {
  auto it = pair_index_.find(pair_key(u, v));
  return it == pair_index_.end() ? -1 : it->second;
}

Element FreeLieAlgebra::bracket_basis(int i, int j) const { return hall_product(i, j); }

Element FreeLieAlgebra::hall_product(int u, int v) const {
  if (u == v) return {};
  if (monos_[u].degree + monos_[v].degree > depth()) return {};
  if (u < v) {
    Element e = hall_product(v, u);
    e *= GaussianRational(-1);
    return e;
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = product_memo_.find(pair_key(u, v));
    if (it != product_memo_.end()) return it->second;
  }

  Element result;
  const HallMonomial& mu_ = monos_[u];
  if (mu_.is_leaf() || mu_.right <= v) {
    const int idx = hall_pair(u, v);
    if (idx < 0) throw std::logic_error("missing hall pair");
    result = Element::unit(idx);
  } else {
    // [[u1,u2],v] with v < u2: rewrite as [[u1,v],u2] - [[u2,v],u1]
    const int u1 = mu_.left, u2 = mu_.right;
    Element a = hall_product(u1, v);
    Element b = hall_product(u2, v);
    for (const auto& [m, cm] : a.c) result.add_scaled(hall_product(m, u2), cm);
    for (const auto& [m, cm] : b.c) result.add_scaled(hall_product(m, u1), -cm);
  }

  std::lock_guard<std::mutex> lock(memo_mutex_);
  product_memo_.emplace(pair_key(u, v), result);
  return result;
}

Element FreeLieAlgebra::rewrite(const BracketExpr& expr) const {
  if (expr.is_leaf()) {
    if (expr.generator < 0 || expr.generator >= generators_)
      throw std::invalid_argument("generator index out of range");
    return Element::unit(expr.generator);
  }
  if (expr.degree() > depth()) return {};
  return bracket(rewrite(*expr.a), rewrite(*expr.b));
}

Element parse_element(const std::string& text, const FreeLieAlgebra& algebra) {
  auto terms = parse_bracket_element(text, [&](const std::string& name) {
    const int g = algebra.generator_index(name);
    if (g < 0) throw ConfigError("unknown generator '" + name + "'");
    return g;
  });
  Element out;
  for (const auto& [coef, expr] : terms) out.add_scaled(algebra.rewrite(expr), coef);
  return out;
}

}  // namespace tanaka
