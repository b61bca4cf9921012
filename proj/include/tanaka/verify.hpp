#ifndef TANAKA_VERIFY_HPP
#define TANAKA_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tanaka/prolong.hpp"

namespace tanaka {

// Raw degree-0 map on the symbol: one image per basis vector. Not assumed to
// be a derivation, so corrupted variants can flow through the same checks.
struct SymbolAction0 {
  std::vector<Element> img;
};

// Raw shift-1 map: degree -1 arguments yield degree-0 actions, deeper
// arguments yield symbol elements.
struct SymbolAction1 {
  std::vector<SymbolAction0> deg1;  // indexed 0..dim(-1)-1
  std::vector<Element> deeper;      // indexed by global basis index, deg >= 2
};

SymbolAction1 raw_action(const CRSymbol& s, const std::vector<ProlongationLevel>& levels,
                         const DegreeShiftMap& x);
SymbolAction1 scale_action(const SymbolAction1& L, const GaussianRational& c);

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "vacuous"
  std::string witness;
};

// Both sides of the iterated-bracket identity for one (E, W, r); exact
// comparison. E must be a degree -1 basis element index, W a basis index.
bool check_bracket_identity(const CRSymbol& s, const SymbolAction1& L, int e, int w, int r,
                            std::string* witness);

// Proportionality L_{E|E} = lambda E for every holomorphic basis vector, plus
// the symmetric pair identity; extracts the linear functional alpha.
CheckResult check_lemma_quadratic(const CRSymbol& s, const SymbolAction1& L,
                                  std::vector<GaussianRational>* alpha_out);

// Exact diagonalisability of ad_{L_E} on the antiholomorphic half with the
// two admissible eigenvalues; zero map required when alpha(E) = 0.
CheckResult check_eigenstructure(const CRSymbol& s, const SymbolAction1& L,
                                 const std::vector<GaussianRational>& alpha,
                                 std::vector<GaussianRational>* eigenvalues_out);

// The normalized iterated-bracket coefficient identity, r = 0..mu+1.
CheckResult check_claim_identity(const CRSymbol& s, const SymbolAction1& L,
                                 const std::vector<GaussianRational>& alpha);

struct VerificationReport {
  int n = 0;
  int mu = 0;
  std::vector<std::string> ideal_texts;
  std::vector<int> universal_dims;
  std::vector<int> symbol_dims;
  std::vector<int> real_dims_by_degree;
  // per degree: (block key like "(2,1|0,1)", dimension), key-sorted
  std::vector<std::vector<std::pair<std::string, int>>> blocks;
  std::vector<int> g_dims_complex;
  std::vector<int> g_dims_real;
  std::optional<int> stabilized_at;
  int g1_real_dim = 0;
  std::string theorem_status;  // "pass" | "fail" | "outside_hypotheses"
  std::vector<CheckResult> checks;
  std::vector<double> timings_seconds;  // build, prolong, checks
  bool emitted_bases = false;
  std::vector<std::vector<std::string>> level_bases_text;  // per level when emitted

  bool all_pass() const;
};

// Builds the instance, runs the prolongation and the whole check battery.
VerificationReport verify_main_theorem(int n, int mu, const std::vector<std::string>& ideal_texts,
                                       int max_level = 4,
                                       std::size_t basis_cap = kDefaultBasisCap, int jobs = 1,
                                       bool emit_bases = false);

}  // namespace tanaka

#endif
