#include "tanaka/report.hpp"

#include <sstream>

namespace tanaka {

namespace {

nlohmann::json dims_json(const std::vector<int>& dims) {
  return nlohmann::json(dims);
}

nlohmann::json blocks_json(const std::vector<std::vector<std::pair<std::string, int>>>& blocks) {
  nlohmann::json out = nlohmann::json::object();
  for (size_t k = 0; k < blocks.size(); ++k) {
    nlohmann::json level = nlohmann::json::object();
    for (const auto& [key, dim] : blocks[k]) level[key] = dim;
    out[std::to_string(k + 1)] = std::move(level);
  }
  return out;
}

}  // namespace

nlohmann::json machine_verify_report(const VerificationReport& rep) {
  nlohmann::json j;
  j["basis_order"] = kBasisOrderNote;
  j["blocks"] = blocks_json(rep.blocks);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.status;
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["g1_real_dim"] = rep.g1_real_dim;
  j["g_dims_complex"] = dims_json(rep.g_dims_complex);
  j["g_dims_real"] = dims_json(rep.g_dims_real);
  j["instance"] = {{"ideal", rep.ideal_texts}, {"mu", rep.mu}, {"n", rep.n}};
  j["real_dims"] = dims_json(rep.real_dims_by_degree);
  if (rep.stabilized_at)
    j["stabilized_at"] = *rep.stabilized_at;
  else
    j["stabilized_at"] = nullptr;
  j["symbol_dims_complex"] = dims_json(rep.symbol_dims);
  j["theorem_status"] = rep.theorem_status;
  j["universal_dims_complex"] = dims_json(rep.universal_dims);
  if (rep.emitted_bases) {
    nlohmann::json bases = nlohmann::json::array();
    for (const auto& level : rep.level_bases_text) bases.push_back(level);
    j["bases"] = std::move(bases);
  }
  return j;
}

namespace {

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) out += (i ? " " : "") + std::to_string(dims[i]);
  return out;
}

}  // namespace

std::string human_verify_report(const VerificationReport& rep) {
  std::ostringstream os;
  os << "instance: n=" << rep.n << " mu=" << rep.mu;
  if (!rep.ideal_texts.empty()) {
    os << " ideal=[";
    for (size_t i = 0; i < rep.ideal_texts.size(); ++i)
      os << (i ? ", " : "") << '"' << rep.ideal_texts[i] << '"';
    os << "]";
  }
  os << "\n";
  os << "universal dims (complex):   " << join_dims(rep.universal_dims) << "\n";
  os << "symbol dims (complex):      " << join_dims(rep.symbol_dims) << "\n";
  os << "real form dims:             " << join_dims(rep.real_dims_by_degree) << "\n";
  for (size_t k = 0; k < rep.blocks.size(); ++k) {
    os << "degree -" << (k + 1) << " blocks:";
    for (const auto& [key, dim] : rep.blocks[k]) os << " " << key << ":" << dim;
    os << "\n";
  }
  os << "prolongation dims (complex): " << join_dims(rep.g_dims_complex) << "\n";
  os << "prolongation dims (real):    " << join_dims(rep.g_dims_real) << "\n";
  if (rep.stabilized_at)
    os << "stabilized at level " << *rep.stabilized_at << "\n";
  else
    os << "not stabilized within max_level\n";
  os << "g1 real dim: " << rep.g1_real_dim << "\n";
  os << "theorem status: " << rep.theorem_status << "\n";
  os << "checks:\n";
  for (const auto& c : rep.checks) {
    os << "  " << c.status;
    for (size_t pad = c.status.size(); pad < 8; ++pad) os << ' ';
    os << c.name;
    if (!c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  if (rep.timings_seconds.size() == 3) {
    os << "timings: build=" << rep.timings_seconds[0] << "s prolong=" << rep.timings_seconds[1]
       << "s checks=" << rep.timings_seconds[2] << "s\n";
  }
  if (rep.emitted_bases) {
    for (size_t level = 0; level < rep.level_bases_text.size(); ++level) {
      os << "level " << level << " real basis:\n";
      for (const auto& t : rep.level_bases_text[level]) os << "  " << t << "\n";
    }
  }
  return os.str();
}

nlohmann::json machine_hall_report(int generators, int depth, const std::vector<int>& dims) {
  nlohmann::json j;
  j["basis_order"] = kBasisOrderNote;
  j["command"] = "hall";
  j["depth"] = depth;
  j["dims"] = dims_json(dims);
  j["generators"] = generators;
  nlohmann::json witt = nlohmann::json::array();
  for (int d = 1; d <= depth; ++d) witt.push_back(witt_dimension(generators, d));
  j["witt"] = std::move(witt);
  return j;
}

nlohmann::json machine_universal_report(const UniversalCRAlgebra& u) {
  nlohmann::json j;
  j["basis_order"] = kBasisOrderNote;
  j["command"] = "universal";
  j["dims_complex"] = dims_json(u.dims());
  nlohmann::json ideal10 = nlohmann::json::array(), ideal01 = nlohmann::json::array();
  for (int d = 1; d <= u.depth(); ++d) {
    ideal10.push_back(u.ideal10_basis()[d - 1].size());
    ideal01.push_back(u.ideal01_basis()[d - 1].size());
  }
  j["ideal10_dims"] = std::move(ideal10);
  j["ideal01_dims"] = std::move(ideal01);
  std::vector<std::vector<std::pair<std::string, int>>> blocks;
  for (int k = 1; k <= u.depth(); ++k) {
    std::vector<std::pair<std::string, int>> level;
    for (const auto& [bt, idxs] : u.type_blocks(k)) {
      std::string key = "(";
      for (int i = 0; i < u.n(); ++i) key += (i ? "," : "") + std::to_string(bt[i]);
      key += "|";
      for (int i = 0; i < u.n(); ++i) key += (i ? "," : "") + std::to_string(bt[u.n() + i]);
      key += ")";
      level.emplace_back(key, static_cast<int>(idxs.size()));
    }
    blocks.push_back(std::move(level));
  }
  j["blocks"] = blocks_json(blocks);
  j["mu"] = u.depth();
  j["n"] = u.n();
  return j;
}

nlohmann::json machine_symbol_report(const CRSymbol& s, const std::vector<int>& real_dims) {
  nlohmann::json j;
  j["basis_order"] = kBasisOrderNote;
  j["command"] = "symbol";
  j["dims_complex"] = dims_json(s.dims());
  j["fundamental"] = check_fundamental(s);
  j["lowest_ideal_dim"] = s.lowest_ideal_basis().size();
  j["mu"] = s.mu();
  j["n"] = s.n();
  j["real_dims"] = dims_json(real_dims);
  return j;
}

nlohmann::json machine_prolong_report(int n, int mu, const ProlongationResult& pr) {
  nlohmann::json j;
  j["basis_order"] = kBasisOrderNote;
  j["command"] = "prolong";
  j["g_dims_complex"] = dims_json(pr.complex_dims);
  j["g_dims_real"] = dims_json(pr.real_dims);
  j["mu"] = mu;
  j["n"] = n;
  if (pr.stabilized_at)
    j["stabilized_at"] = *pr.stabilized_at;
  else
    j["stabilized_at"] = nullptr;
  j["recheck_passed"] = pr.recheck_passed;
  return j;
}

std::string render_machine(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace tanaka
