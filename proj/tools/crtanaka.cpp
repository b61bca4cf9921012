#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tanaka/config.hpp"
#include "tanaka/errors.hpp"
#include "tanaka/report.hpp"

using namespace tanaka;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << text;
}

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) out += (i ? " " : "") + std::to_string(dims[i]);
  return out;
}

struct CommonOpts {
  std::string config_path;
  std::string format = "human";
  RunConfig cfg;

  void load(CLI::App* cmd) {
    if (!config_path.empty()) {
      RunConfig merged = parse_config(read_file(config_path));
      // flags override the file
      auto given = [cmd](const std::string& name) {
        const CLI::Option* opt = cmd->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
      };
      if (given("--n")) merged.n = cfg.n;
      if (given("--mu")) merged.mu = cfg.mu;
      if (given("--generators")) merged.generators = cfg.generators;
      if (given("--depth")) merged.depth = cfg.depth;
      if (given("--ideal")) merged.ideal = cfg.ideal;
      if (given("--max-level")) merged.max_level = cfg.max_level;
      if (given("--basis-cap")) merged.basis_cap = cfg.basis_cap;
      if (given("--jobs")) merged.jobs = cfg.jobs;
      if (given("--emit-bases")) merged.emit_bases = cfg.emit_bases;
      if (given("--output")) merged.output = cfg.output;
      cfg = merged;
    }
    // an empty --ideal entry clears the list, overriding a config file
    std::erase_if(cfg.ideal, [](const std::string& s) { return s.empty(); });
    if (cfg.n < 1) throw ConfigError("n out of range");
    if (cfg.mu < 2) throw ConfigError("mu out of range");
  }

  void add_flags(CLI::App* cmd, bool with_instance = true) {
    cmd->add_option("--config", config_path, "config file (flags override it)");
    cmd->add_option("--format", format, "report format: human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("--output", cfg.output, "output path, '-' for stdout");
    cmd->add_option("--basis-cap", cfg.basis_cap, "refuse larger predicted bases");
    if (with_instance) {
      cmd->add_option("--n", cfg.n, "CR dimension");
      cmd->add_option("--mu", cfg.mu, "depth");
      cmd->add_option("--ideal", cfg.ideal, "lowest-degree ideal generator (repeatable)");
    }
  }
};

int run_hall(CommonOpts& o) {
  FreeLieAlgebra a(o.cfg.generators, o.cfg.depth, o.cfg.basis_cap);
  if (o.format == "machine") {
    write_output(o.cfg.output,
                 render_machine(machine_hall_report(o.cfg.generators, o.cfg.depth, a.dims())));
  } else {
    std::ostringstream os;
    os << "free Lie algebra on " << o.cfg.generators << " generators, depth " << o.cfg.depth
       << "\n";
    os << "dims: " << join_dims(a.dims()) << "\n";
    os << "total: " << a.total_dim() << "\n";
    write_output(o.cfg.output, os.str());
  }
  return 0;
}

int run_universal(CommonOpts& o) {
  auto u = build_universal_cr(o.cfg.n, o.cfg.mu, o.cfg.basis_cap);
  if (o.format == "machine") {
    write_output(o.cfg.output, render_machine(machine_universal_report(*u)));
  } else {
    std::ostringstream os;
    os << "universal CR algebra: n=" << o.cfg.n << " mu=" << o.cfg.mu << "\n";
    os << "dims (complex): " << join_dims(u->dims()) << "\n";
    for (int k = 1; k <= u->depth(); ++k) {
      os << "degree -" << k << " blocks:";
      for (const auto& [bt, idxs] : u->type_blocks(k)) {
        os << " (";
        for (int i = 0; i < u->n(); ++i) os << (i ? "," : "") << bt[i];
        os << "|";
        for (int i = 0; i < u->n(); ++i) os << (i ? "," : "") << bt[u->n() + i];
        os << "):" << idxs.size();
      }
      os << "\n";
    }
    write_output(o.cfg.output, os.str());
  }
  return 0;
}

CRSymbol build_from_config(const RunConfig& cfg) {
  auto u = build_universal_cr(cfg.n, cfg.mu, cfg.basis_cap);
  std::vector<Element> gens;
  for (const auto& text : cfg.ideal) gens.push_back(parse_in_universal(text, *u));
  return build_symbol(u, gens);
}

int run_symbol(CommonOpts& o) {
  CRSymbol s = build_from_config(o.cfg);
  RealForm rf = real_form(s);
  if (o.format == "machine") {
    write_output(o.cfg.output, render_machine(machine_symbol_report(s, rf.dims)));
  } else {
    std::ostringstream os;
    os << "CR symbol: n=" << o.cfg.n << " mu=" << o.cfg.mu << " (lowest ideal dim "
       << s.lowest_ideal_basis().size() << ")\n";
    os << "dims (complex): " << join_dims(s.dims()) << "\n";
    os << "real form dims: " << join_dims(rf.dims) << "\n";
    os << "fundamental: " << (check_fundamental(s) ? "yes" : "no") << "\n";
    write_output(o.cfg.output, os.str());
  }
  return 0;
}

int run_prolong(CommonOpts& o) {
  CRSymbol s = build_from_config(o.cfg);
  ProlongationResult pr = prolong_until_zero(s, o.cfg.max_level);
  if (o.format == "machine") {
    write_output(o.cfg.output, render_machine(machine_prolong_report(o.cfg.n, o.cfg.mu, pr)));
  } else {
    std::ostringstream os;
    os << "prolongation of n=" << o.cfg.n << " mu=" << o.cfg.mu << "\n";
    os << "complex dims: " << join_dims(pr.complex_dims) << "\n";
    os << "real dims:    " << join_dims(pr.real_dims) << "\n";
    if (pr.stabilized_at)
      os << "stabilized at level " << *pr.stabilized_at
         << (pr.recheck_passed ? " (recheck passed)" : " (RECHECK FAILED)") << "\n";
    else
      os << "not stabilized within max_level=" << o.cfg.max_level << "\n";
    for (size_t i = 0; i < pr.level_seconds.size(); ++i)
      os << "level " << i << ": " << pr.level_seconds[i] << "s\n";
    write_output(o.cfg.output, os.str());
  }
  return 0;
}

int run_verify(CommonOpts& o) {
  VerificationReport rep = verify_main_theorem(o.cfg.n, o.cfg.mu, o.cfg.ideal, o.cfg.max_level,
                                               o.cfg.basis_cap, o.cfg.jobs, o.cfg.emit_bases);
  if (o.format == "machine")
    write_output(o.cfg.output, render_machine(machine_verify_report(rep)));
  else
    write_output(o.cfg.output, human_verify_report(rep));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation of Tanaka prolongations for totally nondegenerate CR symbols"};
  app.require_subcommand(1);

  CommonOpts hall_o, uni_o, sym_o, pro_o, ver_o;

  CLI::App* hall = app.add_subcommand("hall", "Hall basis of a free nilpotent Lie algebra");
  hall_o.add_flags(hall, false);
  hall->add_option("--generators", hall_o.cfg.generators, "number of generators");
  hall->add_option("--depth", hall_o.cfg.depth, "nilpotency depth");

  CLI::App* uni = app.add_subcommand("universal", "universal CR algebra dims and blocks");
  uni_o.add_flags(uni);

  CLI::App* sym = app.add_subcommand("symbol", "build a CR symbol and its real form");
  sym_o.add_flags(sym);

  CLI::App* pro = app.add_subcommand("prolong", "compute the prolongation levels");
  pro_o.add_flags(pro);
  pro->add_option("--max-level", pro_o.cfg.max_level, "largest level to attempt");

  CLI::App* ver = app.add_subcommand("verify", "full verification battery");
  ver_o.add_flags(ver);
  ver->add_option("--max-level", ver_o.cfg.max_level, "largest level to attempt");
  ver->add_option("--jobs", ver_o.cfg.jobs, "worker threads for the check sweeps");
  ver->add_flag("--emit-bases", ver_o.cfg.emit_bases, "include real bases in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hall->parsed()) {
      hall_o.load(hall);
      return run_hall(hall_o);
    }
    if (uni->parsed()) {
      uni_o.load(uni);
      return run_universal(uni_o);
    }
    if (sym->parsed()) {
      sym_o.load(sym);
      return run_symbol(sym_o);
    }
    if (pro->parsed()) {
      pro_o.load(pro);
      return run_prolong(pro_o);
    }
    if (ver->parsed()) {
      ver_o.load(ver);
      return run_verify(ver_o);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
