// Command line surface: weight inspection, multiplicities, superdimensions,
// move expansions, reduction traces, covariant checks and the verification
// suites. Exit codes: 0 ok, 1 domain error, 2 parse error, 3 verification
// failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superdim/json_io.hpp"
#include "superdim/render.hpp"
#include "superdim/textio.hpp"
#include "superdim/verify.hpp"

namespace {

using namespace superdim;

struct DiagramArgs {
  std::string weight;   // "m|n: ... ; ..."
  std::string vees;     // original-line vee positions
  std::string crosses;  // original-line cross positions
};

void add_diagram_args(CLI::App* cmd, DiagramArgs& args) {
  cmd->add_option("weight", args.weight, "weight, e.g. \"2|2: 1,0 ; 0,-1\"");
  cmd->add_option("--vees", args.vees, "vee positions, e.g. \"{0,2,4}\"");
  cmd->add_option("--crosses", args.crosses, "cross positions, e.g. \"{1}\"");
}

CompactedDiagram diagram_from(const DiagramArgs& args) {
  if (!args.weight.empty()) return compact(parse_weight(args.weight));
  if (args.vees.empty())
    fail(Errc::ParseError, "give a weight or --vees");
  PosSet vees = parse_pos_set(args.vees);
  PosSet crosses = args.crosses.empty() ? PosSet{} : parse_pos_set(args.crosses);
  if (!set_intersection(vees, crosses).empty())
    fail(Errc::ParseError, "--vees and --crosses overlap");
  CompactedDiagram c;
  c.removed = std::move(crosses);
  for (Pos v : vees) c.vees.push_back(compact_position(c.removed, v));
  return c;
}

std::string labeling_window_text(const SuperWeight& w) {
  Labeling lab = labeling(w);
  PosSet support = set_union(set_union(lab.crosses, lab.circles), lab.vees);
  Pos lo = support.front() - 2, hi = support.back() + 2 * w.n;
  std::string out = "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]:";
  for (Pos p = lo; p <= hi; ++p) {
    char g = '^';
    if (set_contains(lab.crosses, p)) g = 'x';
    if (set_contains(lab.circles, p)) g = 'o';
    if (set_contains(lab.vees, p)) g = 'v';
    out += ' ';
    out += g;
  }
  return out;
}

int cmd_info(const std::string& weight_text, const std::string& format) {
  SuperWeight w = parse_weight(weight_text);
  if (format == "json") {
    std::cout << labeling_json(w).dump() << "\n";
    return 0;
  }
  Labeling lab = labeling(w);
  Parity par = parity(w);
  std::cout << "weight: " << format_weight(w) << "\n"
            << "labeling " << labeling_window_text(w) << "\n"
            << "vees: " << format_pos_set(lab.vees)
            << "  crosses: " << format_pos_set(lab.crosses)
            << "  circles: " << format_pos_set(lab.circles) << "\n"
            << "atypicality: " << lab.vees.size() << " of n=" << w.n
            << (static_cast<int>(lab.vees.size()) == w.n ? " (maximal)" : "") << "\n"
            << "parity: p=" << par.p << ", mod2=" << par.mod2 << "\n"
            << "kostant: " << (is_kostant(w) ? "true" : "false") << "\n";
  return 0;
}

int cmd_sdim(const std::string& weight_text, const std::string& format) {
  SuperWeight w = parse_weight(weight_text);
  SdimResult r = sdim(w);
  if (format == "json") {
    std::cout << sdim_json(r).dump() << "\n";
    return 0;
  }
  std::cout << "maximal_atypical: " << (r.maximal_atypical ? "true" : "false") << "\n"
            << "p: " << r.p << " (mod 2 = " << r.p_mod2 << ")\n"
            << "m: " << r.multiplicity.str() << "\n"
            << "rho: ";
  std::cout << "(";
  for (size_t i = 0; i < r.rho.size(); ++i)
    std::cout << (i ? "," : "") << r.rho[i];
  std::cout << ") det^" << r.det_twist << "\n"
            << "dim_rho: " << r.dim_rho.str() << "\n"
            << "sdim: " << r.sdim.str() << "\n";
  return 0;
}

int cmd_mult(const DiagramArgs& args, const std::string& format) {
  CompactedDiagram c = diagram_from(args);
  Int m = m_closed(c.vees);
  if (format == "json") {
    Json out;
    out["vees"] = c.vees;
    out["m"] = m.str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << m.str() << "\n";
  }
  return 0;
}

int cmd_kostant(const std::string& weight_text, const std::string& format) {
  SuperWeight w = parse_weight(weight_text);
  bool k = is_kostant(w);
  if (format == "json") {
    Json out;
    out["kostant"] = k;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (k ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_moves(const DiagramArgs& args, std::optional<Pos> at, const std::string& format) {
  CompactedDiagram c = diagram_from(args);
  CupDiagram d = build(c);
  if (!at) {
    std::vector<MoveSite> sites = move_sites(d);
    if (format == "json") {
      Json out;
      out["vees"] = d.vees;
      Json list = Json::array();
      for (const MoveSite& s : sites) {
        Json entry;
        entry["i"] = s.i;
        entry["kind"] = site_kind_name(s.kind);
        entry["interval"] = {s.a, s.b};
        list.push_back(std::move(entry));
      }
      out["sites"] = list;
      std::cout << out.dump() << "\n";
    } else {
      for (const MoveSite& s : sites)
        std::cout << "site i=" << s.i << " " << site_kind_name(s.kind) << " I=["
                  << s.a << "," << s.b << "]\n";
    }
    return 0;
  }
  MoveSite site = classify_site(d, *at);
  MoveExpansion e = expand(site);
  if (format == "json") {
    std::cout << expansion_json(e).dump() << "\n";
    return 0;
  }
  std::cout << "center " << format_pos_set(d.vees) << " site " << site.i << " "
            << site_kind_name(site.kind) << " I=[" << site.a << "," << site.b << "]\n";
  for (const MoveConstituent& mc : e.middle)
    std::cout << "  " << move_kind_name(mc.move) << "\t" << format_pos_set(mc.vees)
              << "\n";
  return 0;
}

int cmd_reduce(const DiagramArgs& args, bool trace, const std::string& format) {
  CompactedDiagram c = diagram_from(args);
  if (trace) {
    ReductionTrace t = reduce_trace(c.vees);
    for (const TraceStep& step : t.steps)
      std::cout << trace_step_json(step).dump() << "\n";
    return 0;
  }
  ReductionTrace t = reduce_trace(c.vees);
  if (format == "json") {
    Json out;
    out["vees"] = c.vees;
    out["m"] = t.multiplicity.str();
    Json leaves = Json::array();
    for (const auto& [leaf, coeff] : t.leaves) {
      Json entry;
      entry["vees"] = leaf;
      entry["coefficient"] = coeff.str();
      leaves.push_back(std::move(entry));
    }
    out["leaves"] = leaves;
    out["steps"] = t.steps.size();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "m = " << t.multiplicity.str() << "\n";
    for (const auto& [leaf, coeff] : t.leaves)
      std::cout << "leaf " << format_pos_set(leaf) << " x " << coeff.str() << "\n";
    std::cout << "steps: " << t.steps.size() << "\n";
  }
  return 0;
}

int cmd_covariant(const std::string& partition_text, int m, int n,
                  const std::string& format) {
  Partition p = parse_partition(partition_text);
  bool hook = hook_condition(p, m, n);
  Json out;
  out["partition"] = p.parts;
  out["m"] = m;
  out["n"] = n;
  out["hook"] = hook;
  if (!hook) {
    out["max_atypical"] = nullptr;
    out["highest_weight"] = nullptr;
    out["sdim"] = "0";
    out["sdim_lr"] = covariant_sdim_oracle(p, m, n).str();
  } else {
    SuperWeight w = to_highest_weight(p, m, n);
    out["max_atypical"] = is_covariant_max_atypical(p, m, n);
    out["highest_weight"] = format_weight(w);
    out["sdim"] = sdim(w).sdim.str();
    out["sdim_lr"] = covariant_sdim_oracle(p, m, n).str();
  }
  if (format == "json") {
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "partition: " << format_partition(p) << " on Gl(" << m << "|" << n
            << ")\n"
            << "hook: " << (hook ? "true" : "false") << "\n";
  if (hook)
    std::cout << "max_atypical: " << (out["max_atypical"].get<bool>() ? "true" : "false")
              << "\n"
              << "highest_weight: " << out["highest_weight"].get<std::string>() << "\n";
  std::cout << "sdim: " << out["sdim"].get<std::string>() << "\n"
            << "sdim_lr: " << out["sdim_lr"].get<std::string>() << "\n";
  return 0;
}

int cmd_extdim(const std::string& block_text, int jmax, const std::string& format) {
  BlockId b = parse_block(block_text);
  std::vector<ExtProfile> profile = ext_self_dims(b, jmax);
  if (format == "json") {
    Json out;
    out["block"] = block_text;
    out["profiles"] = ext_profiles_json(profile);
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const ExtProfile& e : profile)
    std::cout << "j=" << e.degree << ": " << e.dimension << "\n";
  return 0;
}

int cmd_render(const DiagramArgs& args, const std::string& format) {
  CompactedDiagram c = diagram_from(args);
  std::cout << (format == "svg" ? render_svg(c) : render_ascii(c));
  return 0;
}

struct VerifyBounds {
  int n_max = 0;          // 0 = suite default
  int window = 0;
  int samples = -1;
  long long bound = 0;
  int degree_max = 0;
  int jmax = 0;
};

int cmd_verify(const std::string& suite, const VerifyBounds& vb,
               const std::string& format) {
  std::vector<VerifyReport> reports;
  auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
  if (want("relations"))
    reports.push_back(verify_relations(vb.n_max ? vb.n_max : 3,
                                       vb.window ? vb.window : 8));
  if (want("oracle-vs-closed"))
    reports.push_back(verify_oracle_vs_closed(vb.n_max ? vb.n_max : 4,
                                              vb.window ? vb.window : 10,
                                              vb.samples >= 0 ? vb.samples : 25));
  if (want("identities"))
    reports.push_back(verify_identities_suite(vb.bound ? vb.bound : 20));
  if (want("covariant"))
    reports.push_back(verify_covariant(vb.degree_max ? vb.degree_max : 6));
  if (want("hilbert"))
    reports.push_back(verify_hilbert(vb.n_max ? vb.n_max : 3, vb.jmax ? vb.jmax : 10));
  if (reports.empty())
    fail(Errc::ParseError,
         "unknown suite '" + suite +
             "' (relations, oracle-vs-closed, identities, covariant, hilbert, all)");

  bool all_pass = true;
  if (format == "json") {
    Json out = Json::array();
    for (const VerifyReport& r : reports) {
      Json entry;
      entry["suite"] = r.suite;
      entry["pass"] = r.pass;
      entry["cases"] = r.cases;
      entry["first_counterexample"] = r.first_counterexample;
      out.push_back(std::move(entry));
      all_pass &= r.pass;
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const VerifyReport& r : reports) {
      std::cout << "suite " << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                << r.cases << " cases)";
      if (!r.pass) std::cout << " first counterexample: " << r.first_counterexample;
      std::cout << "\n";
      all_pass &= r.pass;
    }
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Gl(m|n) weight combinatorics"};
  app.require_subcommand(1);

  std::string format = "text";

  std::string info_weight;
  auto* info = app.add_subcommand("info", "labeling, block, atypicality, parity");
  info->add_option("weight", info_weight)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string sdim_weight;
  auto* sdim_cmd = app.add_subcommand("sdim", "signed superdimension");
  sdim_cmd->add_option("weight", sdim_weight)->required();
  sdim_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  DiagramArgs mult_args;
  auto* mult = app.add_subcommand("mult", "multiplicity (closed formula)");
  add_diagram_args(mult, mult_args);
  mult->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string kostant_weight;
  auto* kostant = app.add_subcommand("kostant", "Kostant weight test");
  kostant->add_option("weight", kostant_weight)->required();
  kostant->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  DiagramArgs moves_args;
  Pos moves_at = 0;
  auto* moves = app.add_subcommand("moves", "move sites and expansions");
  add_diagram_args(moves, moves_args);
  auto* at_opt = moves->add_option("--at", moves_at, "expand the site at this position");
  moves->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  DiagramArgs reduce_args;
  bool reduce_do_trace = false;
  auto* reduce = app.add_subcommand("reduce", "multiplicity via the reduction oracle");
  add_diagram_args(reduce, reduce_args);
  reduce->add_flag("--trace", reduce_do_trace, "stream one JSON line per relation");
  reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string cov_partition;
  int cov_m = 0, cov_n = 0;
  auto* covariant = app.add_subcommand("covariant", "covariant representation checks");
  covariant->add_option("partition", cov_partition)->required();
  covariant->add_option("m", cov_m)->required();
  covariant->add_option("n", cov_n)->required();
  covariant->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string extdim_block;
  int extdim_jmax = 10;
  auto* extdim = app.add_subcommand("extdim", "ground state self-Ext dimensions");
  extdim->add_option("--block", extdim_block, "block, e.g. \"3|1: 1,-1\"")->required();
  extdim->add_option("--jmax", extdim_jmax);
  extdim->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  DiagramArgs render_args;
  std::string render_format = "ascii";
  auto* render = app.add_subcommand("render", "draw the cup diagram");
  add_diagram_args(render, render_args);
  render->add_option("--format", render_format)->check(CLI::IsMember({"ascii", "svg"}));

  std::string verify_suite;
  VerifyBounds vb;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite)->required();
  verify->add_option("--n-max", vb.n_max)->check(CLI::Range(0, 6));
  verify->add_option("--window", vb.window)->check(CLI::Range(0, 16));
  verify->add_option("--samples", vb.samples)->check(CLI::Range(-1, 10000));
  verify->add_option("--bound", vb.bound)->check(CLI::Range(0, 400));
  verify->add_option("--degree-max", vb.degree_max)->check(CLI::Range(0, 12));
  verify->add_option("--jmax", vb.jmax)->check(CLI::Range(0, 64));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(info_weight, format);
    if (*sdim_cmd) return cmd_sdim(sdim_weight, format);
    if (*mult) return cmd_mult(mult_args, format);
    if (*kostant) return cmd_kostant(kostant_weight, format);
    if (*moves)
      return cmd_moves(moves_args,
                       at_opt->count() ? std::optional<Pos>(moves_at) : std::nullopt,
                       format);
    if (*reduce) return cmd_reduce(reduce_args, reduce_do_trace, format);
    if (*covariant) return cmd_covariant(cov_partition, cov_m, cov_n, format);
    if (*extdim) return cmd_extdim(extdim_block, extdim_jmax, format);
    if (*render) return cmd_render(render_args, render_format);
    if (*verify) return cmd_verify(verify_suite, vb, format);
  } catch (const superdim::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
