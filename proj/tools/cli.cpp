#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include <CLI11.hpp>

#include "mcg/canon.hpp"
#include "mcg/export.hpp"
#include "mcg/moves.hpp"
#include "mcg/pipeline.hpp"

namespace mcg {

namespace {

struct CommonOptions {
  int genus = 0;
  int punctures = 0;
  std::string cache_dir = ".mcgcache";
  double budget_secs = 0.0;
  unsigned seed = 0;
  bool simplify = false;
  std::string format = "text";
  std::string out_file;

  // MCG_CACHE_DIR overrides the flag when set.
  std::string effective_cache_dir() const {
    if (const char *env = std::getenv("MCG_CACHE_DIR")) return env;
    return cache_dir;
  }

  PipelineOptions pipeline(const Budget *budget) const {
    PipelineOptions o;
    o.genus = genus;
    o.punctures = punctures;
    o.seed = seed;
    o.simplify = simplify;
    o.cache_dir = effective_cache_dir();
    o.budget = budget;
    return o;
  }
};

void add_common(CLI::App *cmd, CommonOptions &opt, bool with_presentation_flags) {
  cmd->add_option("-g,--genus", opt.genus, "surface genus")->required();
  cmd->add_option("-p,--punctures", opt.punctures, "number of punctures")->required();
  cmd->add_option("--cache-dir", opt.cache_dir, "cache directory (default .mcgcache)");
  cmd->add_option("--budget-secs", opt.budget_secs, "wall-clock budget; 0 = unlimited");
  if (with_presentation_flags) {
    cmd->add_option("--seed", opt.seed, "spanning-tree tie-break seed; 0 = canonical order");
    cmd->add_flag("--simplify", opt.simplify, "Tietze-simplify the presentation");
    cmd->add_option("--format", opt.format, "output format: text, json, gap, magma")
        ->check(CLI::IsMember({"text", "json", "gap", "magma"}));
    cmd->add_option("-o,--out", opt.out_file, "output file (defaults to a name derived from g and p)");
  }
}

std::string default_extension(const std::string &format) {
  if (format == "json") return "json";
  if (format == "gap") return "g";
  if (format == "magma") return "magma";
  return "txt";
}

int cmd_present(const CommonOptions &opt, std::ostream &out) {
  Budget budget;
  if (opt.budget_secs > 0) budget = Budget::seconds(opt.budget_secs);
  PipelineResult run = run_pipeline(opt.pipeline(opt.budget_secs > 0 ? &budget : nullptr));

  std::string artifact;
  if (opt.format == "json")
    artifact = presentation_json(run);
  else if (opt.format == "gap")
    artifact = presentation_gap(run);
  else if (opt.format == "magma")
    artifact = presentation_magma(run);
  else
    artifact = presentation_text(run);

  std::string path = opt.out_file;
  if (path.empty())
    path = "presentation-g" + std::to_string(opt.genus) + "-p" + std::to_string(opt.punctures) + "." +
           default_extension(opt.format);
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << artifact;
  file.close();

  out << run_summary(run);
  out << "wrote " << path << "\n";
  return 0;
}

int cmd_list_l(const CommonOptions &opt, std::ostream &out) {
  Budget budget;
  if (opt.budget_secs > 0) budget = Budget::seconds(opt.budget_secs);
  EnumerationResult result = list_L_cached(opt.genus, opt.punctures, opt.effective_cache_dir(),
                                           opt.budget_secs > 0 ? &budget : nullptr);
  if (!result.note.empty()) out << "# " << result.note << "\n";
  for (const auto &g : result.graphs) out << encode(g) << "\n";
  return 0;
}

int cmd_complex(const CommonOptions &opt, std::ostream &out) {
  Budget budget;
  if (opt.budget_secs > 0) budget = Budget::seconds(opt.budget_secs);
  PipelineResult run = run_pipeline(opt.pipeline(opt.budget_secs > 0 ? &budget : nullptr));
  std::string path = opt.out_file;
  if (path.empty())
    path = "complex-g" + std::to_string(opt.genus) + "-p" + std::to_string(opt.punctures) + ".json";
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << complex_json(run);
  file.close();
  out << run.complex.vertices.size() << " vertices, " << run.complex.edges.size() << " edge classes, "
      << run.complex.two_cells.size() << " 2-cells\n";
  out << "wrote " << path << "\n";
  return 0;
}

int cmd_check(const CommonOptions &opt, std::ostream &out) {
  Budget budget;
  if (opt.budget_secs > 0) budget = Budget::seconds(opt.budget_secs);
  const Budget *bp = opt.budget_secs > 0 ? &budget : nullptr;

  bool all_ok = true;
  auto row = [&](const std::string &name, bool ok, const std::string &note = "") {
    all_ok = all_ok && ok;
    out << (ok ? "  ok    " : "  FAIL  ") << name;
    if (!note.empty()) out << " (" << note << ")";
    out << "\n";
  };

  out << "checks for genus " << opt.genus << ", punctures " << opt.punctures << "\n";

  CacheOutcome cache;
  EnumerationResult L = list_L_cached(opt.genus, opt.punctures, opt.effective_cache_dir(), bp, &cache);
  {
    std::string note = cache.corrupt ? "corrupt entry detected and rebuilt" : (cache.hit ? "hit" : "cold");
    row("cache integrity", true, note);
  }

  {
    bool ok = true;
    for (const auto &g : L.graphs) {
      if (!validate(g).ok()) ok = false;
      GraphInvariants inv = invariants(g);
      if (inv.degree != 2 || inv.p != opt.punctures || inv.genus != opt.genus) ok = false;
      if (canonical_form_full(g).representative != g) ok = false;
    }
    for (std::size_t i = 1; i < L.graphs.size(); ++i)
      if (!(L.graphs[i - 1] < L.graphs[i])) ok = false;
    row("list elements valid, canonical, sorted", ok, std::to_string(L.graphs.size()) + " elements");
  }

  PipelineOptions po = opt.pipeline(bp);
  PipelineResult run = run_pipeline(po);

  {
    bool ok = true;
    for (const auto &tree : run.complex.trees)
      for (const auto &node : tree.nodes) {
        if (!validate(node).ok()) ok = false;
        GraphInvariants inv = invariants(node); // throws on parity/degree defects
        if (inv.p != opt.punctures || inv.genus != opt.genus) ok = false;
      }
    row("tree nodes valid with preserved invariants", ok);
  }

  {
    bool ok = true;
    try {
      validate_two_cells(run.complex);
    } catch (const std::logic_error &) {
      ok = false;
    }
    ok = ok && run.tree.size() + (run.complex.vertices.empty() ? 0 : 1) == run.complex.vertices.size();
    row("2-cell closure and spanning-tree size", ok);
  }

  {
    auto strata = enumerate_degree_at_most(opt.genus, opt.punctures, 2, bp);
    std::set<OrderedGraph> sset(strata.begin(), strata.end());
    bool subset = true;
    for (const auto &v : run.complex.vertices)
      if (!sset.count(v)) subset = false;
    bool equal = L.graphs.empty() || sset.size() == run.complex.vertices.size();
    row("complex vertices match the degree-2 strata", subset && equal,
        std::to_string(run.complex.vertices.size()) + " of " + std::to_string(strata.size()));
  }

  if (2 * opt.genus + opt.punctures + 2 <= 6) {
    CrossCheckVerdict v = cross_check_by_splitting(opt.genus, opt.punctures);
    row("split-based cross enumeration", v.equal, v.detail);
  }

  {
    bool ok = true;
    Abelianization reference = run.ab;
    for (unsigned seed = 1; seed <= 4; ++seed) {
      PipelineOptions seeded = po;
      seeded.seed = seed;
      if (!(run_pipeline(seeded).ab == reference)) ok = false;
    }
    row("abelianization invariant across 5 spanning-tree seeds", ok);
  }

  {
    Presentation simplified = tietze_simplify(run.raw.presentation);
    bool ok = abelianization(simplified) == abelianization(run.raw.presentation);
    ok = ok && tietze_simplify(simplified) == simplified;
    FiniteGroup s3 = symmetric_group(3);
    ok = ok && count_homs(simplified, s3) == count_homs(run.raw.presentation, s3);
    row("simplification preserves abelianization and hom counts", ok);
  }

  return all_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"finite presentations of mapping-class groups of surfaces with one boundary component"};
  app.require_subcommand(1);

  CommonOptions present_opt, list_opt, complex_opt, check_opt;
  CLI::App *present = app.add_subcommand("present", "compute and export a presentation");
  add_common(present, present_opt, true);
  CLI::App *list = app.add_subcommand("list-l", "print the canonical degree-2 three-vertex graphs");
  add_common(list, list_opt, false);
  CLI::App *complex_cmd = app.add_subcommand("complex", "write the quotient complex as JSON");
  add_common(complex_cmd, complex_opt, true);
  CLI::App *check = app.add_subcommand("check", "run the invariant suite and cross-oracles");
  add_common(check, check_opt, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto validate_gp = [&](const CommonOptions &o) {
      if (o.genus < 0 || o.punctures < 0 || (o.genus == 0 && o.punctures == 0))
        throw std::invalid_argument("need g >= 0, p >= 0 and (g, p) != (0, 0)");
    };
    if (present->parsed()) {
      validate_gp(present_opt);
      return cmd_present(present_opt, out);
    }
    if (list->parsed()) {
      validate_gp(list_opt);
      return cmd_list_l(list_opt, out);
    }
    if (complex_cmd->parsed()) {
      validate_gp(complex_opt);
      return cmd_complex(complex_opt, out);
    }
    if (check->parsed()) {
      validate_gp(check_opt);
      return cmd_check(check_opt, out);
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace mcg
