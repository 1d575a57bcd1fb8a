// Command-line surface: parse knot notations, compute classical / twisted /
// L2 torsions, search representations, run the check suites over the bundled
// table, and manage the invariant cache.
//
// Exit codes: 0 success, 1 theorem-check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "alextor/braid.hpp"
#include "alextor/cache.hpp"
#include "alextor/check_suite.hpp"
#include "alextor/knot_table.hpp"
#include "alextor/max_product.hpp"
#include "alextor/numeric_torsion.hpp"
#include "alextor/pd.hpp"
#include "alextor/rep_search.hpp"
#include "alextor/torsion.hpp"

#ifndef ALEXTOR_DATA_DIR
#define ALEXTOR_DATA_DIR "data"
#endif

using namespace alextor;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  bool serial = false;
  std::string cache_file;
  std::string table_file = std::string(ALEXTOR_DATA_DIR) + "/knot_table.json";
};

std::string read_file_or_literal(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

const KnotTable& table(GlobalOpts& g, std::optional<KnotTable>& slot) {
  if (!slot) slot = load_table(g.table_file);
  return *slot;
}

std::string degree_str(const Degree& d) { return d.str(); }

int run_parse(const std::string& input, const std::string& format) {
  std::string text = read_file_or_literal(input);
  GroupPresentation p;
  if (format == "braid")
    p = braid_presentation(parse_braid(text));
  else if (format == "pd")
    p = pd_to_wirtinger(parse_pd(text));
  else if (format == "presentation")
    p = presentation_from_json(text);
  else
    throw std::invalid_argument("--format must be braid, pd, or presentation");
  std::cout << presentation_to_json(p) << "\n";
  return 0;
}

int run_alexander(GlobalOpts& g, std::optional<KnotTable>& tbl, const std::string& knot) {
  ResolvedKnot rk = resolve_knot(knot, &table(g, tbl));
  InvariantCache cache(g.cache_file);
  std::string key = InvariantCache::key(rk.name, "alexander", "");
  std::string line = cache.fetch(key, [&] {
    ZPoly delta = alexander_polynomial(rk.presentation);
    ZTorsion tau = normalize_units(alexander_torsion(rk.presentation));
    std::ostringstream os;
    os << "Delta = " << delta.str() << "; tau = " << tau.str() << "; deg "
       << degree_str(tau.degree()) << "; " << (tau.is_monic() ? "monic" : "not monic");
    return os.str();
  });
  cache.save();
  std::cout << line << "\n";
  return 0;
}

int run_twisted(GlobalOpts& g, std::optional<KnotTable>& tbl, const std::string& knot,
                const std::string& rep_file, bool numeric, int samples) {
  ResolvedKnot rk = resolve_knot(knot, &table(g, tbl));
  std::ifstream in(rep_file);
  if (!in) throw std::invalid_argument("cannot open representation file '" + rep_file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Representation alpha = representation_from_json(ss.str(), rk.presentation);

  if (numeric || alpha.holds<Cplx>()) {
    Representation c = alpha.holds<Cplx>() ? alpha : alpha.to_complex();
    NumericTorsionReport r = twisted_torsion_numeric(rk.presentation, c, samples, !g.serial);
    std::cout << r.str() << "\n";
    return 0;
  }
  if (alpha.holds<BigRat>()) {
    QTorsion t = normalize_units(twisted_torsion<BigRat>(rk.presentation, alpha));
    std::cout << "tau(K, alpha) = " << t.str() << "; deg " << degree_str(t.degree()) << "\n";
  } else {
    FpTorsion t = normalize_units(twisted_torsion<Fp>(rk.presentation, alpha));
    std::cout << "tau(K, alpha) = " << t.str() << "; deg " << degree_str(t.degree()) << "\n";
  }
  return 0;
}

int run_repsearch(GlobalOpts& g, std::optional<KnotTable>& tbl, const std::string& knot,
                  long prime, int budget, const std::string& outdir) {
  ResolvedKnot rk = resolve_knot(knot, &table(g, tbl));
  RepSearchOptions opt;
  opt.budget = budget;
  opt.parallel = !g.serial;
  auto reps = rep_search_sl2_fp(rk.presentation, prime, opt);
  std::cout << reps.size() << " nonabelian SL(2,F" << prime << ") representation"
            << (reps.size() == 1 ? "" : "s") << "\n";
  for (size_t i = 0; i < reps.size(); ++i) {
    std::string text = representation_to_json(reps[i], rk.presentation.generators);
    if (outdir.empty()) {
      std::cout << text << "\n";
    } else {
      std::string path = outdir + "/" + rk.name + "_F" + std::to_string(prime) + "_" +
                         std::to_string(i) + ".json";
      std::ofstream out(path);
      out << text << "\n";
      std::cout << "wrote " << path << "\n";
    }
  }
  return 0;
}

int run_l2(GlobalOpts& g, std::optional<KnotTable>& tbl, const std::string& knot,
           const std::string& homomorphism, const std::string& plot, double tmax, int points) {
  if (homomorphism != "abelianization")
    throw std::invalid_argument("only the abelianization homomorphism is computable here");
  ResolvedKnot rk = resolve_knot(knot, &table(g, tbl));
  InvariantCache cache(g.cache_file);
  ZPoly delta = alexander_polynomial(rk.presentation);
  MaxProduct f = l2_from_alexander(delta);
  std::string key = InvariantCache::key(rk.name, "l2-abelianization", "");
  std::string line = cache.fetch(key, [&] { return f.str(); });
  cache.save();
  std::cout << line << "\n";
  std::cout << "(abelianization torsion; the full torsion needs the whole group and is "
               "not computed here)\n";
  if (!plot.empty()) {
    if (tmax <= 1.0) throw std::invalid_argument("--tmax must be > 1");
    if (points < 2) throw std::invalid_argument("--points must be >= 2");
    std::ofstream out(plot);
    if (!out) throw std::invalid_argument("cannot open plot file '" + plot + "'");
    for (int i = 0; i < points; ++i) {
      double t = (1.0 / tmax) * std::pow(tmax * tmax, double(i) / (points - 1));
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g\t%.12g\n", t, f.eval(t));
      out << buf;
    }
    std::cout << "wrote " << points << " samples to " << plot << "\n";
  }
  return 0;
}

int run_check(GlobalOpts& g, const std::string& table_path, const std::string& suite) {
  KnotTable t = load_table(table_path);
  InvariantCache cache(g.cache_file);
  CheckReport report =
      run_check_suite(t, suite_from_name(suite), g.seed, !g.serial,
                      g.cache_file.empty() ? nullptr : &cache);
  cache.save();
  std::cout << report.render();
  return report.theorem_failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-type knot invariants: classical, twisted, and L2 torsion"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for randomized checks (default 0)");
  app.add_flag("--serial", g.serial, "disable OpenMP parallel kernels");
  app.add_option("--cache", g.cache_file, "invariant cache file");
  app.add_option("--table", g.table_file, "knot table (default: bundled)");

  std::optional<KnotTable> tbl;

  auto* parse_cmd = app.add_subcommand("parse", "validate a knot notation");
  std::string parse_input, parse_format = "braid";
  parse_cmd->add_option("input", parse_input, "file or literal")->required();
  parse_cmd->add_option("--format", parse_format, "braid|pd|presentation");

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial and torsion");
  std::string alex_knot;
  alex_cmd->add_option("knot", alex_knot, "knot name or notation")->required();

  auto* tw_cmd = app.add_subcommand("twisted", "twisted torsion for a representation");
  std::string tw_knot, tw_rep;
  bool tw_numeric = false;
  int tw_samples = 0;
  tw_cmd->add_option("knot", tw_knot)->required();
  tw_cmd->add_option("--rep", tw_rep, "representation JSON file")->required();
  tw_cmd->add_flag("--numeric", tw_numeric, "numeric degree/monicness estimate");
  tw_cmd->add_option("--samples", tw_samples, "sample count per circle");

  auto* rs_cmd = app.add_subcommand("repsearch", "search SL(2,F_p) representations");
  std::string rs_knot, rs_outdir;
  long rs_prime = 5;
  int rs_budget = 50;
  rs_cmd->add_option("knot", rs_knot)->required();
  rs_cmd->add_option("--prime", rs_prime, "prime p in 2..13")->required();
  rs_cmd->add_option("--budget", rs_budget, "stop after this many representations");
  rs_cmd->add_option("--outdir", rs_outdir, "write representation files here");

  auto* l2_cmd = app.add_subcommand("l2", "L2 torsion (abelianization closed form)");
  std::string l2_knot, l2_hom = "abelianization", l2_plot;
  double l2_tmax = 8.0;
  int l2_points = 129;
  l2_cmd->add_option("knot", l2_knot)->required();
  l2_cmd->add_option("--homomorphism", l2_hom, "abelianization (default)");
  l2_cmd->add_option("--plot", l2_plot, "write samples (t, f(t)) to this TSV file");
  l2_cmd->add_option("--tmax", l2_tmax, "plot range [1/tmax, tmax]");
  l2_cmd->add_option("--points", l2_points, "plot sample count");

  auto* check_cmd = app.add_subcommand("check", "run a verification suite over a table");
  std::string check_table, check_suite_name = "all";
  check_cmd->add_option("table", check_table, "knot table JSON")->required();
  check_cmd->add_option("--suite", check_suite_name,
                        "all|symmetry|genus|fibered|l2|sum|conjectures");

  auto* cache_cmd = app.add_subcommand("cache", "cache management");
  std::string cache_action;
  cache_cmd->add_option("action", cache_action, "show|clear")->required();

  CLI11_PARSE(app, argc, argv);

  if (g.serial) omp_set_num_threads(1);

  try {
    if (*parse_cmd) return run_parse(parse_input, parse_format);
    if (*alex_cmd) return run_alexander(g, tbl, alex_knot);
    if (*tw_cmd) return run_twisted(g, tbl, tw_knot, tw_rep, tw_numeric, tw_samples);
    if (*rs_cmd) return run_repsearch(g, tbl, rs_knot, rs_prime, rs_budget, rs_outdir);
    if (*l2_cmd) return run_l2(g, tbl, l2_knot, l2_hom, l2_plot, l2_tmax, l2_points);
    if (*check_cmd) return run_check(g, check_table, check_suite_name);
    if (*cache_cmd) {
      if (g.cache_file.empty())
        throw std::invalid_argument("cache: --cache <file> required");
      InvariantCache cache(g.cache_file);
      if (cache_action == "show") {
        std::cout << cache.render();
      } else if (cache_action == "clear") {
        cache.clear();
        std::cout << "cache cleared\n";
      } else {
        throw std::invalid_argument("cache: action must be show or clear");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
