#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include "negmono/boundary.hpp"
#include "negmono/dataset.hpp"
#include "negmono/error.hpp"
#include "negmono/explorer.hpp"
#include "negmono/parallel.hpp"
#include "negmono/qudit.hpp"

namespace negmono::cli {

namespace {

// Summary lines are KEY=VALUE; doubles use the dataset formatting.
class Summary {
 public:
  explicit Summary(std::ostream& out) : out_(out) {}
  void put(const char* key, double v) { out_ << key << '=' << format_double(v) << '\n'; }
  void put(const char* key, std::uint64_t v) { out_ << key << '=' << v << '\n'; }
  void put(const char* key, int v) { out_ << key << '=' << v << '\n'; }
  void put(const char* key, bool v) { out_ << key << '=' << (v ? 1 : 0) << '\n'; }
  void put(const char* key, const std::string& v) { out_ << key << '=' << v << '\n'; }
  void put(const char* key, const char* v) { out_ << key << '=' << v << '\n'; }

 private:
  std::ostream& out_;
};

struct SampleArgs {
  std::size_t dims = 2;
  std::size_t n = 1000;
  std::string out = "triples.csv";
  std::string format = "csv";
};

struct BoundaryArgs {
  std::size_t grid = 200;
  std::optional<double> z_sq;
  std::string out = "boundary.csv";
};

struct SearchArgs {
  int D = 2;
  std::size_t n = 10;
  std::size_t trials = 1000;
  double step = 1e-2;
  std::string out;
};

struct QuditArgs {
  int D = 64;
  std::size_t grid = 50;
  bool unsquared = false;
  std::string out = "qudit.csv";
};

struct SwapArgs {
  int D = 3;
  std::size_t grid = 50;
  std::string out = "swap_scan.csv";
};

struct FillArgs {
  double z_sq = 0.5;
  std::size_t n = 9;
  std::size_t grid = 65;
  std::string out = "fill.csv";
};

double grid_value(std::size_t i, std::size_t grid) {
  return grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
}

int cmd_sample(const SampleArgs& args, const CommonFlags& flags, std::ostream& out) {
  SampleOptions opts;
  opts.threads = flags.threads;
  opts.measures = flags.measures();
  const auto records = sample_triples(args.dims, args.n, flags.seed, opts);
  emit_dataset(records, args.out, parse_dataset_format(args.format));

  double min_neg = std::numeric_limits<double>::infinity();
  double min_conc = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    min_neg = std::min(min_neg, monogamy_residual(r.triple));
    if (r.concurrence) min_conc = std::min(min_conc, monogamy_residual(*r.concurrence));
  }
  Summary s(out);
  s.put("RECORDS", std::uint64_t{records.size()});
  s.put("DIMS", std::uint64_t{args.dims});
  s.put("SEED", flags.seed);
  s.put("MIN_NEGATIVITY_RESIDUAL", min_neg);
  if (args.dims == 2) {
    s.put("MIN_CONCURRENCE_RESIDUAL", min_conc);
    std::vector<int> outside(records.size(), 0);
    parallel_for(records.size(), flags.threads, [&](std::size_t i) {
      outside[i] = classify_triple(records[i].triple) == Region::Outside;
    });
    s.put("OUTSIDE", std::uint64_t(std::count(outside.begin(), outside.end(), 1)));
  }
  s.put("OUT", args.out);
  return kExitOk;
}

int cmd_boundary(const BoundaryArgs& args, const CommonFlags& flags, std::ostream& out) {
  Table table{{"a", "b", "n_ac_sq", "n_ab_sq", "n_abc_sq", "implicit_residual"}, {}};
  std::vector<std::array<double, 2>> ab;
  double slice_d = 0.0;
  if (args.z_sq) {
    const BoundaryCurve curve = boundary_curve(*args.z_sq, args.grid);
    slice_d = curve.d;
    const double r2 = 1.0 - curve.d * curve.d;
    for (double a : curve.a) ab.push_back({a, std::sqrt(std::max(0.0, r2 - a * a))});
  } else {
    // Polar grid over the quarter disc a^2 + b^2 <= 1.
    for (std::size_t i = 0; i < args.grid; ++i)
      for (std::size_t j = 0; j < args.grid; ++j) {
        const double r = grid_value(i, args.grid);
        const double t = grid_value(j, args.grid) * std::numbers::pi / 2;
        ab.push_back({r * std::cos(t), r * std::sin(t)});
      }
  }
  table.rows.resize(ab.size());
  std::vector<double> oracle_diff(ab.size(), 0.0);
  const MeasureOptions m = flags.measures();
  parallel_for(ab.size(), flags.threads, [&](std::size_t k) {
    const auto [a, b] = ab[k];
    const NegativityTriple t = parametric_boundary_triple(a, b);
    const double res =
        implicit_surface_eval(std::sqrt(t.n_ac_sq), std::sqrt(t.n_ab_sq), std::sqrt(t.n_abc_sq));
    table.rows[k] = {a, b, t.n_ac_sq, t.n_ab_sq, t.n_abc_sq, res};
    const double d = std::sqrt(std::max(0.0, 1.0 - a * a - b * b));
    const NegativityTriple o = negativity_triple(acin_state(AcinParams::normalized(a, b, 0, d)), m);
    oracle_diff[k] = std::max({std::abs(o.n_ac_sq - t.n_ac_sq), std::abs(o.n_ab_sq - t.n_ab_sq),
                               std::abs(o.n_abc_sq - t.n_abc_sq)});
  });
  write_table_csv(table, args.out);

  double worst = 0.0;
  for (const auto& row : table.rows) worst = std::max(worst, std::abs(row[5]));
  Summary s(out);
  s.put("POINTS", std::uint64_t{table.rows.size()});
  s.put("MAX_IMPLICIT_RESIDUAL", worst);
  s.put("MAX_ORACLE_DIFF", *std::max_element(oracle_diff.begin(), oracle_diff.end()));
  if (args.z_sq) s.put("D_AMPLITUDE", slice_d);
  s.put("OUT", args.out);
  return kExitOk;
}

int cmd_search(const SearchArgs& args, const CommonFlags& flags, std::ostream& out) {
  const std::uint64_t base_seed = derive_seed(flags.seed, 0);
  const std::uint64_t run_seed = derive_seed(flags.seed, 1);
  const auto bases = args.D == 2 ? qubit_boundary_bases(args.n, base_seed)
                                 : qudit_boundary_bases(args.D, args.n, base_seed);
  SearchOptions opts;
  opts.measures = flags.measures();
  const auto reports =
      perturbation_search_many(bases, args.trials, args.step, run_seed, flags.threads, opts);
  const SearchReport best = merge_reports(reports);
  constexpr double kLimit = 1e-7;
  const bool exceeded = best.max_excess > kLimit;
  const char* verdict = !exceeded ? "PASS" : (args.D == 2 ? "FAIL" : "FINDING");

  if (!args.out.empty()) {
    nlohmann::json doc;
    doc["D"] = args.D;
    doc["seed"] = flags.seed;
    doc["bases"] = args.n;
    doc["trials_per_base"] = args.trials;
    doc["initial_step"] = args.step;
    doc["max_excess"] = best.max_excess;
    doc["verdict"] = verdict;
    doc["at_triple"] = {{"n_ac_sq", best.at_triple.n_ac_sq},
                        {"n_ab_sq", best.at_triple.n_ab_sq},
                        {"n_abc_sq", best.at_triple.n_abc_sq}};
    for (const auto& r : reports) {
      doc["per_base"].push_back({{"seed", r.seed},
                                 {"base_excess", r.base_excess},
                                 {"max_excess", r.max_excess},
                                 {"improvements", r.improvements},
                                 {"final_step", r.final_step}});
    }
    std::ofstream f(args.out, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::IoError, "cannot open '" + args.out + "' for writing");
    f << doc.dump(2) << '\n';
  }
  Summary s(out);
  s.put("D", args.D);
  s.put("BASES", std::uint64_t{args.n});
  s.put("TRIALS", std::uint64_t{best.trials});
  s.put("MAX_EXCESS", best.max_excess);
  s.put("AT_N_AC_SQ", best.at_triple.n_ac_sq);
  s.put("AT_N_AB_SQ", best.at_triple.n_ab_sq);
  s.put("AT_N_ABC_SQ", best.at_triple.n_abc_sq);
  s.put("VERDICT", verdict);
  if (!args.out.empty()) s.put("OUT", args.out);
  return args.D == 2 && exceeded ? kExitVerifyFailed : kExitOk;
}

// (d, theta) grid of the c = 0 family in its swap-rotated parametrization.
std::vector<std::array<double, 2>> d_theta_grid(std::size_t grid) {
  std::vector<std::array<double, 2>> g;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      g.push_back({grid_value(i, grid), grid_value(j, grid) * std::numbers::pi / 2});
  return g;
}

int cmd_qudit(const QuditArgs& args, const CommonFlags& flags, std::ostream& out) {
  const auto g = d_theta_grid(args.grid);
  const char* suffix = args.unsquared ? "" : "_sq";
  Table table{{"d", "theta", std::string("n_ac") + suffix, std::string("n_ab") + suffix,
               std::string("n_abc") + suffix, "fold_flag"},
              std::vector<std::vector<double>>(g.size())};
  const double threshold = 1.0 / std::sqrt(static_cast<double>(args.D));
  const MeasureOptions m = flags.measures();
  parallel_for(g.size(), flags.threads, [&](std::size_t k) {
    const auto [d, theta] = g[k];
    const QuditNegativities n = qudit_negativity_triple(swap_as_family({args.D, d, theta}), m);
    const NegativityTriple sq = n.squared();
    table.rows[k] = args.unsquared
                        ? std::vector<double>{d, theta, n.n_ac, n.n_ab, n.n_abc, double(d < threshold)}
                        : std::vector<double>{d, theta, sq.n_ac_sq, sq.n_ab_sq, sq.n_abc_sq,
                                              double(d < threshold)};
  });
  write_table_csv(table, args.out);
  double max_cut = 0.0;
  for (const auto& row : table.rows) max_cut = std::max(max_cut, row[4]);
  Summary s(out);
  s.put("D", args.D);
  s.put("POINTS", std::uint64_t{table.rows.size()});
  s.put("UNSQUARED", args.unsquared);
  s.put("MAX_N_ABC", max_cut);
  s.put("OUT", args.out);
  return kExitOk;
}

int cmd_swap_scan(const SwapArgs& args, const CommonFlags& flags, std::ostream& out) {
  const auto scan = swap_surface_scan(args.D, args.grid, flags.threads, flags.measures());
  Table table{{"d", "theta", "n_ac_sq", "n_ab_sq", "n_abc_sq", "fold_flag"}, {}};
  std::uint64_t folds = 0;
  for (const auto& p : scan) {
    table.rows.push_back({p.d, p.theta, p.triple.n_ac_sq, p.triple.n_ab_sq, p.triple.n_abc_sq,
                          double(p.fold)});
    folds += p.fold;
  }
  write_table_csv(table, args.out);
  Summary s(out);
  s.put("D", args.D);
  s.put("POINTS", std::uint64_t{scan.size()});
  s.put("FOLD_POINTS", folds);
  s.put("OUT", args.out);
  return kExitOk;
}

int cmd_fill(const FillArgs& args, const CommonFlags& flags, std::ostream& out) {
  const RegionSweep sweep = region_fill_sweep(args.z_sq, args.n, args.grid, flags.measures());
  Table table{{"c", "a", "b", "n_ac_sq", "n_ab_sq", "n_abc_sq"}, {}};
  for (std::size_t i = 0; i < sweep.curves.size(); ++i) {
    const double c = sweep.c_values[i];
    const double r2 = std::max(0.0, 1.0 - sweep.d * sweep.d - c * c);
    const auto& curve = sweep.curves[i];
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
      const double a = curve.a[k];
      table.rows.push_back({c, a, std::sqrt(std::max(0.0, r2 - a * a)), curve.points[k][0],
                            curve.points[k][1], args.z_sq});
    }
  }
  write_table_csv(table, args.out);
  const bool ok = sweep.endpoints_on_planes && sweep.nested && sweep.determinants_negative &&
                  sweep.collapse_radius < 1e-9;
  Summary s(out);
  s.put("Z_SQ", args.z_sq);
  s.put("D_AMPLITUDE", sweep.d);
  s.put("CURVES", std::uint64_t{sweep.curves.size()});
  s.put("ENDPOINTS_ON_PLANES", sweep.endpoints_on_planes);
  s.put("NESTED", sweep.nested);
  s.put("DETERMINANTS_NEGATIVE", sweep.determinants_negative);
  s.put("DETERMINANT_REL_ERROR", sweep.determinant_rel_error);
  s.put("COLLAPSE_RADIUS", sweep.collapse_radius);
  s.put("VERDICT", ok ? "PASS" : "FAIL");
  s.put("OUT", args.out);
  return ok ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App& sub, CommonFlags& flags) {
  sub.add_option("--seed", flags.seed, "Random seed")->capture_default_str();
  sub.add_option("--threads", flags.threads, "Worker threads (0: machine parallelism)")
      ->capture_default_str();
  sub.add_option("--tol", flags.tol, "Partial-transpose eigenvalues above -tol count as zero")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub.add_option("--eig-tol", flags.eig_tol, "Relative off-diagonal stopping norm of the eigensolver")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negativity monogamy explorer for three-party pure states", "negmono"};
  app.require_subcommand(1);

  CommonFlags flags;
  SampleArgs sample;
  BoundaryArgs boundary;
  SearchArgs search;
  QuditArgs qudit;
  SwapArgs swap;
  FillArgs fill;
  std::string suite = "all";

  auto* s_sample = app.add_subcommand("sample", "Haar-sample pure states and write their triples");
  s_sample->add_option("--dims", sample.dims, "Local dimension d of (d, d, d)")
      ->capture_default_str()
      ->check(CLI::Range(2, 8));
  s_sample->add_option("--n", sample.n, "Number of states")->capture_default_str()->check(CLI::PositiveNumber);
  s_sample->add_option("--out", sample.out, "Output file")->capture_default_str();
  s_sample->add_option("--format", sample.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  auto* s_boundary = app.add_subcommand("boundary", "Parametric boundary triples with implicit residuals");
  s_boundary->add_option("--grid", boundary.grid, "Grid points per axis (or per slice with --z-sq)")
      ->capture_default_str()
      ->check(CLI::Range(2, 5000));
  s_boundary->add_option("--z-sq", boundary.z_sq, "Write the single slice at this N_{A|BC}^2")
      ->check(CLI::Range(0.0, 1.0));
  s_boundary->add_option("--out", boundary.out, "Output file")->capture_default_str();

  auto* s_verify = app.add_subcommand("verify", "Run the oracle-equivalence and residual suites");
  s_verify->add_option("--suite", suite, "all, linalg, states, measures, boundary, qudit or explorer")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "linalg", "states", "measures", "boundary", "qudit", "explorer"}));

  auto* s_search = app.add_subcommand("search", "Perturbation search for states beyond the boundary");
  s_search->add_option("--D", search.D, "Local dimension")->capture_default_str()->check(CLI::Range(2, 4));
  s_search->add_option("--n", search.n, "Number of boundary base states")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s_search->add_option("--trials", search.trials, "Trials per base state")->capture_default_str();
  s_search->add_option("--step", search.step, "Initial perturbation step")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  s_search->add_option("--out", search.out, "Optional JSON report");

  auto* s_qudit = app.add_subcommand("qudit", "c = 0 family negativities on a (d, theta) grid");
  s_qudit->add_option("--D", qudit.D, "Local dimension")->capture_default_str()->check(CLI::Range(2, 4096));
  s_qudit->add_option("--grid", qudit.grid, "Grid points per axis")->capture_default_str()->check(CLI::Range(2, 5000));
  s_qudit->add_flag("--unsquared", qudit.unsquared, "Write N instead of N^2");
  s_qudit->add_option("--out", qudit.out, "Output file")->capture_default_str();

  auto* s_swap = app.add_subcommand("swap-scan", "Swap-rotated family from full reduced states");
  s_swap->add_option("--D", swap.D, "Local dimension")->capture_default_str()->check(CLI::Range(2, 8));
  s_swap->add_option("--grid", swap.grid, "Grid points per axis")->capture_default_str()->check(CLI::Range(2, 2000));
  s_swap->add_option("--out", swap.out, "Output file")->capture_default_str();

  auto* s_fill = app.add_subcommand("fill", "Constant-N_{A|BC} curves as c grows to its maximum");
  s_fill->add_option("--z-sq", fill.z_sq, "N_{A|BC}^2 of the slice, in (0, 1)")->capture_default_str();
  s_fill->add_option("--n", fill.n, "Number of c values")->capture_default_str()->check(CLI::Range(2, 10000));
  s_fill->add_option("--grid", fill.grid, "Points per curve")->capture_default_str()->check(CLI::Range(2, 100000));
  s_fill->add_option("--out", fill.out, "Output file")->capture_default_str();

  for (auto* sub : {s_sample, s_boundary, s_verify, s_search, s_qudit, s_swap, s_fill}) add_common(*sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (*s_sample) return cmd_sample(sample, flags, out);
    if (*s_boundary) return cmd_boundary(boundary, flags, out);
    if (*s_verify) return run_verify(suite, flags, out) ? kExitOk : kExitVerifyFailed;
    if (*s_search) return cmd_search(search, flags, out);
    if (*s_qudit) return cmd_qudit(qudit, flags, out);
    if (*s_swap) return cmd_swap_scan(swap, flags, out);
    if (*s_fill) return cmd_fill(fill, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace negmono::cli
