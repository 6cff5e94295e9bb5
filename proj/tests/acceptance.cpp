// Acceptance battery: one PASS/FAIL line per criterion, tolerances pinned
// below. Exit status is non-zero when any criterion fails.
//
// usage: acceptance <path-to-negmono-cli> [work-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "negmono/boundary.hpp"
#include "negmono/dataset.hpp"
#include "negmono/explorer.hpp"
#include "negmono/qudit.hpp"

using namespace negmono;

namespace {

constexpr double kMonogamyTol = 1e-10;
constexpr double kQuarticTol = 1e-9;
constexpr double kGridOracleTol = 1e-10;
constexpr double kImplicitTol = 1e-8;
constexpr double kRootTol = 1e-10;
constexpr double kRootB0Tol = 1e-12;
constexpr double kWTripleTol = 1e-10;
constexpr double kWResidualFloor = 0.5;
constexpr double kBlockSpectrumTol = 1e-10;
constexpr double kCutTol = 1e-9;
constexpr double kDeterminantRelTol = 1e-8;
constexpr double kHiguchiTol = 1e-10;
constexpr double kAsymptoticRatio = 2.0;
constexpr double kSearchLimit = 1e-7;

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("[%s] %2d %-22s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr std::array<std::size_t, 2> kAC{0, 2};
constexpr std::array<std::size_t, 2> kAB{0, 1};

AcinParams random_acin(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return AcinParams::normalized(u(rng), u(rng), u(rng), u(rng),
                                std::polar(u(rng), 2 * std::numbers::pi * u(rng)));
}

double oracle_n_ac(const AcinParams& p) {
  return negativity(reduced_density(acin_state(p), kAC), {2, 2});
}

void monogamy() {
  const auto t0 = std::chrono::steady_clock::now();
  SampleOptions opts;
  opts.threads = 0;
  const auto recs = sample_triples(2, 100000, 42, opts);
  double neg = 1.0, conc = 1.0;
  for (const auto& r : recs) {
    neg = std::min(neg, monogamy_residual(r.triple));
    conc = std::min(conc, monogamy_residual(*r.concurrence));
  }
  const double secs = seconds_since(t0);
  report(1, "monogamy", neg >= -kMonogamyTol && conc >= -kMonogamyTol && secs < 120.0,
         "1e5 Haar states, seed 42: min negativity residual " + fmt(neg) +
             ", min concurrence residual " + fmt(conc) + ", " + fmt(secs) + " s");
}

void quartic() {
  Rng rng = make_rng(2);
  double at_root = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const AcinParams p = random_acin(rng);
    at_root = std::max(at_root, std::abs(quartic_eval(p, oracle_n_ac(p))));
  }
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  double vs_det = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AcinParams p = random_acin(rng);
    const double x = ux(rng);
    vs_det = std::max(vs_det, std::abs(quartic_eval(p, x) - quartic_determinant(p, x)));
  }
  report(2, "quartic", at_root < kQuarticTol && vs_det < kQuarticTol,
         "max |Q(N_oracle)| over 1e4 = " + fmt(at_root) + ", max |Q - det(2rho^TA + xI)| over 1e3 = " +
             fmt(vs_det));
}

void parametric_implicit() {
  const int grid = 200;
  double oracle = 0.0, implicit = 0.0, printed = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double r = double(i) / (grid - 1), t = double(j) / (grid - 1) * std::numbers::pi / 2;
      const double a = r * std::cos(t), b = r * std::sin(t);
      const NegativityTriple q = parametric_boundary_triple(a, b);
      const double d = std::sqrt(std::max(0.0, 1.0 - a * a - b * b));
      const NegativityTriple o = negativity_triple(acin_state(AcinParams::normalized(a, b, 0.0, d)));
      oracle = std::max({oracle, std::abs(q.n_ac_sq - o.n_ac_sq), std::abs(q.n_ab_sq - o.n_ab_sq),
                         std::abs(q.n_abc_sq - o.n_abc_sq)});
      const double x = std::sqrt(q.n_ac_sq), y = std::sqrt(q.n_ab_sq), z = std::sqrt(q.n_abc_sq);
      implicit = std::max(implicit, std::abs(implicit_surface_eval(x, y, z)));
      printed = std::max(printed, std::abs(implicit_surface_eval_as_printed(x, y, z)));
    }
  report(3, "parametric_implicit", oracle < kGridOracleTol && implicit < kImplicitTol,
         "200x200 grid: max oracle diff " + fmt(oracle) + ", max |implicit| " + fmt(implicit) +
             " (with the x(x-1)+y(y-1) coefficient: " + fmt(printed) + ")");
}

void closed_root() {
  Rng rng = make_rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0, worst_b0 = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const AcinParams p = AcinParams::normalized(u(rng), u(rng), 0.0, u(rng));
    worst = std::max(worst, std::abs(closed_form_root(p.a, p.b, p.d) - oracle_n_ac(p)));
    const AcinParams q = AcinParams::normalized(u(rng), 0.0, 0.0, u(rng));
    worst_b0 = std::max(worst_b0, std::abs(closed_form_root(q.a, 0.0, q.d) - 2 * q.a * q.d));
  }
  report(4, "closed_form_root", worst < kRootTol && worst_b0 < kRootB0Tol,
         "1e4 draws: max |root - oracle| " + fmt(worst) + ", b=0: max |root - 2ad| " + fmt(worst_b0));
}

void w_tightness() {
  const double s = 1.0 / std::sqrt(3.0);
  const NegativityTriple w = negativity_triple(acin_state({s, s, 0.0, s}));
  const double wn = std::pow(std::sqrt(5.0) - 1.0, 2) / 9.0;
  const double triple_err =
      std::max({std::abs(w.n_ac_sq - wn), std::abs(w.n_ab_sq - wn), std::abs(w.n_abc_sq - 8.0 / 9.0)});
  const double residual = monogamy_residual(w);
  const Region region = classify_triple(w);
  const double surface = implicit_surface_eval(std::sqrt(w.n_ac_sq), std::sqrt(w.n_ab_sq), std::sqrt(w.n_abc_sq));
  const BoundarySlice slice(2, w.n_abc_sq);
  const double diag = slice.radius_at(std::numbers::pi / 4) / std::sqrt(2.0);
  const bool ok = triple_err < kWTripleTol && residual > kWResidualFloor && region == Region::OnBoundary;
  report(5, "w_tightness", ok,
         "triple err " + fmt(triple_err) + ", linear residual " + fmt(residual) + ", region " +
             to_string(region) + " (required on_boundary); |implicit| " + fmt(surface) +
             "; the point lies on the d^2=1/3 fold, the bounding d^2=2/3 branch crosses the diagonal at " +
             fmt(diag) + " vs " + fmt(w.n_ac_sq));
}

void qudit_blocks() {
  Rng rng = make_rng(6);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double spec = 0.0, cut = 0.0, det = 0.0, det_printed = 0.0;
  for (int D = 2; D <= 6; ++D) {
    const auto Ds = static_cast<std::size_t>(D);
    for (int i = 0; i < 100; ++i) {
      const auto p = QuditFamilyParams::normalized(D, u(rng), u(rng), u(rng), u(rng));
      const PureState psi = qudit_family_state(p);
      const auto closed = pt_determinants(p);
      const auto printed = pt_determinants_as_printed(p);
      for (PartyPair pair : {PartyPair::AC, PartyPair::AB}) {
        const ComplexMatrix pt = partial_transpose(reduced_density(psi, pair == PartyPair::AC ? kAC : kAB), {Ds, Ds});
        const Spectrum full = hermitian_eigenvalues(pt);
        const Spectrum blocks = pt_block_decompose(p, pair).spectrum();
        for (std::size_t k = 0; k < full.size(); ++k) spec = std::max(spec, std::abs(full.values[k] - blocks.values[k]));
        const double brute = determinant(pt).real();
        const std::size_t idx = pair == PartyPair::AC ? 0 : 1;
        det = std::max(det, std::abs(brute / closed[idx] - 1.0));
        det_printed = std::max(det_printed, std::abs(brute / printed[idx] - 1.0));
      }
      cut = std::max(cut, std::abs(n_abc_closed_form(p) - pure_cut_negativity(psi)));
      if (D <= 4) cut = std::max(cut, std::abs(n_abc_closed_form(p) - negativity(density_from_pure(psi), {Ds, Ds * Ds})));
    }
  }
  report(6, "qudit_blocks", spec < kBlockSpectrumTol && cut < kCutTol && det < kDeterminantRelTol,
         "D=2..6 x 100: spectra " + fmt(spec) + ", N_A|BC " + fmt(cut) + ", det rel " + fmt(det) +
             " (without the a^2 in the (D-1)th power: " + fmt(det_printed) + ")");
}

void higuchi() {
  Rng rng = make_rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double above = 0.0, below = 1e300;
  for (int D = 2; D <= 6; ++D) {
    const double thr = 1.0 / std::sqrt(double(D));
    for (int i = 0; i < 100; ++i) {
      const double t = u(rng) * std::numbers::pi / 2;
      for (bool hi : {true, false}) {
        const double d = hi ? thr + (1.0 - thr) * (0.01 + 0.98 * u(rng)) : thr * (0.01 + 0.98 * u(rng));
        const double sc = std::sqrt((1 - d * d) / (D - 1));
        const QuditFamilyParams p{D, sc * std::cos(t), sc * std::sin(t), 0.0, d};
        const double r = higuchi_residual(marginal_spectra(qudit_family_state(p))).a;
        if (hi) above = std::max(above, std::abs(r));
        else below = std::min(below, r);
      }
    }
  }
  report(7, "higuchi", above < kHiguchiTol && below > 0.0,
         "d > 1/sqrt(D): max |residual_A| " + fmt(above) + "; d < 1/sqrt(D): min residual_A " + fmt(below));
}

void asymptotics() {
  const double alpha = 1.0, beta = 0.6;
  double r1_lo = 1e300, r1_hi = 0, r2_lo = 1e300, r2_hi = 0, fixed_lo = 1e300, fixed_hi = 0;
  std::string series;
  for (int D : {8, 16, 32, 64}) {
    const AsymptoticResult r = asymptotic_check(D, alpha, beta);
    r1_lo = std::min(r1_lo, r.r_leading * D);
    r1_hi = std::max(r1_hi, r.r_leading * D);
    r2_lo = std::min(r2_lo, r.r_linear * D);
    r2_hi = std::max(r2_hi, r.r_linear * D);
    const AsymptoticResult f = asymptotic_check_at(D, alpha, beta, 0.9);
    fixed_lo = std::min(fixed_lo, f.r_leading * D);
    fixed_hi = std::max(fixed_hi, f.r_leading * D);
    series += " D=" + std::to_string(D) + ":" + fmt(r.r_leading * D) + "/" + fmt(r.r_linear * D);
  }
  report(8, "asymptotics", r1_hi / r1_lo < kAsymptoticRatio && r2_hi / r2_lo < kAsymptoticRatio,
         "d=1.5/sqrt(D), r*D (leading/linear):" + series + "; spread " + fmt(r1_hi / r1_lo) + ", " +
             fmt(r2_hi / r2_lo) + " (d held at 0.9: spread " + fmt(fixed_hi / fixed_lo) + ")");
}

void conjecture_probe(const std::filesystem::path& work) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto qubit = merge_reports(perturbation_search_many(qubit_boundary_bases(100, 91), 10000, 1e-2, 92, 0));
  const auto q3 = perturbation_search_many(qudit_boundary_bases(3, 100, 93), 10000, 1e-2, 94, 0);
  const auto best3 = merge_reports(q3);

  nlohmann::json doc;
  doc["D"] = 3;
  doc["bases"] = q3.size();
  doc["trials_per_base"] = 10000;
  doc["max_excess"] = best3.max_excess;
  doc["finding"] = best3.max_excess > kSearchLimit ? "excess beyond the c=0 envelope" : "no counter-example";
  doc["at_triple"] = {best3.at_triple.n_ac_sq, best3.at_triple.n_ab_sq, best3.at_triple.n_abc_sq};
  for (const auto& r : q3) doc["per_base_max_excess"].push_back(r.max_excess);
  const auto path = work / "qudit_search_findings.json";
  std::ofstream(path) << doc.dump(2) << '\n';
  const bool emitted = std::filesystem::exists(path);

  report(9, "conjecture_probe", qubit.max_excess <= kSearchLimit && emitted,
         "qubit 100x1e4: max excess " + fmt(qubit.max_excess) + "; D=3 100x1e4: max excess " +
             fmt(best3.max_excess) + " (" + doc["finding"].get<std::string>() + "), report " +
             path.string() + ", " + fmt(seconds_since(t0)) + " s");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism(const std::string& cli, const std::filesystem::path& work) {
  const auto a = work / "determinism_a.csv", b = work / "determinism_b.csv";
  auto run = [&](const std::filesystem::path& out) {
    const std::string cmd = "\"" + cli + "\" sample --dims 2 --n 1000 --seed 7 --out \"" + out.string() + "\" > /dev/null";
    return std::system(cmd.c_str());
  };
  const int ra = run(a), rb = run(b);
  const std::string sa = slurp(a), sb = slurp(b);
  const bool ok = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
  report(10, "determinism", ok,
         "two runs of 'sample --dims 2 --n 1000 --seed 7': " + std::to_string(sa.size()) + " and " +
             std::to_string(sb.size()) + " bytes, " + (sa == sb ? "identical" : "different"));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-negmono-cli> [work-dir]\n";
    return 2;
  }
  const std::filesystem::path work = argc > 2 ? argv[2] : std::filesystem::current_path();
  try {
    monogamy();
    quartic();
    parametric_implicit();
    closed_root();
    w_tightness();
    qudit_blocks();
    higuchi();
    asymptotics();
    conjecture_probe(work);
    determinism(argv[1], work);
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  std::printf("ACCEPTANCE_FAILED=%d\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
