// The battery behind `negmono verify`. Each check compares two independent
// code paths (closed form vs. eigensolve, block vs. full matrix, ...) or a
// theorem-backed residual, and records the operations it exercised; the
// "all" suite also fails if any operation in the manifest went unused.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "cli.hpp"
#include "negmono/boundary.hpp"
#include "negmono/dataset.hpp"
#include "negmono/error.hpp"
#include "negmono/explorer.hpp"
#include "negmono/qudit.hpp"

namespace negmono::cli {

namespace {

const std::vector<std::string> kManifest = {
    // linalg
    "tensor_product", "density_from_pure", "partial_trace", "partial_transpose",
    "hermitian_eigenvalues",
    // states
    "acin_state", "qudit_family_state", "swap_family_state", "haar_random_pure", "named_state",
    // measures
    "negativity", "negativity_triple", "n_abc_squared_closed_form", "concurrence_pure_cut",
    "wootters_concurrence", "concurrence_triple", "monogamy_residual", "marginal_spectra",
    // boundary
    "quartic_eval", "stationarity_residuals", "closed_form_root", "parametric_boundary_triple",
    "implicit_surface_eval", "boundary_curve", "classify_triple",
    // qudit
    "pt_block_decompose", "qudit_negativity_triple", "n_abc_closed_form", "pt_determinants",
    "higuchi_residual", "asymptotic_check", "swap_surface_scan",
    // explorer
    "sample_triples", "region_fill_sweep", "perturbation_search", "emit_dataset",
};

class Verifier {
 public:
  Verifier(std::ostream& out, MeasureOptions measures) : out_(out), m_(measures) {}

  const MeasureOptions& measures() const { return m_; }

  void check(const std::string& name, std::initializer_list<const char*> ops, bool ok,
             double value = std::nan("")) {
    for (const char* op : ops) covered_.insert(op);
    ok ? ++passed_ : ++failed_;
    out_ << "CHECK " << name << ' ' << (ok ? "PASS" : "FAIL");
    if (!std::isnan(value)) out_ << " value=" << format_double(value);
    out_ << '\n';
  }

  /// Runs body; an exception counts as a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++failed_;
      out_ << "CHECK " << name << " FAIL exception=\"" << e.what() << "\"\n";
    }
  }

  bool finish(bool require_coverage) {
    std::vector<std::string> missing;
    for (const auto& op : kManifest)
      if (!covered_.count(op)) missing.push_back(op);
    out_ << "CHECKS_PASSED=" << passed_ << '\n' << "CHECKS_FAILED=" << failed_ << '\n';
    out_ << "COVERAGE=" << (kManifest.size() - missing.size()) << '/' << kManifest.size() << '\n';
    if (!missing.empty()) {
      out_ << "COVERAGE_MISSING=";
      for (std::size_t i = 0; i < missing.size(); ++i) out_ << (i ? "," : "") << missing[i];
      out_ << '\n';
    }
    const bool ok = failed_ == 0 && (!require_coverage || missing.empty());
    out_ << "VERIFY=" << (ok ? "PASS" : "FAIL") << '\n';
    return ok;
  }

 private:
  std::ostream& out_;
  MeasureOptions m_;
  std::set<std::string> covered_;
  int passed_ = 0;
  int failed_ = 0;
};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

ComplexMatrix bell_projector() {
  const double h = 0.5;
  return ComplexMatrix::from_rows({{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}});
}

AcinParams random_acin(Rng& rng, bool boundary_only = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (boundary_only) return AcinParams::normalized(u(rng), u(rng), 0.0, u(rng));
  return AcinParams::normalized(u(rng), u(rng), u(rng), u(rng),
                                std::polar(u(rng), 2 * std::numbers::pi * u(rng)));
}

QuditFamilyParams random_family(int D, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  return QuditFamilyParams::normalized(D, u(rng), u(rng), u(rng), u(rng));
}

void suite_linalg(Verifier& v) {
  v.guarded("linalg", [&] {
    v.check("tensor_identity", {"tensor_product"},
            tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) ==
                ComplexMatrix::identity(6));
    const PureState bell({2, 2, 1}, {kInvSqrt2, 0, 0, kInvSqrt2});
    const ComplexMatrix rho = density_from_pure(bell);
    v.check("bell_density", {"density_from_pure"}, max_abs_diff(rho, bell_projector()) < 1e-15);
    v.check("bell_marginal", {"partial_trace"},
            max_abs_diff(partial_trace(rho, {2, 2}, Keep::First),
                         ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);
    const Spectrum s = hermitian_eigenvalues(partial_transpose(rho, {2, 2}));
    v.check("bell_pt_spectrum", {"partial_transpose", "hermitian_eigenvalues"},
            std::abs(s.values[0] + 0.5) < 1e-14 && std::abs(s.values[3] - 0.5) < 1e-14);
    Rng rng = make_rng(1);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const PureState psi = haar_random_pure({3, 3, 1}, rng);
      const ComplexMatrix r = density_from_pure(psi);
      worst = std::max(worst, std::abs(hermitian_eigenvalues(r).sum() - 1.0));
      worst = std::max(worst, max_abs_diff(partial_transpose(partial_transpose(r, {3, 3}), {3, 3}), r));
    }
    v.check("trace_and_involution", {"hermitian_eigenvalues", "partial_transpose"}, worst < 1e-10, worst);
  });
}

void suite_states(Verifier& v) {
  v.guarded("states", [&] {
    v.check("acin_product", {"acin_state"}, acin_state({0, 0, 0, 1}).amplitude(0, 0, 0) == Complex(1.0));
    Rng rng = make_rng(2);
    bool same = true;
    for (int rep = 0; rep < 10; ++rep) {
      const AcinParams p = random_acin(rng, true);
      same = same && qudit_family_state({2, p.a, p.b, p.c, p.d}) == acin_state(p);
    }
    v.check("qudit_family_qubit_case", {"qudit_family_state"}, same);
    const NegativityTriple sw = negativity_triple(swap_family_state({3, 0.8, 0.0}), v.measures());
    v.check("swap_theta_zero", {"swap_family_state"}, sw.n_ac_sq == 0.0 && sw.n_ab_sq > 0.0);
    v.check("haar_deterministic", {"haar_random_pure"},
            haar_random_pure({2, 2, 2}, 42) == haar_random_pure({2, 2, 2}, 42));
    const ConcurrenceTriple w = concurrence_triple(named_state(NamedState::W), v.measures());
    v.check("w_concurrence", {"named_state", "concurrence_triple"},
            std::abs(w.c_ac_sq - 4.0 / 9) < 1e-10 && std::abs(w.c_abc_sq - 8.0 / 9) < 1e-10);
  });
}

void suite_measures(Verifier& v) {
  v.guarded("measures", [&] {
    const auto& m = v.measures();
    v.check("bell_negativity", {"negativity"}, std::abs(negativity(bell_projector(), {2, 2}, m) - 1.0) < 1e-14);
    const NegativityTriple w = negativity_triple(acin_state({kInvSqrt3, kInvSqrt3, 0, kInvSqrt3}), m);
    const double wn = std::pow((std::sqrt(5.0) - 1.0) / 3.0, 2);
    v.check("w_negativity_triple", {"acin_state", "negativity_triple"},
            std::abs(w.n_ac_sq - wn) < 1e-10 && std::abs(w.n_ab_sq - wn) < 1e-10 &&
                std::abs(w.n_abc_sq - 8.0 / 9) < 1e-10);
    v.check("w_linear_residual", {"monogamy_residual"},
            std::abs(monogamy_residual(w) - (8.0 / 9 - 2 * wn)) < 1e-10, monogamy_residual(w));

    Rng rng = make_rng(3);
    double cut = 0.0, conc = 0.0, closed = 0.0, min_neg = 1.0, min_conc = 1.0;
    for (int rep = 0; rep < 1000; ++rep) {
      const PureState psi = haar_random_pure({2, 2, 2}, rng);
      const NegativityTriple t = negativity_triple(psi, m);
      const ConcurrenceTriple c = concurrence_triple(psi, m);
      cut = std::max(cut, std::abs(concurrence_pure_cut(psi) - std::sqrt(t.n_abc_sq)));
      min_neg = std::min(min_neg, monogamy_residual(t));
      min_conc = std::min(min_conc, monogamy_residual(c));
      const AcinParams p = random_acin(rng);
      closed = std::max(closed, std::abs(n_abc_squared_closed_form(p) - negativity_triple(acin_state(p), m).n_abc_sq));
      conc = std::max(conc, std::abs(c.c_abc_sq - t.n_abc_sq));
    }
    v.check("cut_concurrence_vs_negativity", {"concurrence_pure_cut"}, cut < 1e-10, cut);
    v.check("cut_closed_form", {"n_abc_squared_closed_form"}, closed < 1e-10, closed);
    v.check("pure_cut_equality", {"concurrence_triple"}, conc < 1e-10, conc);
    v.check("negativity_monogamy", {"monogamy_residual"}, min_neg >= -1e-10, min_neg);
    v.check("concurrence_monogamy", {"monogamy_residual"}, min_conc >= -1e-10, min_conc);

    const std::array<std::size_t, 2> ab{0, 1};
    const double wc = wootters_concurrence(reduced_density(named_state(NamedState::W), ab), m);
    v.check("w_pair_concurrence", {"wootters_concurrence"}, std::abs(wc - 2.0 / 3) < 1e-10, wc);

    const MarginalSpectra ghz = marginal_spectra(named_state(NamedState::GHZ), m);
    v.check("ghz_marginals", {"marginal_spectra"},
            std::abs(ghz.lambda_a.values[0] - 0.5) < 1e-14 && std::abs(ghz.lambda_c.values[1] - 0.5) < 1e-14);
  });
}

void suite_boundary(Verifier& v) {
  v.guarded("boundary", [&] {
    const auto& m = v.measures();
    constexpr std::array<std::size_t, 2> kAC{0, 2};
    Rng rng = make_rng(4);
    double quartic = 0.0, stationarity = 0.0, root = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
      const AcinParams p = random_acin(rng);
      const double x = negativity(reduced_density(acin_state(p), kAC), {2, 2}, m);
      quartic = std::max(quartic, std::abs(quartic_eval(p, x)));
      const AcinParams q = random_acin(rng, true);
      const double xq = negativity(reduced_density(acin_state(q), kAC), {2, 2}, m);
      const auto r = stationarity_residuals(q, xq);
      stationarity = std::max({stationarity, std::abs(r.omega_condition), std::abs(r.c_condition)});
      root = std::max(root, std::abs(closed_form_root(q.a, q.b, q.d) - xq));
    }
    v.check("quartic_at_oracle", {"quartic_eval"}, quartic < 1e-9, quartic);
    v.check("boundary_stationary", {"stationarity_residuals"}, stationarity < 1e-9, stationarity);
    v.check("closed_form_root", {"closed_form_root"}, root < 1e-10, root);
    v.check("closed_form_root_b0", {"closed_form_root"},
            std::abs(closed_form_root(0.6, 0.0, 0.8) - 2 * 0.6 * 0.8) < 1e-12);

    double implicit = 0.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const double r = i / 40.0, t = j / 40.0 * std::numbers::pi / 2;
        const NegativityTriple b = parametric_boundary_triple(r * std::cos(t), r * std::sin(t));
        implicit = std::max(implicit, std::abs(implicit_surface_eval(std::sqrt(b.n_ac_sq), std::sqrt(b.n_ab_sq),
                                                                     std::sqrt(b.n_abc_sq))));
      }
    v.check("implicit_on_parametric", {"parametric_boundary_triple", "implicit_surface_eval"},
            implicit < 1e-8, implicit);

    const BoundaryCurve c = boundary_curve(0.5, 129);
    v.check("curve_endpoints", {"boundary_curve"},
            std::abs(c.points.front()[1] - 0.5) < 1e-9 && std::abs(c.points.back()[0] - 0.5) < 1e-9);

    // The equal-coefficient point is on the implicit surface but on the
    // inner fold (d^2 = 1/3), hence inside the envelope at z^2 = 8/9.
    const NegativityTriple w = parametric_boundary_triple(kInvSqrt3, kInvSqrt3);
    v.check("w_on_implicit_surface", {"implicit_surface_eval"},
            std::abs(implicit_surface_eval(std::sqrt(w.n_ac_sq), std::sqrt(w.n_ab_sq), std::sqrt(w.n_abc_sq))) < 1e-10);
    v.check("w_inside_envelope", {"classify_triple"}, classify_triple(w) == Region::Inside);
    v.check("bounding_state_on_boundary", {"classify_triple"},
            classify_triple(parametric_boundary_triple(0.3, 0.4)) == Region::OnBoundary);
    v.check("linear_point_outside", {"classify_triple"},
            classify_triple({4.0 / 9, 4.0 / 9, 8.0 / 9}) == Region::Outside);
  });
}

void suite_qudit(Verifier& v) {
  v.guarded("qudit", [&] {
    const auto& m = v.measures();
    Rng rng = make_rng(5);
    double spec = 0.0, cut = 0.0, det = 0.0;
    for (int D = 2; D <= 4; ++D) {
      const auto Ds = static_cast<std::size_t>(D);
      for (int rep = 0; rep < 10; ++rep) {
        const QuditFamilyParams p = random_family(D, rng);
        const PureState psi = qudit_family_state(p);
        constexpr std::array<std::size_t, 2> kAC{0, 2};
        const ComplexMatrix pt = partial_transpose(reduced_density(psi, kAC), {Ds, Ds});
        const Spectrum full = hermitian_eigenvalues(pt, m.eig);
        const Spectrum blocks = pt_block_decompose(p, PartyPair::AC).spectrum(m.eig);
        for (std::size_t i = 0; i < full.size(); ++i) spec = std::max(spec, std::abs(full.values[i] - blocks.values[i]));
        cut = std::max(cut, std::abs(n_abc_closed_form(p) - qudit_negativity_triple(p, m).n_abc));
        cut = std::max(cut, std::abs(n_abc_closed_form(p) - pure_cut_negativity(psi, m)));
        det = std::max(det, std::abs(determinant(pt).real() / pt_determinants(p)[0] - 1.0));
      }
    }
    v.check("block_spectra", {"pt_block_decompose", "qudit_family_state"}, spec < 1e-10, spec);
    v.check("cut_closed_form", {"n_abc_closed_form", "qudit_negativity_triple"}, cut < 1e-9, cut);
    v.check("determinants", {"pt_determinants"}, det < 1e-8, det);

    const QuditFamilyParams sat{3, 0.3, 0.4, 0.0, std::sqrt(1 - 2 * 0.25)};
    const HiguchiResiduals h = higuchi_residual(marginal_spectra(qudit_family_state(sat), m));
    v.check("higuchi_saturation", {"higuchi_residual", "marginal_spectra"}, std::abs(h.a) < 1e-10, h.a);

    double lo = 1e300, hi = 0.0;
    for (int D : {8, 16, 32, 64}) {
      const AsymptoticResult r = asymptotic_check(D, 1.0, 0.5);
      lo = std::min(lo, r.r_linear * D);
      hi = std::max(hi, r.r_linear * D);
    }
    v.check("asymptotic_linear_defect", {"asymptotic_check"}, hi / lo < 2.0, hi / lo);

    const auto scan = swap_surface_scan(3, 6, 1, m);
    bool theta0 = true;
    for (const auto& p : scan)
      if (p.theta == 0.0) theta0 = theta0 && p.triple.n_ac_sq == 0.0;
    v.check("swap_scan_theta_zero", {"swap_surface_scan", "swap_family_state"}, theta0);
  });
}

void suite_explorer(Verifier& v) {
  v.guarded("explorer", [&] {
    SampleOptions opts;
    opts.measures = v.measures();
    const auto recs = sample_triples(2, 500, 6, opts);
    bool outside = false;
    double min_res = 1.0;
    for (const auto& r : recs) {
      outside = outside || classify_triple(r.triple) == Region::Outside;
      min_res = std::min(min_res, monogamy_residual(r.triple));
    }
    v.check("samples_inside", {"sample_triples", "classify_triple"}, !outside && min_res >= -1e-10, min_res);

    const RegionSweep s = region_fill_sweep(0.6, 6, 33, v.measures());
    v.check("region_fill", {"region_fill_sweep"},
            s.endpoints_on_planes && s.nested && s.determinants_negative && s.collapse_radius < 1e-9,
            s.collapse_radius);

    const auto bases = qubit_boundary_bases(2, 7);
    double excess = -1.0;
    for (const auto& r : perturbation_search_many(bases, 300, 1e-2, 8, 1)) excess = std::max(excess, r.max_excess);
    v.check("qubit_search", {"perturbation_search"}, excess <= 1e-7, excess);

    const auto path = std::filesystem::temp_directory_path() / "negmono_verify_roundtrip.csv";
    emit_dataset(recs, path, DatasetFormat::Csv);
    const auto back = read_dataset(path, DatasetFormat::Csv);
    std::filesystem::remove(path);
    bool same = back.size() == recs.size();
    for (std::size_t i = 0; same && i < back.size(); ++i)
      same = back[i].triple == recs[i].triple && back[i].concurrence == recs[i].concurrence;
    v.check("dataset_round_trip", {"emit_dataset"}, same);
  });
}

}  // namespace

bool run_verify(const std::string& suite, const CommonFlags& flags, std::ostream& out) {
  Verifier v(out, flags.measures());
  const bool all = suite == "all";
  if (all || suite == "linalg") suite_linalg(v);
  if (all || suite == "states") suite_states(v);
  if (all || suite == "measures") suite_measures(v);
  if (all || suite == "boundary") suite_boundary(v);
  if (all || suite == "qudit") suite_qudit(v);
  if (all || suite == "explorer") suite_explorer(v);
  return v.finish(all);
}

}  // namespace negmono::cli
