#include "negmono/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "negmono/error.hpp"
#include "negmono/parallel.hpp"
#include "negmono/random.hpp"

namespace negmono {

const char* to_string(SampleSource s) noexcept {
  switch (s) {
    case SampleSource::Haar: return "haar";
    case SampleSource::AcinGrid: return "acin_grid";
    case SampleSource::QuditGrid: return "qudit_grid";
    case SampleSource::SwapGrid: return "swap_grid";
    case SampleSource::Perturbation: return "perturbation";
  }
  return "unknown";
}

SampleSource parse_sample_source(std::string_view name) {
  for (auto s : {SampleSource::Haar, SampleSource::AcinGrid, SampleSource::QuditGrid,
                 SampleSource::SwapGrid, SampleSource::Perturbation}) {
    if (name == to_string(s)) return s;
  }
  throw Error(ErrorKind::UnknownName, "unknown sample source '" + std::string(name) + "'");
}

std::vector<SampleRecord> sample_triples(std::size_t d, std::size_t n, std::uint64_t seed,
                                         const SampleOptions& opts) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sample count must be >= 1");
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "local dimension must be >= 1");
  const PureState::Dims dims{d, d, d};
  const bool with_concurrence = opts.concurrence && d == 2;
  std::vector<SampleRecord> out(n);
  parallel_for(n, opts.threads, [&](std::size_t i) {
    SampleRecord& rec = out[i];
    rec.source = SampleSource::Haar;
    rec.seed = derive_seed(seed, i);
    const PureState psi = haar_random_pure(dims, rec.seed);
    rec.triple = negativity_triple(psi, opts.measures);
    if (with_concurrence) rec.concurrence = concurrence_triple(psi, opts.measures);
  });
  return out;
}

RegionSweep region_fill_sweep(double z_sq, std::size_t n_c, std::size_t n_points,
                              const MeasureOptions& opts) {
  if (!(z_sq > 0.0 && z_sq < 1.0)) {
    throw Error(ErrorKind::Unreachable, "region sweep needs 0 < z_sq < 1");
  }
  if (n_c < 2 || n_points < 2) {
    throw Error(ErrorKind::InvalidArgument, "region sweep needs n_c >= 2 and n_points >= 2");
  }
  constexpr std::array<std::size_t, 2> kAC{0, 2};
  constexpr std::array<std::size_t, 2> kAB{0, 1};
  constexpr double kPlaneTol = 1e-9;

  RegionSweep sweep;
  sweep.z_sq = z_sq;
  sweep.d = slice_d_roots(2, z_sq).front();
  const double d = sweep.d;
  const double c_max = std::sqrt(1.0 - d * d);
  sweep.endpoints_on_planes = true;
  sweep.nested = true;
  sweep.determinants_negative = true;

  for (std::size_t ic = 0; ic < n_c; ++ic) {
    const double c = ic + 1 == n_c ? c_max : c_max * static_cast<double>(ic) / (n_c - 1);
    const double r = std::sqrt(std::max(0.0, 1.0 - d * d - c * c));
    BoundaryCurve curve;
    curve.z_sq = z_sq;
    curve.d = d;
    for (std::size_t k = 0; k < n_points; ++k) {
      const double f = static_cast<double>(k) / (n_points - 1);
      const double a = r * f;
      const double b = r * std::sqrt(std::max(0.0, 1.0 - f * f));
      const AcinParams p = AcinParams::normalized(a, b, c, d);
      const PureState psi = acin_state(p);
      const NegativityTriple t = negativity_triple(psi, opts);
      curve.a.push_back(a);
      curve.points.push_back({t.n_ac_sq, t.n_ab_sq});

      if (p.a > 0.0 && p.b > 0.0) {
        const double det_ac =
            determinant(partial_transpose(reduced_density(psi, kAC), {2, 2})).real();
        const double det_ab =
            determinant(partial_transpose(reduced_density(psi, kAB), {2, 2})).real();
        const double d4 = std::pow(p.d, 4);
        const double closed_ac = -p.a * p.a * d4 * (p.a * p.a + p.c * p.c);
        const double closed_ab = -p.b * p.b * d4 * (p.b * p.b + p.c * p.c);
        if (!(det_ac < 0.0 && det_ab < 0.0)) sweep.determinants_negative = false;
        sweep.determinant_rel_error =
            std::max({sweep.determinant_rel_error, std::abs(det_ac / closed_ac - 1.0),
                      std::abs(det_ab / closed_ab - 1.0)});
      }
    }
    if (curve.points.front()[0] > kPlaneTol || curve.points.back()[1] > kPlaneTol) {
      sweep.endpoints_on_planes = false;
    }
    if (!sweep.curves.empty()) {
      const auto& prev = sweep.curves.back().points;
      for (std::size_t k = 0; k < n_points; ++k) {
        const double now = std::hypot(curve.points[k][0], curve.points[k][1]);
        const double before = std::hypot(prev[k][0], prev[k][1]);
        if (now > before + kPlaneTol) sweep.nested = false;
      }
    }
    sweep.c_values.push_back(c);
    sweep.curves.push_back(std::move(curve));
  }
  for (const auto& pt : sweep.curves.back().points) {
    sweep.collapse_radius = std::max(sweep.collapse_radius, std::hypot(pt[0], pt[1]));
  }
  return sweep;
}

namespace {

struct SearchStart {
  PureState state;
  std::vector<std::size_t> support;
  int D;
};

SearchStart search_start(const SearchBase& base) {
  if (const auto* p = std::get_if<AcinParams>(&base)) {
    if (p->c != 0.0 || p->omega != Complex{}) {
      throw Error(ErrorKind::InvalidArgument, "search base must have c = 0 and omega = 0");
    }
    // |000>, |100>, |101>, |110>, |111>: the five canonical-form amplitudes.
    return {acin_state(*p), {0b000, 0b100, 0b101, 0b110, 0b111}, 2};
  }
  const auto& q = std::get<QuditFamilyParams>(base);
  if (q.c != 0.0) throw Error(ErrorKind::InvalidArgument, "search base must have c = 0");
  const PureState psi = qudit_family_state(q);
  std::vector<std::size_t> support{psi.index(0, 0, 0)};
  for (std::size_t j = 1; j < static_cast<std::size_t>(q.D); ++j) {
    support.push_back(psi.index(j, 0, j));
    support.push_back(psi.index(j, j, 0));
    support.push_back(psi.index(j, j, j));
  }
  return {psi, std::move(support), q.D};
}

}  // namespace

SearchReport perturbation_search(const SearchBase& base, std::size_t n_trials, double step,
                                 std::uint64_t seed, const SearchOptions& opts) {
  if (!(step >= 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be >= 0");
  SearchStart start = search_start(base);
  const int D = start.D;
  const auto dims = start.state.dims();
  Rng rng = make_rng(seed);

  auto evaluate = [&](const PureState& psi, NegativityTriple& triple) {
    const PureState rotated =
        apply_local_unitaries(psi, haar_unitary(dims[0], rng), haar_unitary(dims[1], rng),
                              haar_unitary(dims[2], rng));
    triple = negativity_triple(rotated, opts.measures);
    return boundary_excess(triple, D, opts.n_points);
  };

  SearchReport report;
  report.D = D;
  report.seed = seed;
  report.trials = n_trials;

  PureState current = start.state;
  NegativityTriple current_triple;
  double current_excess = evaluate(current, current_triple);
  report.base_excess = current_excess;
  report.max_excess = current_excess;
  report.at_state = current;
  report.at_triple = current_triple;

  std::size_t stale = 0;
  std::vector<Complex> amps;
  for (std::size_t trial = 0; trial < n_trials; ++trial) {
    amps.assign(current.amplitudes().begin(), current.amplitudes().end());
    if (trial % 2 == 0) {
      for (std::size_t idx : start.support) amps[idx] += step * complex_gaussian(rng);
    } else {
      for (auto& z : amps) z += step * complex_gaussian(rng);
    }
    const PureState candidate = PureState::normalized(dims, std::move(amps));
    NegativityTriple triple;
    const double excess = evaluate(candidate, triple);
    if (excess > report.max_excess) {
      report.max_excess = excess;
      report.at_state = candidate;
      report.at_triple = triple;
    }
    if (excess > current_excess) {
      current = candidate;
      current_excess = excess;
      ++report.improvements;
      stale = 0;
    } else if (++stale >= opts.patience) {
      step = std::max(step / 2.0, std::min(step, opts.step_floor));
      stale = 0;
    }
  }
  report.final_step = step;
  return report;
}

std::vector<SearchReport> perturbation_search_many(const std::vector<SearchBase>& bases,
                                                   std::size_t n_trials, double step,
                                                   std::uint64_t seed, unsigned threads,
                                                   const SearchOptions& opts) {
  std::vector<SearchReport> out(bases.size());
  parallel_for(bases.size(), threads, [&](std::size_t i) {
    out[i] = perturbation_search(bases[i], n_trials, step, derive_seed(seed, i), opts);
  });
  return out;
}

SearchReport merge_reports(const std::vector<SearchReport>& reports) {
  if (reports.empty()) throw Error(ErrorKind::InvalidArgument, "no reports to merge");
  SearchReport merged = reports.front();
  std::size_t total = 0;
  for (const auto& r : reports) {
    total += r.trials;
    if (r.max_excess > merged.max_excess) merged = r;
  }
  merged.trials = total;
  return merged;
}

std::vector<SearchBase> qubit_boundary_bases(std::size_t n_bases, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SearchBase> out;
  out.reserve(n_bases);
  while (out.size() < n_bases) {
    // d^2 in (1/2, 1) keeps the base on the bounding branch.
    const double d2 = 0.5 + 0.5 * unit(rng);
    const double r = std::sqrt(1.0 - d2);
    const double angle = (std::numbers::pi / 2) * unit(rng);
    out.emplace_back(AcinParams::normalized(r * std::sin(angle), r * std::cos(angle), 0.0,
                                            std::sqrt(d2)));
  }
  return out;
}

std::vector<SearchBase> qudit_boundary_bases(int D, std::size_t n_bases, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SearchBase> out;
  out.reserve(n_bases);
  const double d2_min = 1.0 / D;
  while (out.size() < n_bases) {
    const double d2 = d2_min + (1.0 - d2_min) * unit(rng);
    const double angle = (std::numbers::pi / 2) * unit(rng);
    const double t = std::sqrt((1.0 - d2) / (D - 1));
    out.emplace_back(QuditFamilyParams{D, t * std::sin(angle), t * std::cos(angle), 0.0,
                                       std::sqrt(d2)});
  }
  return out;
}

}  // namespace negmono
