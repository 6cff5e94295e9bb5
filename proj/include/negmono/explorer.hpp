#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "negmono/boundary.hpp"
#include "negmono/measures.hpp"
#include "negmono/states.hpp"

namespace negmono {

enum class SampleSource { Haar, AcinGrid, QuditGrid, SwapGrid, Perturbation };

const char* to_string(SampleSource s) noexcept;
SampleSource parse_sample_source(std::string_view name);

struct SampleRecord {
  NegativityTriple triple;
  std::optional<ConcurrenceTriple> concurrence;
  SampleSource source = SampleSource::Haar;
  /// For Haar records, the seed that regenerates this one state.
  std::uint64_t seed = 0;
  /// Source parameters, when the source has any. Not serialized.
  std::vector<double> params;
};

struct SampleOptions {
  unsigned threads = 1;
  /// Qubit runs also record concurrence triples unless disabled.
  bool concurrence = true;
  MeasureOptions measures{};
};

/// n Haar-random pure states on (d, d, d). Record i uses
/// derive_seed(seed, i), so output is independent of the thread count.
std::vector<SampleRecord> sample_triples(std::size_t d, std::size_t n, std::uint64_t seed,
                                         const SampleOptions& opts = {});

/// Constant-N_{A|BC}^2 curves of the (a, b, c, d) family as c grows from 0 to
/// sqrt(1 - d^2), with d the bounding root at z_sq. Each curve is sampled at
/// a = f r, b = sqrt(1 - f^2) r, r = sqrt(1 - d^2 - c^2), f uniform in [0, 1];
/// triples come from the eigenvalue computation, not closed forms.
struct RegionSweep {
  double z_sq = 0.0;
  double d = 0.0;
  std::vector<double> c_values;
  std::vector<BoundaryCurve> curves;

  /// First point on x^2 = 0 and last on y^2 = 0, within 1e-9, for every curve.
  bool endpoints_on_planes = false;
  /// Radius at each matched index never grows with c (tolerance 1e-9).
  bool nested = false;
  /// Both partial-transpose determinants < 0 wherever a, b > 0.
  bool determinants_negative = false;
  /// Largest |brute-force det - (-a^2 d^4 (a^2 + c^2))| / |closed form|.
  double determinant_rel_error = 0.0;
  /// Largest point radius on the final (c at maximum) curve.
  double collapse_radius = 0.0;
};

RegionSweep region_fill_sweep(double z_sq, std::size_t n_c, std::size_t n_points = 65,
                              const MeasureOptions& opts = {});

using SearchBase = std::variant<AcinParams, QuditFamilyParams>;

struct SearchOptions {
  /// Consecutive non-improving trials before the step is halved.
  std::size_t patience = 20;
  double step_floor = 1e-8;
  /// Samples per boundary branch when measuring excess.
  std::size_t n_points = 128;
  MeasureOptions measures{};
};

struct SearchReport {
  int D = 2;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  /// Excess of the unperturbed base state.
  double base_excess = 0.0;
  /// Largest signed radial excess over the boundary seen in any trial.
  double max_excess = 0.0;
  /// State and triple attaining max_excess.
  std::optional<PureState> at_state;
  NegativityTriple at_triple;
  std::size_t improvements = 0;
  double final_step = 0.0;
};

/// Adaptive hill climb on boundary_excess starting from a boundary state
/// (c = 0, omega = 0; throws InvalidArgument otherwise). Even trials perturb
/// only the amplitudes the family parametrizes, odd trials perturb all
/// amplitudes; every candidate is evaluated after Haar-random local
/// unitaries on each factor. The step halves after opts.patience
/// non-improving trials, never below opts.step_floor.
SearchReport perturbation_search(const SearchBase& base, std::size_t n_trials, double step,
                                 std::uint64_t seed, const SearchOptions& opts = {});

/// Runs one search per base (base i seeded with derive_seed(seed, i)).
std::vector<SearchReport> perturbation_search_many(const std::vector<SearchBase>& bases,
                                                   std::size_t n_trials, double step,
                                                   std::uint64_t seed, unsigned threads,
                                                   const SearchOptions& opts = {});

/// Max-reduction over reports.
SearchReport merge_reports(const std::vector<SearchReport>& reports);

/// n_bases qubit boundary states (c = omega = 0) on the bounding side,
/// a and b drawn from seed.
std::vector<SearchBase> qubit_boundary_bases(std::size_t n_bases, std::uint64_t seed);

/// The same for the D-level family: d > 1/sqrt(D), c = 0.
std::vector<SearchBase> qudit_boundary_bases(int D, std::size_t n_bases, std::uint64_t seed);

}  // namespace negmono
