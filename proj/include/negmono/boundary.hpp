#pragma once

// Boundary of the achievable set of squared-negativity triples.
//
// Coordinates: x = N_{A|C}, y = N_{A|B}, z = N_{A|BC}. Triples and curves are
// stored squared, (x^2, y^2, z^2); the implicit surface is evaluated on the
// unsquared values.
//
// The boundary states are the c = 0, omega = 0 members of the canonical form
// (and their qudit analogues). At fixed z the amplitude d is pinned up to a
// two-way ambiguity: z = 2(D-1) d s + (D-1)(D-2) s^2 with
// s^2 = (1 - d^2)/(D-1) has one root with d >= 1/sqrt(D) and one with
// d <= 1/sqrt(D). Only the first traces the outer boundary; the second is a
// fold lying inside it. BoundarySlice keeps both and takes the envelope.

#include <array>
#include <cstddef>
#include <vector>

#include "negmono/measures.hpp"
#include "negmono/states.hpp"

namespace negmono {

/// The quartic satisfied by x = N_{A|C}, expanded term by term, including the
/// a b c |omega| cos(arg omega) coupling.
double quartic_eval(const AcinParams& p, double x);

/// det(2 rho_AC^{T_A} + x I_4) from the state itself; equals quartic_eval.
double quartic_determinant(const AcinParams& p, double x);

/// Left-hand sides of the two stationarity conditions (d/d omega and d/d c
/// of the quartic, each scaled by -1/4), for real omega.
struct StationarityResiduals {
  double omega_condition = 0.0;
  double c_condition = 0.0;
};

/// Throws InvalidArgument if omega has an imaginary part above 1e-12.
StationarityResiduals stationarity_residuals(const AcinParams& p, double x);

/// 8 a b c |omega| x (2 d^2 + x) sin(arg omega): the phase condition.
double phase_stationarity(const AcinParams& p, double x);

/// The eliminant in x whose factors list the candidate extremal negativities:
/// (2ad - x)(2a^2 + x)(2ad + x)(2d^2 + x)(2a^2 d^2 + a^2 x - b^2 x)^2 (4a^2 d^2 - 2b^2 x - x^2).
double factored_eliminant(double a, double b, double d, double x);

/// -b^2 + sqrt(b^4 + 4 a^2 d^2): N_{A|C} of the omega = c = 0 state.
double closed_form_root(double a, double b, double d);

/// 2 a^2 d^2 / (b^2 - a^2), the remaining positive-root candidate.
double submanifold_root(double a, double b, double d);

/// a^7 b^3 d^4 (a^2 - b^2 - ad)(a^2 - b^2 + ad)(-a^2 + b^2 + 2a^2 d^2)^2,
/// the condition under which submanifold_root is compatible with the
/// stationarity equations and normalization.
double submanifold_eliminant(double a, double b, double d);

/// Squared-negativity triple of the omega = c = 0 state with
/// d = sqrt(1 - a^2 - b^2). Throws NotNormalizable if a^2 + b^2 > 1.
NegativityTriple parametric_boundary_triple(double a, double b);

/// The implicit boundary polynomial on unsquared negativities:
///   z^6 - 2z^4(x^2 - xy + y^2)
///   + z^2(x^4 + y^4 - 2xy(x(x+1) + y(y+1) - 3xy/2 + 2))
///   + xy(2y^2 + xy^2 + x^2 y + 2x^2)(x + y + 2).
double implicit_surface_eval(double x, double y, double z);

/// Same polynomial with x(x-1) + y(y-1) in the z^2 coefficient. Does not
/// vanish on the parametric boundary; kept so the discrepancy stays
/// reproducible.
double implicit_surface_eval_as_printed(double x, double y, double z);

/// Pairwise negativities (N_{A|C}, N_{A|B}) of the c = 0 qudit boundary
/// state with amplitudes (a, b, d): each 2x2 off-diagonal block adds 2a^2,
/// each 3x3 block adds -b^2 + sqrt(b^4 + 4a^2 d^2).
std::array<double, 2> c0_pair_negativities(int D, double a, double b, double d);

/// N_{A|BC} of a normalized c = 0 (or general c) family member with
/// s^2 = a^2 + b^2 + c^2: 2(D-1) d s + (D-1)(D-2) s^2.
double family_cut_negativity(int D, double d, double s_squared);

/// Values of d, descending, for which the c = 0 family reaches
/// N_{A|BC}^2 = n_abc_sq. Throws Unreachable above (D-1)^2.
std::vector<double> slice_d_roots(int D, double n_abc_sq);

struct BoundaryBranch {
  double d = 0.0;
  /// d >= 1/sqrt(D): the branch that bounds the achievable set.
  bool bounding = true;
  std::vector<double> a;
  std::vector<std::array<double, 2>> points;  // (x^2, y^2), a ascending
  std::vector<double> angles;                 // atan2(y^2, x^2) per point
};

/// All c = 0 curves at one value of N_{A|BC}^2, sampled uniformly in a and
/// queried along rays from the origin of the (x^2, y^2) plane.
class BoundarySlice {
 public:
  static constexpr std::size_t kDefaultPoints = 512;

  BoundarySlice(int D, double n_abc_sq, std::size_t n_points = kDefaultPoints);

  int dimension() const noexcept { return D_; }
  double n_abc_sq() const noexcept { return n_abc_sq_; }
  const std::vector<BoundaryBranch>& branches() const noexcept { return branches_; }

  /// Outermost boundary distance along the ray at `angle` in [0, pi/2].
  /// Crossings are bracketed on the samples, then refined by bisection on
  /// the exact parametrization.
  double radius_at(double angle) const;

  /// hypot(x^2, y^2) - radius_at(atan2(y^2, x^2)): positive outside.
  double signed_excess(double x_sq, double y_sq) const;

 private:
  std::array<double, 2> evaluate(const BoundaryBranch& branch, double a) const;
  double amplitude_scale(double d) const;

  int D_;
  double n_abc_sq_;
  std::vector<BoundaryBranch> branches_;
};

/// A constant-N_{A|BC}^2 slice of the qubit boundary.
struct BoundaryCurve {
  double z_sq = 0.0;
  double d = 0.0;
  std::vector<double> a;
  std::vector<std::array<double, 2>> points;  // (x^2, y^2), from (0, z^2) to (z^2, 0)
};

/// The bounding (larger-d) qubit branch at z_sq, sampled uniformly in a.
/// Throws Unreachable for z_sq > 1 and InvalidArgument for z_sq < 0.
BoundaryCurve boundary_curve(double z_sq, std::size_t n_points = BoundarySlice::kDefaultPoints);

enum class Region { Inside, OnBoundary, Outside };

const char* to_string(Region r) noexcept;

inline constexpr double kOnBoundaryTolerance = 1e-7;

struct ClassifyOptions {
  int D = 2;
  std::size_t n_points = BoundarySlice::kDefaultPoints;
  double tolerance = kOnBoundaryTolerance;
};

/// Radial comparison of (n_ac_sq, n_ab_sq) with the envelope at n_abc_sq.
Region classify_triple(const NegativityTriple& t, const ClassifyOptions& opts = {});

/// Signed radial distance of t beyond the envelope; the measure the search
/// maximizes.
double boundary_excess(const NegativityTriple& t, int D = 2,
                       std::size_t n_points = BoundarySlice::kDefaultPoints);

}  // namespace negmono
