#include "negmono/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "negmono/error.hpp"

namespace negmono {

double quartic_eval(const AcinParams& p, double x) {
  const double a2 = p.a * p.a, b2 = p.b * p.b, c2 = p.c * p.c, d2 = p.d * p.d;
  const double w = std::abs(p.omega);
  const double w2 = w * w;
  const double cos_arg = w > 0.0 ? p.omega.real() / w : 1.0;
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  return -16 * a2 * a2 * d2 * d2 - 16 * a2 * c2 * d2 * d2       //
         - 8 * a2 * a2 * d2 * x + 8 * a2 * b2 * d2 * x          //
         - 8 * a2 * c2 * d2 * x - 8 * a2 * d2 * d2 * x          //
         - 8 * a2 * d2 * w2 * x + 4 * a2 * b2 * x2              //
         + 4 * b2 * d2 * x2 + 4 * c2 * d2 * x2 + 4 * c2 * w2 * x2 + 2 * a2 * x3  //
         + 2 * b2 * x3 + 2 * c2 * x3 + 2 * d2 * x3 + 2 * w2 * x3 + x4           //
         - (16 * d2 * x + 8 * x2) * p.a * p.b * p.c * w * cos_arg;
}

double quartic_determinant(const AcinParams& p, double x) {
  constexpr std::array<std::size_t, 2> kAC{0, 2};
  const ComplexMatrix rho_ac = reduced_density(acin_state(p), kAC);
  ComplexMatrix m = partial_transpose(rho_ac, {2, 2}) * Complex(2.0);
  m += ComplexMatrix::identity(4) * Complex(x);
  return determinant(m).real();
}

StationarityResiduals stationarity_residuals(const AcinParams& p, double x) {
  if (std::abs(p.omega.imag()) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "stationarity conditions assume real omega");
  }
  const double a = p.a, b = p.b, c = p.c, d = p.d, w = p.omega.real();
  const double d2 = d * d, x2 = x * x;
  StationarityResiduals r;
  r.omega_condition =
      x * (4 * a * b * c * d2 + 4 * a * a * d2 * w + 2 * a * b * c * x - 2 * c * c * w * x - w * x2);
  r.c_condition = 8 * a * a * c * d2 * d2 + 4 * a * a * c * d2 * x + 4 * a * b * d2 * w * x -
                  2 * c * d2 * x2 + 2 * a * b * w * x2 - 2 * c * w * w * x2 - c * x2 * x;
  return r;
}

double phase_stationarity(const AcinParams& p, double x) {
  const double w = std::abs(p.omega);
  const double sin_arg = w > 0.0 ? p.omega.imag() / w : 0.0;
  return 8 * p.a * p.b * p.c * w * x * (2 * p.d * p.d + x) * sin_arg;
}

double factored_eliminant(double a, double b, double d, double x) {
  const double a2 = a * a, b2 = b * b, d2 = d * d;
  const double sq = 2 * a2 * d2 + a2 * x - b2 * x;
  return (2 * a * d - x) * (2 * a2 + x) * (2 * a * d + x) * (2 * d2 + x) * sq * sq *
         (4 * a2 * d2 - 2 * b2 * x - x * x);
}

double closed_form_root(double a, double b, double d) {
  const double b2 = b * b;
  const double disc = std::sqrt(b2 * b2 + 4 * a * a * d * d);
  // -b^2 + disc cancels when b^2 >> ad; the rationalized form does not.
  return disc + b2 > 0.0 ? 4 * a * a * d * d / (disc + b2) : 0.0;
}

double submanifold_root(double a, double b, double d) {
  return 2 * a * a * d * d / (b * b - a * a);
}

double submanifold_eliminant(double a, double b, double d) {
  const double a2 = a * a, b2 = b * b, d2 = d * d;
  const double sq = -a2 + b2 + 2 * a2 * d2;
  return std::pow(a, 7) * b * b2 * d2 * d2 * (a2 - b2 - a * d) * (a2 - b2 + a * d) * sq * sq;
}

NegativityTriple parametric_boundary_triple(double a, double b) {
  if (!(a >= 0.0 && b >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "boundary amplitudes must be >= 0");
  }
  const double rest = 1.0 - a * a - b * b;
  if (rest < -1e-15) {
    throw Error(ErrorKind::NotNormalizable, "a^2 + b^2 exceeds 1");
  }
  const double d = std::sqrt(std::max(0.0, rest));
  const double x = closed_form_root(a, b, d);
  const double y = closed_form_root(b, a, d);
  return {x * x, y * y, 4 * (a * a + b * b) * d * d};
}

namespace {

double implicit_with_linear_sign(double x, double y, double z, double sign) {
  const double x2 = x * x, y2 = y * y, z2 = z * z;
  const double inner = x * (x + sign) + y * (y + sign) - 1.5 * x * y + 2.0;
  return z2 * z2 * z2 - 2 * z2 * z2 * (x2 - x * y + y2) +
         z2 * (x2 * x2 + y2 * y2 - 2 * x * y * inner) +
         x * y * (2 * y2 + x * y2 + x2 * y + 2 * x2) * (x + y + 2);
}

}  // namespace

double implicit_surface_eval(double x, double y, double z) {
  return implicit_with_linear_sign(x, y, z, +1.0);
}

double implicit_surface_eval_as_printed(double x, double y, double z) {
  return implicit_with_linear_sign(x, y, z, -1.0);
}

std::array<double, 2> c0_pair_negativities(int D, double a, double b, double d) {
  const double blocks = (D - 1.0) * (D - 2.0);
  return {blocks * a * a + (D - 1.0) * closed_form_root(a, b, d),
          blocks * b * b + (D - 1.0) * closed_form_root(b, a, d)};
}

double family_cut_negativity(int D, double d, double s_squared) {
  return 2.0 * (D - 1.0) * d * std::sqrt(s_squared) + (D - 1.0) * (D - 2.0) * s_squared;
}

std::vector<double> slice_d_roots(int D, double n_abc_sq) {
  if (D < 2) throw Error(ErrorKind::InvalidArgument, "D must be >= 2");
  if (!(n_abc_sq >= -1e-12)) {
    throw Error(ErrorKind::InvalidArgument, "squared negativity must be >= 0");
  }
  const double n_max = D - 1.0;
  double n = std::sqrt(std::max(0.0, n_abc_sq));
  if (n > n_max * (1.0 + 1e-9)) {
    throw Error(ErrorKind::Unreachable, "N_{A|BC}^2 = " + std::to_string(n_abc_sq) +
                                            " exceeds the maximum " + std::to_string(n_max * n_max));
  }
  n = std::min(n, n_max);

  // With d = cos(u): N + 1 = (d + sqrt(D-1) sqrt(1-d^2))^2 = D cos^2(u - u0),
  // u0 = atan(sqrt(D-1)); u0 itself is d = 1/sqrt(D), the maximally entangled cut.
  if (D == 2) {
    // Exact form of the same roots: d^2 = (1 +- sqrt(1 - N^2)) / 2.
    const double r = std::sqrt(std::max(0.0, 1.0 - n * n));
    const double hi = std::sqrt((1.0 + r) / 2.0);
    const double lo = std::sqrt((1.0 - r) / 2.0);
    if (hi - lo <= 1e-15) return {hi};
    return {hi, lo};
  }
  const double u0 = std::atan(std::sqrt(D - 1.0));
  const double delta = std::acos(std::min(1.0, std::sqrt((n + 1.0) / D)));
  std::vector<double> roots;
  for (double u : {u0 - delta, u0 + delta}) {
    if (u < -1e-12 || u > std::numbers::pi / 2 + 1e-12) continue;
    const double d = std::cos(std::clamp(u, 0.0, std::numbers::pi / 2));
    if (roots.empty() || std::abs(roots.back() - d) > 1e-15) roots.push_back(std::max(0.0, d));
  }
  return roots;
}

BoundarySlice::BoundarySlice(int D, double n_abc_sq, std::size_t n_points)
    : D_(D), n_abc_sq_(std::max(0.0, n_abc_sq)) {
  if (n_points < 2) throw Error(ErrorKind::InvalidArgument, "a slice needs at least 2 points");
  const double threshold = 1.0 / std::sqrt(static_cast<double>(D));
  for (double d : slice_d_roots(D, n_abc_sq)) {
    BoundaryBranch branch;
    branch.d = d;
    branch.bounding = d >= threshold - 1e-15;
    const double s = amplitude_scale(d);
    branch.a.reserve(n_points);
    branch.points.reserve(n_points);
    branch.angles.reserve(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
      const double a = k + 1 == n_points ? s : s * static_cast<double>(k) / (n_points - 1);
      const auto pt = evaluate(branch, a);
      branch.a.push_back(a);
      branch.points.push_back(pt);
      branch.angles.push_back(std::atan2(pt[1], pt[0]));
    }
    branches_.push_back(std::move(branch));
  }
}

double BoundarySlice::amplitude_scale(double d) const {
  return std::sqrt(std::max(0.0, 1.0 - d * d) / (D_ - 1));
}

std::array<double, 2> BoundarySlice::evaluate(const BoundaryBranch& branch, double a) const {
  const double s = amplitude_scale(branch.d);
  const double b = std::sqrt(std::max(0.0, s * s - a * a));
  const auto [x, y] = c0_pair_negativities(D_, a, b, branch.d);
  return {x * x, y * y};
}

double BoundarySlice::radius_at(double angle) const {
  double best = 0.0;
  for (const auto& br : branches_) {
    const std::size_t n = br.points.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double r0 = std::hypot(br.points[k][0], br.points[k][1]);
      const double r1 = std::hypot(br.points[k + 1][0], br.points[k + 1][1]);
      if (r0 == 0.0 || r1 == 0.0) continue;
      const double f0 = br.angles[k] - angle;
      const double f1 = br.angles[k + 1] - angle;
      if (f0 == 0.0) {
        best = std::max(best, r0);
        continue;
      }
      if (f1 == 0.0) {
        best = std::max(best, r1);
        continue;
      }
      if ((f0 < 0.0) == (f1 < 0.0)) continue;
      double lo = br.a[k], hi = br.a[k + 1];
      const bool lo_above = f0 > 0.0;
      std::array<double, 2> pt = br.points[k];
      for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        pt = evaluate(br, mid);
        const bool above = std::atan2(pt[1], pt[0]) - angle > 0.0;
        (above == lo_above ? lo : hi) = mid;
      }
      best = std::max(best, std::hypot(pt[0], pt[1]));
    }
  }
  return best;
}

double BoundarySlice::signed_excess(double x_sq, double y_sq) const {
  const double r = std::hypot(x_sq, y_sq);
  const double angle = r > 0.0 ? std::atan2(y_sq, x_sq) : std::numbers::pi / 4;
  return r - radius_at(angle);
}

BoundaryCurve boundary_curve(double z_sq, std::size_t n_points) {
  if (z_sq < 0.0) throw Error(ErrorKind::InvalidArgument, "z_sq must be >= 0");
  if (z_sq > 1.0 + 1e-12) {
    throw Error(ErrorKind::Unreachable, "qubit N_{A|BC}^2 cannot exceed 1");
  }
  const BoundarySlice slice(2, std::min(z_sq, 1.0), n_points);
  const auto& br = slice.branches().front();  // largest d
  return BoundaryCurve{std::min(z_sq, 1.0), br.d, br.a, br.points};
}

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::Inside: return "inside";
    case Region::OnBoundary: return "on_boundary";
    case Region::Outside: return "outside";
  }
  return "unknown";
}

double boundary_excess(const NegativityTriple& t, int D, std::size_t n_points) {
  const double cap = (D - 1.0) * (D - 1.0);
  // Rounding can push a maximal cut a hair above the cap.
  const double z_sq = t.n_abc_sq > cap && t.n_abc_sq <= cap * (1.0 + 1e-9) ? cap : t.n_abc_sq;
  const BoundarySlice slice(D, z_sq, n_points);
  return slice.signed_excess(t.n_ac_sq, t.n_ab_sq);
}

Region classify_triple(const NegativityTriple& t, const ClassifyOptions& opts) {
  const double excess = boundary_excess(t, opts.D, opts.n_points);
  if (excess > opts.tolerance) return Region::Outside;
  if (excess >= -opts.tolerance) return Region::OnBoundary;
  return Region::Inside;
}

}  // namespace negmono
