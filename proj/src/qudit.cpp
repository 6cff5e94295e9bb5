#include "negmono/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "negmono/boundary.hpp"
#include "negmono/error.hpp"
#include "negmono/parallel.hpp"

namespace negmono {

namespace {

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double sign_floor_half(int D) { return (D / 2) % 2 == 0 ? 1.0 : -1.0; }

double smallest_sum(const Spectrum& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i) sum += s.values[i];
  return sum;
}

}  // namespace

Spectrum PtBlockDecomposition::spectrum(const EigenOptions& eig) const {
  Spectrum out;
  out.values.reserve(dimension());
  out.values.push_back(scalar_block);
  for (std::size_t i = 0; i < offdiag_count; ++i) {
    out.values.push_back(-offdiag_value);
    out.values.push_back(offdiag_value);
  }
  if (triple_count > 0) {
    ComplexMatrix block(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) block(i, j) = triple_block[i][j];
    const Spectrum bs = hermitian_eigenvalues(block, eig);
    for (std::size_t i = 0; i < triple_count; ++i)
      out.values.insert(out.values.end(), bs.values.begin(), bs.values.end());
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

double PtBlockDecomposition::determinant() const {
  double det = scalar_block;
  const double off = -offdiag_value * offdiag_value;
  for (std::size_t i = 0; i < offdiag_count; ++i) det *= off;
  const double tri = det3(triple_block);
  for (std::size_t i = 0; i < triple_count; ++i) det *= tri;
  return det;
}

PtBlockDecomposition pt_block_decompose(const QuditFamilyParams& p, PartyPair pair) {
  p.validate();
  // The A|B pair is the A|C pair with the roles of a and b exchanged.
  const double a = pair == PartyPair::AC ? p.a : p.b;
  const double b = pair == PartyPair::AC ? p.b : p.a;
  const double c = p.c, d = p.d;
  const auto D = static_cast<std::size_t>(p.D);
  PtBlockDecomposition out;
  out.D = p.D;
  out.scalar_block = d * d;
  out.offdiag_value = a * a;
  out.offdiag_count = (D - 1) * (D - 2) / 2;
  out.triple_block = {{{0.0, a * d, 0.0}, {a * d, b * b, b * c}, {0.0, b * c, a * a + c * c}}};
  out.triple_count = D - 1;
  return out;
}

QuditNegativities qudit_negativity_triple(const QuditFamilyParams& p, const MeasureOptions& opts) {
  p.validate();
  QuditNegativities out;
  out.n_ac = negativity_from_spectrum(pt_block_decompose(p, PartyPair::AC).spectrum(opts.eig),
                                      opts.negative_threshold);
  out.n_ab = negativity_from_spectrum(pt_block_decompose(p, PartyPair::AB).spectrum(opts.eig),
                                      opts.negative_threshold);
  const double s2 = p.a * p.a + p.b * p.b + p.c * p.c;
  const double root_sum = p.d + (p.D - 1) * std::sqrt(s2);
  out.n_abc = std::max(0.0, root_sum * root_sum - 1.0);
  return out;
}

double n_abc_closed_form(const QuditFamilyParams& p) {
  return family_cut_negativity(p.D, p.d, p.a * p.a + p.b * p.b + p.c * p.c);
}

std::array<double, 2> pt_determinants(const QuditFamilyParams& p) {
  const int D = p.D;
  const double d2 = p.d * p.d, c2 = p.c * p.c;
  auto one = [&](double a) {
    const double a2 = a * a;
    return sign_floor_half(D) * d2 * std::pow(a2 * (a2 + c2) * d2, D - 1) *
           std::pow(a, 2.0 * (D - 1) * (D - 2));
  };
  return {one(p.a), one(p.b)};
}

std::array<double, 2> pt_determinants_as_printed(const QuditFamilyParams& p) {
  const int D = p.D;
  const double d2 = p.d * p.d, c2 = p.c * p.c;
  auto one = [&](double a) {
    return sign_floor_half(D) * d2 * std::pow((a * a + c2) * d2, D - 1) *
           std::pow(a, 2.0 * (D - 1) * (D - 2));
  };
  return {one(p.a), one(p.b)};
}

HiguchiResiduals higuchi_residual(const MarginalSpectra& s) {
  const double sa = smallest_sum(s.lambda_a);
  const double sb = smallest_sum(s.lambda_b);
  const double sc = smallest_sum(s.lambda_c);
  return {sb + sc - sa, sa + sc - sb, sa + sb - sc};
}

QuditFamilyParams asymptotic_params(int D, double alpha, double beta, double d) {
  if (D < 2) throw Error(ErrorKind::InvalidArgument, "D must be >= 2");
  if (!(alpha >= 0.0 && beta >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha and beta must be >= 0");
  }
  const double weight = alpha * alpha + beta * beta;
  if (weight == 0.0) return QuditFamilyParams{D, 0.0, 0.0, 0.0, 1.0};
  if (!(d >= 0.0 && d < 1.0)) {
    throw Error(ErrorKind::NotNormalizable, "d = " + std::to_string(d) + " leaves no weight for a, b");
  }
  const double t = std::sqrt((1.0 - d * d) / ((D - 1) * weight));
  return QuditFamilyParams{D, alpha * t, beta * t, 0.0, d};
}

AsymptoticResult asymptotic_check_at(int D, double alpha, double beta, double d) {
  AsymptoticResult out;
  out.params = asymptotic_params(D, alpha, beta, d);
  out.exact = qudit_negativity_triple(out.params);
  const double a2 = out.params.a * out.params.a;
  const double b2 = out.params.b * out.params.b;
  const double dd = static_cast<double>(D) * D;
  const std::array<double, 3> leading{dd * a2, dd * b2, dd * (a2 + b2)};
  const std::array<double, 3> exact{out.exact.n_ac, out.exact.n_ab, out.exact.n_abc};
  for (std::size_t i = 0; i < 3; ++i) {
    if (leading[i] > 0.0) out.r_leading = std::max(out.r_leading, std::abs(exact[i] / leading[i] - 1.0));
  }
  if (out.exact.n_abc > 0.0) {
    out.r_linear = std::abs(out.exact.n_abc - out.exact.n_ab - out.exact.n_ac) / out.exact.n_abc;
  }
  return out;
}

AsymptoticResult asymptotic_check(int D, double alpha, double beta, double kappa) {
  if (!(kappa > 0.0) || kappa * kappa >= D) {
    throw Error(ErrorKind::InvalidArgument, "kappa must satisfy 0 < kappa^2 < D");
  }
  return asymptotic_check_at(D, alpha, beta, kappa / std::sqrt(static_cast<double>(D)));
}

QuditFamilyParams swap_as_family(const SwapFamilyParams& p) {
  p.validate();
  const double b = p.b();
  return QuditFamilyParams{p.D, b * std::abs(std::sin(p.theta)), b * std::abs(std::cos(p.theta)),
                           0.0, p.d};
}

std::vector<SwapScanPoint> swap_surface_scan(int D, std::size_t grid, unsigned threads,
                                             const MeasureOptions& opts) {
  if (D < 2) throw Error(ErrorKind::InvalidArgument, "D must be >= 2");
  if (grid < 2) throw Error(ErrorKind::InvalidArgument, "grid must be >= 2");
  std::vector<SwapScanPoint> out(grid * grid);
  const double threshold = 1.0 / std::sqrt(static_cast<double>(D));
  parallel_for(out.size(), threads, [&](std::size_t idx) {
    const std::size_t i = idx / grid;
    const std::size_t j = idx % grid;
    SwapScanPoint& pt = out[idx];
    pt.d = static_cast<double>(i) / (grid - 1);
    pt.theta = (std::numbers::pi / 2) * static_cast<double>(j) / (grid - 1);
    pt.fold = pt.d < threshold;
    pt.triple = negativity_triple(swap_family_state({D, pt.d, pt.theta}), opts);
  });
  return out;
}

}  // namespace negmono
