#include "negmono/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "negmono/error.hpp"

namespace negmono {

namespace {

constexpr std::array<std::size_t, 2> kAC{0, 2};
constexpr std::array<std::size_t, 2> kAB{0, 1};
constexpr std::array<std::size_t, 1> kA{0};
constexpr std::array<std::size_t, 1> kB{1};
constexpr std::array<std::size_t, 1> kC{2};

double pt_negativity(const ComplexMatrix& rho, BipartiteDims dims, const MeasureOptions& opts) {
  return negativity_from_spectrum(hermitian_eigenvalues(partial_transpose(rho, dims), opts.eig),
                                  opts.negative_threshold);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& rho, const EigenOptions& eig) {
  const EigenSystem es = hermitian_eigensystem(rho, eig);
  const std::size_t n = rho.dimension();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(0.0, es.spectrum.values[k]));
    if (s == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += s * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

}  // namespace

void require_density_matrix(const ComplexMatrix& rho, const MeasureOptions& opts) {
  if (!rho.is_hermitian(opts.density_tol)) {
    throw Error(ErrorKind::NotDensityMatrix, "operator is not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > opts.density_tol) {
    throw Error(ErrorKind::NotDensityMatrix, "trace is " + std::to_string(tr.real()));
  }
  const Spectrum s = hermitian_eigenvalues(rho, opts.eig);
  if (s.min() < -opts.density_tol) {
    throw Error(ErrorKind::NotDensityMatrix,
                "operator has eigenvalue " + std::to_string(s.min()) + " below zero");
  }
}

double negativity_from_spectrum(const Spectrum& pt_spectrum, double threshold) {
  double sum = 0.0;
  for (double v : pt_spectrum.values)
    if (v < -threshold) sum -= v;
  return 2.0 * sum;
}

double negativity(const ComplexMatrix& rho, BipartiteDims dims, const MeasureOptions& opts) {
  if (rho.dimension() != dims[0] * dims[1]) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix does not match bipartite dims");
  }
  require_density_matrix(rho, opts);
  return pt_negativity(rho, dims, opts);
}

double pure_cut_negativity(const PureState& psi, const MeasureOptions& opts) {
  require_normalized(psi);
  const Spectrum s = hermitian_eigenvalues(reduced_density(psi, kA), opts.eig);
  double root_sum = 0.0;
  for (double v : s.values) root_sum += std::sqrt(std::max(0.0, v));
  return std::max(0.0, root_sum * root_sum - 1.0);
}

NegativityTriple negativity_triple(const PureState& psi, const MeasureOptions& opts) {
  require_normalized(psi);
  const auto& dims = psi.dims();
  const double n_ac = pt_negativity(reduced_density(psi, kAC), {dims[0], dims[2]}, opts);
  const double n_ab = pt_negativity(reduced_density(psi, kAB), {dims[0], dims[1]}, opts);
  const double n_abc = pure_cut_negativity(psi, opts);
  return {n_ac * n_ac, n_ab * n_ab, n_abc * n_abc};
}

double n_abc_squared_closed_form(const AcinParams& p) {
  return 4.0 * (p.a * p.a + p.b * p.b + p.c * p.c) * p.d * p.d;
}

double concurrence_pure_cut(const PureState& psi) {
  require_normalized(psi);
  if (psi.dims()[0] != 2) {
    throw Error(ErrorKind::DimensionMismatch, "pure-cut concurrence needs a qubit A factor");
  }
  const ComplexMatrix rho_a = reduced_density(psi, kA);
  const double det = (rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)).real();
  return 2.0 * std::sqrt(std::max(0.0, det));
}

double wootters_concurrence(const ComplexMatrix& rho, const MeasureOptions& opts) {
  if (rho.dimension() != 4) {
    throw Error(ErrorKind::NotDensityMatrix, "Wootters concurrence needs a two-qubit state");
  }
  require_density_matrix(rho, opts);
  const ComplexMatrix flip = ComplexMatrix::from_rows(
      {{0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0, 0.0}});
  const ComplexMatrix tilde = flip * rho.conjugate() * flip;
  // sqrt(rho) tilde sqrt(rho) is Hermitian PSD and isospectral with rho tilde.
  const ComplexMatrix root = sqrt_psd(rho, opts.eig);
  ComplexMatrix m = root * tilde * root;
  m = 0.5 * (m + m.adjoint());
  const Spectrum s = hermitian_eigenvalues(m, opts.eig);
  std::array<double, 4> mu{};
  for (std::size_t i = 0; i < 4; ++i) mu[i] = std::sqrt(std::max(0.0, s.values[3 - i]));
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

ConcurrenceTriple concurrence_triple(const PureState& psi, const MeasureOptions& opts) {
  require_normalized(psi);
  if (psi.dims() != PureState::Dims{2, 2, 2}) {
    throw Error(ErrorKind::DimensionMismatch, "concurrence triple needs three qubits");
  }
  // psi may be off unit norm by up to kNormTolerance; the marginals are
  // rescaled to unit trace before the density-matrix gate.
  auto marginal = [&](std::span<const std::size_t> keep) {
    ComplexMatrix rho = reduced_density(psi, keep);
    return rho * Complex(1.0 / rho.trace().real());
  };
  const double c_ac = wootters_concurrence(marginal(kAC), opts);
  const double c_ab = wootters_concurrence(marginal(kAB), opts);
  const double c_abc = concurrence_pure_cut(psi);
  return {c_ac * c_ac, c_ab * c_ab, c_abc * c_abc};
}

double monogamy_residual(const NegativityTriple& t) noexcept {
  return t.n_abc_sq - t.n_ab_sq - t.n_ac_sq;
}

double monogamy_residual(const ConcurrenceTriple& t) noexcept {
  return t.c_abc_sq - t.c_ab_sq - t.c_ac_sq;
}

MarginalSpectra marginal_spectra(const PureState& psi, const MeasureOptions& opts) {
  require_normalized(psi);
  return {hermitian_eigenvalues(reduced_density(psi, kA), opts.eig),
          hermitian_eigenvalues(reduced_density(psi, kB), opts.eig),
          hermitian_eigenvalues(reduced_density(psi, kC), opts.eig)};
}

}  // namespace negmono
