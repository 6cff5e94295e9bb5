#pragma once

#include "negmono/linalg.hpp"
#include "negmono/states.hpp"

namespace negmono {

struct MeasureOptions {
  /// Partial-transpose eigenvalues above -negative_threshold count as zero.
  double negative_threshold = 1e-12;
  /// Hermiticity, trace and positivity tolerance on input density matrices.
  double density_tol = 1e-10;
  EigenOptions eig{};
};

/// Squared negativities (N_{A|C}^2, N_{A|B}^2, N_{A|BC}^2).
struct NegativityTriple {
  double n_ac_sq = 0.0;
  double n_ab_sq = 0.0;
  double n_abc_sq = 0.0;

  friend bool operator==(const NegativityTriple&, const NegativityTriple&) = default;
};

/// Squared concurrences (C_{A|C}^2, C_{A|B}^2, C_{A|BC}^2).
struct ConcurrenceTriple {
  double c_ac_sq = 0.0;
  double c_ab_sq = 0.0;
  double c_abc_sq = 0.0;

  friend bool operator==(const ConcurrenceTriple&, const ConcurrenceTriple&) = default;
};

/// Ascending single-party marginal eigenvalues.
struct MarginalSpectra {
  Spectrum lambda_a;
  Spectrum lambda_b;
  Spectrum lambda_c;
};

/// Throws NotDensityMatrix unless rho is Hermitian, has unit trace and no
/// eigenvalue below -opts.density_tol.
void require_density_matrix(const ComplexMatrix& rho, const MeasureOptions& opts = {});

/// Twice the summed magnitude of the eigenvalues below -threshold.
double negativity_from_spectrum(const Spectrum& pt_spectrum, double threshold = 1e-12);

/// Negativity of a bipartite density matrix, transposing the first factor.
double negativity(const ComplexMatrix& rho, BipartiteDims dims, const MeasureOptions& opts = {});

/// Negativity of the A|BC cut of a pure state from its Schmidt
/// coefficients: (sum_i sqrt(lambda_i))^2 - 1.
double pure_cut_negativity(const PureState& psi, const MeasureOptions& opts = {});

/// Squared negativities of rho_AC = Tr_B, rho_AB = Tr_C and the A|BC cut.
NegativityTriple negativity_triple(const PureState& psi, const MeasureOptions& opts = {});

/// 4 (a^2 + b^2 + c^2) d^2 for the canonical three-qubit form.
double n_abc_squared_closed_form(const AcinParams& p);

/// 2 sqrt(det rho_A); requires d_A = 2.
double concurrence_pure_cut(const PureState& psi);

/// Two-qubit concurrence max(0, mu1 - mu2 - mu3 - mu4), mu the descending
/// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const ComplexMatrix& rho, const MeasureOptions& opts = {});

/// Requires three qubits.
ConcurrenceTriple concurrence_triple(const PureState& psi, const MeasureOptions& opts = {});

/// z^2 - x^2 - y^2 in squared coordinates.
double monogamy_residual(const NegativityTriple& t) noexcept;
double monogamy_residual(const ConcurrenceTriple& t) noexcept;

MarginalSpectra marginal_spectra(const PureState& psi, const MeasureOptions& opts = {});

}  // namespace negmono
