#pragma once

// Three-qudit generalization of the boundary states,
//   d|000> + sum_{j=1}^{D-1} (a|j0j> + b|jj0> + c|jjj>).

#include <array>
#include <cstddef>
#include <vector>

#include "negmono/linalg.hpp"
#include "negmono/measures.hpp"
#include "negmono/states.hpp"

namespace negmono {

enum class PartyPair { AC, AB };

/// rho^{T_A} of a family member is, up to permutation,
///   (d^2) (+) [(D-1)(D-2)/2 copies of [[0, a^2], [a^2, 0]]]
///         (+) [D-1 copies of [[0, ad, 0], [ad, b^2, bc], [0, bc, a^2 + c^2]]]
/// for the A|C pair; the A|B pair swaps a and b.
struct PtBlockDecomposition {
  int D = 2;
  double scalar_block = 0.0;
  double offdiag_value = 0.0;
  std::size_t offdiag_count = 0;
  std::array<std::array<double, 3>, 3> triple_block{};
  std::size_t triple_count = 0;

  std::size_t dimension() const noexcept { return 1 + 2 * offdiag_count + 3 * triple_count; }

  /// Multiset union of the block spectra, ascending.
  Spectrum spectrum(const EigenOptions& eig = {}) const;

  /// Product of the block determinants.
  double determinant() const;
};

PtBlockDecomposition pt_block_decompose(const QuditFamilyParams& p, PartyPair pair);

/// Unsquared (N_{A|C}, N_{A|B}, N_{A|BC}).
struct QuditNegativities {
  double n_ac = 0.0;
  double n_ab = 0.0;
  double n_abc = 0.0;

  NegativityTriple squared() const noexcept { return {n_ac * n_ac, n_ab * n_ab, n_abc * n_abc}; }
};

/// Pairwise values from the block spectra, the A|BC value from the Schmidt
/// coefficients {d^2, (a^2 + b^2 + c^2) x (D-1)}.
QuditNegativities qudit_negativity_triple(const QuditFamilyParams& p,
                                          const MeasureOptions& opts = {});

/// 2(D-1) d sqrt(a^2+b^2+c^2) + (D-1)(D-2)(a^2+b^2+c^2).
double n_abc_closed_form(const QuditFamilyParams& p);

/// (det rho_AC^{T_A}, det rho_AB^{T_A}) in closed form:
///   (-1)^floor(D/2) d^2 (a^2 (a^2 + c^2) d^2)^(D-1) a^(2(D-1)(D-2))
/// and the same with a and b exchanged. Each 3x3 block contributes
/// -a^2 d^2 (a^2 + c^2), hence the a^2 inside the (D-1)th power.
std::array<double, 2> pt_determinants(const QuditFamilyParams& p);

/// The determinant expression without the a^2 (b^2) inside the (D-1)th
/// power. Disagrees with the brute-force determinant, including at D = 2.
std::array<double, 2> pt_determinants_as_printed(const QuditFamilyParams& p);

/// Marginal eigenvalue condition for three D-level parties: for party P,
/// S(Q) + S(R) - S(P), S the sum of the D-1 smallest marginal eigenvalues.
struct HiguchiResiduals {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

HiguchiResiduals higuchi_residual(const MarginalSpectra& s);

/// c = 0 family with a = alpha t, b = beta t at a prescribed d; t fixed by
/// normalization. alpha = beta = 0 forces d = 1.
QuditFamilyParams asymptotic_params(int D, double alpha, double beta, double d);

struct AsymptoticResult {
  QuditFamilyParams params;
  QuditNegativities exact;
  /// Largest relative deviation of the exact triple from D^2 (a^2, b^2, a^2 + b^2).
  double r_leading = 0.0;
  /// |N_{A|BC} - N_{A|B} - N_{A|C}| / N_{A|BC}.
  double r_linear = 0.0;
};

inline constexpr double kDefaultAsymptoticKappa = 1.5;

/// Large-D comparison at d = kappa / sqrt(D), which keeps every amplitude
/// squared at order 1/D and the state on the bounding side (kappa > 1).
AsymptoticResult asymptotic_check(int D, double alpha, double beta,
                                  double kappa = kDefaultAsymptoticKappa);

/// Same comparison at an explicit d (e.g. held fixed while D grows).
AsymptoticResult asymptotic_check_at(int D, double alpha, double beta, double d);

/// Family parameters with the same negativities as the swap-rotated state:
/// a = b_swap |sin theta|, b = b_swap |cos theta|, c = 0.
QuditFamilyParams swap_as_family(const SwapFamilyParams& p);

struct SwapScanPoint {
  double d = 0.0;
  double theta = 0.0;
  NegativityTriple triple;
  /// d < 1/sqrt(D): the non-bounding fold.
  bool fold = false;
};

/// grid x grid samples of d in [0, 1] and theta in [0, pi/2], row-major in
/// d; triples from the full reduced-state eigenvalue computation.
std::vector<SwapScanPoint> swap_surface_scan(int D, std::size_t grid, unsigned threads = 1,
                                             const MeasureOptions& opts = {});

}  // namespace negmono
