#pragma once

#include <cstdint>
#include <string_view>

#include "negmono/linalg.hpp"
#include "negmono/random.hpp"

namespace negmono {

/// Coefficients of the five-term canonical form
///   d|000> + omega|100> + a|101> + b|110> + c|111>.
struct AcinParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;
  Complex omega{};

  /// a^2 + b^2 + c^2 + d^2 + |omega|^2.
  double norm_squared() const noexcept;

  /// Throws InvalidArgument for negative amplitudes and NotNormalized when
  /// norm_squared() is off 1 by more than 1e-12.
  void validate() const;

  /// Rescales (a, b, c, d, omega) to unit norm; negative inputs are rejected.
  static AcinParams normalized(double a, double b, double c, double d, Complex omega = {});
};

/// d|000> + sum_{j=1}^{D-1} (a|j0j> + b|jj0> + c|jjj>) on three D-level systems.
struct QuditFamilyParams {
  int D = 2;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  /// d^2 + (D-1)(a^2 + b^2 + c^2).
  double norm_squared() const noexcept;
  void validate() const;
  static QuditFamilyParams normalized(int D, double a, double b, double c, double d);
};

/// State reached by rotating the A-B maximally entangled family with the
/// B-C swap Hamiltonian for angle theta.
struct SwapFamilyParams {
  int D = 2;
  double d = 1.0;
  double theta = 0.0;

  /// sqrt((1 - d^2) / (D - 1)).
  double b() const noexcept;
  void validate() const;
};

/// Tolerance on the parameter normalization of the state families.
inline constexpr double kParamNormTolerance = 1e-12;

PureState acin_state(const AcinParams& p);
PureState qudit_family_state(const QuditFamilyParams& p);
PureState swap_family_state(const SwapFamilyParams& p);

/// Independent standard complex Gaussians, normalized. Deterministic in seed.
PureState haar_random_pure(const PureState::Dims& dims, std::uint64_t seed);
PureState haar_random_pure(const PureState::Dims& dims, Rng& rng);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the
/// diagonal phases of R divided out).
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

enum class NamedState { GHZ, W, Product };

/// Parses "ghz", "w", "product" (case-insensitive). Throws UnknownName.
NamedState parse_named_state(std::string_view name);

/// (|000> + |111>)/sqrt2, (|001> + |010> + |100>)/sqrt3, or |000>.
PureState named_state(NamedState which);

}  // namespace negmono
