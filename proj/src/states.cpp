#include "negmono/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "negmono/error.hpp"

namespace negmono {

namespace {

void require_nonnegative(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, std::string(what) + " amplitudes must be finite and >= 0");
    }
  }
}

void require_unit(double norm_sq, const char* what) {
  if (!(std::abs(norm_sq - 1.0) <= kParamNormTolerance)) {
    throw Error(ErrorKind::NotNormalized,
                std::string(what) + " parameters have squared norm " + std::to_string(norm_sq));
  }
}

void require_dimension(int D) {
  if (D < 2) throw Error(ErrorKind::InvalidArgument, "local dimension D must be >= 2");
}

}  // namespace

double AcinParams::norm_squared() const noexcept {
  return a * a + b * b + c * c + d * d + std::norm(omega);
}

void AcinParams::validate() const {
  require_nonnegative({a, b, c, d}, "canonical-form");
  require_unit(norm_squared(), "canonical-form");
}

AcinParams AcinParams::normalized(double a, double b, double c, double d, Complex omega) {
  require_nonnegative({a, b, c, d}, "canonical-form");
  const double n = std::sqrt(a * a + b * b + c * c + d * d + std::norm(omega));
  if (!(n > 0.0)) throw Error(ErrorKind::NotNormalizable, "all canonical-form amplitudes are zero");
  return AcinParams{a / n, b / n, c / n, d / n, omega / n};
}

double QuditFamilyParams::norm_squared() const noexcept {
  return d * d + (D - 1) * (a * a + b * b + c * c);
}

void QuditFamilyParams::validate() const {
  require_dimension(D);
  require_nonnegative({a, b, c, d}, "qudit-family");
  require_unit(norm_squared(), "qudit-family");
}

QuditFamilyParams QuditFamilyParams::normalized(int D, double a, double b, double c, double d) {
  require_dimension(D);
  require_nonnegative({a, b, c, d}, "qudit-family");
  const double n = std::sqrt(d * d + (D - 1) * (a * a + b * b + c * c));
  if (!(n > 0.0)) throw Error(ErrorKind::NotNormalizable, "all qudit-family amplitudes are zero");
  return QuditFamilyParams{D, a / n, b / n, c / n, d / n};
}

double SwapFamilyParams::b() const noexcept {
  return std::sqrt(std::max(0.0, 1.0 - d * d) / (D - 1));
}

void SwapFamilyParams::validate() const {
  require_dimension(D);
  if (!(d >= 0.0 && d <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "swap-family amplitude d must lie in [0, 1]");
  }
  if (!std::isfinite(theta)) throw Error(ErrorKind::InvalidArgument, "swap angle must be finite");
}

PureState acin_state(const AcinParams& p) {
  p.validate();
  std::vector<Complex> amps(8);
  const PureState::Dims dims{2, 2, 2};
  auto at = [](int i, int j, int k) { return static_cast<std::size_t>(4 * i + 2 * j + k); };
  amps[at(0, 0, 0)] = p.d;
  amps[at(1, 0, 0)] = p.omega;
  amps[at(1, 0, 1)] = p.a;
  amps[at(1, 1, 0)] = p.b;
  amps[at(1, 1, 1)] = p.c;
  return PureState(dims, std::move(amps));
}

PureState qudit_family_state(const QuditFamilyParams& p) {
  p.validate();
  const auto D = static_cast<std::size_t>(p.D);
  PureState::Dims dims{D, D, D};
  std::vector<Complex> amps(D * D * D);
  auto at = [D](std::size_t i, std::size_t j, std::size_t k) { return (i * D + j) * D + k; };
  amps[at(0, 0, 0)] = p.d;
  for (std::size_t j = 1; j < D; ++j) {
    amps[at(j, 0, j)] = p.a;
    amps[at(j, j, 0)] = p.b;
    amps[at(j, j, j)] = p.c;
  }
  return PureState(dims, std::move(amps));
}

PureState swap_family_state(const SwapFamilyParams& p) {
  p.validate();
  const auto D = static_cast<std::size_t>(p.D);
  PureState::Dims dims{D, D, D};
  std::vector<Complex> amps(D * D * D);
  auto at = [D](std::size_t i, std::size_t j, std::size_t k) { return (i * D + j) * D + k; };
  const double b = p.b();
  amps[at(0, 0, 0)] = p.d * std::exp(Complex(0.0, p.theta));
  for (std::size_t j = 1; j < D; ++j) {
    amps[at(j, j, 0)] = b * std::cos(p.theta);
    amps[at(j, 0, j)] = Complex(0.0, b * std::sin(p.theta));
  }
  return PureState(dims, std::move(amps));
}

PureState haar_random_pure(const PureState::Dims& dims, Rng& rng) {
  const std::size_t n = dims[0] * dims[1] * dims[2];
  std::vector<Complex> amps(n);
  for (auto& z : amps) z = complex_gaussian(rng);
  return PureState::normalized(dims, std::move(amps));
}

PureState haar_random_pure(const PureState::Dims& dims, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return haar_random_pure(dims, rng);
}

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  // Modified Gram-Schmidt on the columns of a Ginibre matrix. Choosing each
  // column's normalization as a positive real number is equivalent to
  // fixing R's diagonal positive, which is what makes the result Haar.
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (auto& col : cols)
    for (auto& z : col) z = complex_gaussian(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj{};
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
    }
    double norm = 0.0;
    for (const auto& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[j]) z /= norm;
  }
  ComplexMatrix u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
  return u;
}

NamedState parse_named_state(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ghz") return NamedState::GHZ;
  if (lower == "w") return NamedState::W;
  if (lower == "product") return NamedState::Product;
  throw Error(ErrorKind::UnknownName, "unknown named state '" + std::string(name) + "'");
}

PureState named_state(NamedState which) {
  const PureState::Dims dims{2, 2, 2};
  std::vector<Complex> amps(8);
  switch (which) {
    case NamedState::GHZ:
      amps[0b000] = amps[0b111] = 1.0 / std::sqrt(2.0);
      break;
    case NamedState::W:
      amps[0b001] = amps[0b010] = amps[0b100] = 1.0 / std::sqrt(3.0);
      break;
    case NamedState::Product:
      amps[0b000] = 1.0;
      break;
  }
  return PureState(dims, std::move(amps));
}

}  // namespace negmono
