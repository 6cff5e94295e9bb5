#pragma once

#include <complex>
#include <random>
#include <vector>

#include "negmono/linalg.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline std::vector<std::complex<double>> random_amplitudes(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  std::vector<std::complex<double>> v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = {g(gen), g(gen)};
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

inline negmono::PureState random_state(std::size_t D, std::mt19937_64& gen) {
  return negmono::PureState({D, D, D}, random_amplitudes(D * D * D, gen));
}

inline std::vector<std::complex<double>> amps_of(const negmono::PureState& psi) {
  return {psi.amplitudes().begin(), psi.amplitudes().end()};
}

inline oracle::Mat to_oracle(const negmono::ComplexMatrix& m) {
  oracle::Mat out = oracle::zeros(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out[i][j] = m(i, j);
  return out;
}

inline negmono::ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  negmono::ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(gen);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = {g(gen), g(gen)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Oracle squared-negativity triple of a three-qubit state: pair values from
/// characteristic-polynomial eigenvalues, the cut from 4 det rho_A.
struct OracleTriple {
  double n_ac_sq, n_ab_sq, n_abc_sq;
};

inline OracleTriple oracle_triple(const std::vector<std::complex<double>>& psi) {
  const auto ac = oracle::eigenvalues(oracle::partial_transpose_first(oracle::reduced_pair(psi, 2, 0, 2), 2));
  const auto ab = oracle::eigenvalues(oracle::partial_transpose_first(oracle::reduced_pair(psi, 2, 0, 1), 2));
  const auto ra = oracle::reduced_single(psi, 2, 0);
  const double det_a = (ra[0][0] * ra[1][1] - ra[0][1] * ra[1][0]).real();
  const double n_ac = oracle::negativity_of(ac);
  const double n_ab = oracle::negativity_of(ab);
  return {n_ac * n_ac, n_ab * n_ab, 4.0 * det_a};
}

}  // namespace testing_helpers
