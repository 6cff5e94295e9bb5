#pragma once

// Dense complex linear algebra for small systems. This is the oracle layer:
// every closed form elsewhere in the library is checked against the
// partial transposes and eigenvalues computed here.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace negmono {

using Complex = std::complex<double>;

/// Upper bound on rows*cols for any matrix built by the library.
inline constexpr std::size_t kMaxMatrixEntries = 4096;

/// Square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<Complex> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return n_; }
  std::size_t cols() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;

  /// True when every |m_ij - conj(m_ji)| <= tol.
  bool is_hermitian(double tol = 1e-12) const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real eigenvalues sorted ascending.
struct Spectrum {
  std::vector<double> values;

  double sum() const noexcept;
  double min() const noexcept;
  double max() const noexcept;
  std::size_t size() const noexcept { return values.size(); }
};

/// Eigenvalues plus the unitary whose columns are the matching eigenvectors.
struct EigenSystem {
  Spectrum spectrum;
  ComplexMatrix vectors;
};

struct EigenOptions {
  /// Sweeps stop once the off-diagonal Frobenius norm drops below
  /// off_diagonal_tol times the Frobenius norm of the input.
  double off_diagonal_tol = 1e-13;
  int max_sweeps = 100;
  double hermitian_tol = 1e-10;
};

/// Kronecker product; entry (i*nb + k, j*nb + l) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

using BipartiteDims = std::array<std::size_t, 2>;

enum class Keep { First, Second };

/// Reduced state of a bipartite operator on d_A x d_B.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Keep keep);

/// Reduced state of a multipartite operator; `keep` lists factor indices in
/// increasing order. The kept factors retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Transpose on the first (A) factor: <i,j|out|k,l> = <k,j|rho|i,l>.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims);

/// Cyclic complex Jacobi. Throws NotHermitian when m deviates from m^dagger
/// by more than opts.hermitian_tol.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, const EigenOptions& opts = {});
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const EigenOptions& opts = {});

/// LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);

/// Normalized vector over a three-factor space, amplitudes in lexicographic
/// |ijk> order with A the most significant factor.
class PureState {
 public:
  using Dims = std::array<std::size_t, 3>;

  /// Checks only that the amplitude count matches the dimensions; use
  /// norm_deviation() or the consuming operations to police normalization.
  PureState(Dims dims, std::vector<Complex> amplitudes);

  /// Rescales to unit norm. Throws NotNormalizable for the zero vector.
  static PureState normalized(Dims dims, std::vector<Complex> amplitudes);

  const Dims& dims() const noexcept { return dims_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * dims_[1] + j) * dims_[2] + k;
  }
  Complex amplitude(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return amps_[index(i, j, k)];
  }

  double norm() const noexcept;
  double norm_deviation() const noexcept;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  Dims dims_;
  std::vector<Complex> amps_;
};

/// Tolerance on | ||psi|| - 1 | accepted by operations consuming a PureState.
inline constexpr double kNormTolerance = 1e-8;

/// Throws NotNormalized when psi is off unit norm by more than kNormTolerance.
void require_normalized(const PureState& psi);

/// |psi><psi| over the full d_A d_B d_C space.
ComplexMatrix density_from_pure(const PureState& psi);

/// Reduced density matrix on the listed factors (0 = A, 1 = B, 2 = C),
/// computed straight from the amplitudes without forming |psi><psi|.
ComplexMatrix reduced_density(const PureState& psi, std::span<const std::size_t> keep);

/// (U_A x U_B x U_C) |psi>.
PureState apply_local_unitaries(const PureState& psi, const ComplexMatrix& ua,
                                const ComplexMatrix& ub, const ComplexMatrix& uc);

}  // namespace negmono
