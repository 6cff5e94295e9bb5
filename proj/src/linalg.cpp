#include "negmono/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "negmono/error.hpp"

namespace negmono {

namespace {

void check_size(std::size_t n) {
  if (n * n > kMaxMatrixEntries) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix of dimension " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxMatrixEntries) + " entries");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "operands have dimensions " +
                                                  std::to_string(a.dimension()) + " and " +
                                                  std::to_string(b.dimension()));
  }
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n) {
  check_size(n);
  data_.assign(n * n, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> row_major)
    : n_(n), data_(std::move(row_major)) {
  check_size(n);
  if (data_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n * n) +
                                                  " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(data));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) noexcept {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_shape(lhs, rhs);
  const std::size_t n = lhs.dimension();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double Spectrum::sum() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

double Spectrum::min() const noexcept { return values.empty() ? 0.0 : values.front(); }
double Spectrum::max() const noexcept { return values.empty() ? 0.0 : values.back(); }

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dimension();
  const std::size_t nb = b.dimension();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Keep keep) {
  const std::array<std::size_t, 1> kept{keep == Keep::First ? std::size_t{0} : std::size_t{1}};
  return partial_trace(rho, dims, kept);
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t total = product(dims);
  if (rho.dimension() != total) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator dimension " + std::to_string(rho.dimension()) +
                    " does not match factor product " + std::to_string(total));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t f : keep) {
    if (f >= dims.size()) throw Error(ErrorKind::DimensionMismatch, "kept factor out of range");
    kept[f] = true;
  }

  // Split every full index into (kept index, traced index).
  std::vector<std::size_t> kept_index(total), traced_index(total);
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (kept[f]) kept_dim *= dims[f];
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::size_t k = 0, t = 0, kscale = 1, tscale = 1;
    for (std::size_t f = dims.size(); f-- > 0;) {
      const std::size_t digit = rem % dims[f];
      rem /= dims[f];
      if (kept[f]) {
        k += digit * kscale;
        kscale *= dims[f];
      } else {
        t += digit * tscale;
        tscale *= dims[f];
      }
    }
    kept_index[idx] = k;
    traced_index[idx] = t;
  }

  ComplexMatrix out(kept_dim);
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += rho(r, c);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims) {
  const auto [da, db] = dims;
  if (rho.dimension() != da * db) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator dimension " + std::to_string(rho.dimension()) + " is not " +
                    std::to_string(da) + "x" + std::to_string(db));
  }
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + j, k * db + l) = rho(k * db + j, i * db + l);
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.dimension();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// Complex Jacobi rotation J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] in the
// (p, q) plane; J^dagger A J has a zero (p, q) entry.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double abs_g = std::abs(g);
  if (abs_g == 0.0) return;
  const Complex phase = g / abs_g;  // e^{i phi}
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * abs_g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.dimension();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + jqp * akq;
    a(k, q) = s * akp + jqq * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = s * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = alpha - t * abs_g;
  a(q, q) = beta + t * abs_g;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp + jqp * vkq;
      (*v)(k, q) = s * vkp + jqq * vkq;
    }
  }
}

EigenSystem jacobi(const ComplexMatrix& m, bool want_vectors, const EigenOptions& opts) {
  if (!m.is_hermitian(opts.hermitian_tol)) {
    throw Error(ErrorKind::NotHermitian, "matrix deviates from its adjoint by more than " +
                                             std::to_string(opts.hermitian_tol));
  }
  const std::size_t n = m.dimension();
  // Work on the exactly Hermitian part so the rotations stay unitary-consistent.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double scale = a.frobenius_norm();

  if (scale > 0.0) {
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      if (off_diagonal_norm(a) <= opts.off_diagonal_tol * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, want_vectors ? &v : nullptr, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.spectrum.values.reserve(n);
  for (std::size_t i : order) out.spectrum.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, const EigenOptions& opts) {
  return jacobi(m, false, opts).spectrum;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const EigenOptions& opts) {
  return jacobi(m, true, opts);
}

Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dimension();
  ComplexMatrix lu(m);
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(lu(pivot, k), lu(col, k));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t k = col; k < n; ++k) lu(r, k) -= f * lu(col, k);
    }
  }
  return det;
}

PureState::PureState(Dims dims, std::vector<Complex> amplitudes)
    : dims_(dims), amps_(std::move(amplitudes)) {
  for (std::size_t d : dims_)
    if (d == 0) throw Error(ErrorKind::DimensionMismatch, "factor dimensions must be positive");
  if (amps_.size() != dims_[0] * dims_[1] * dims_[2]) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(dims_[0] * dims_[1] * dims_[2]) +
                    " amplitudes, got " + std::to_string(amps_.size()));
  }
}

PureState PureState::normalized(Dims dims, std::vector<Complex> amplitudes) {
  PureState psi(dims, std::move(amplitudes));
  const double n = psi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::NotNormalizable, "state vector has zero or non-finite norm");
  }
  for (auto& z : psi.amps_) z /= n;
  return psi;
}

double PureState::norm() const noexcept {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

double PureState::norm_deviation() const noexcept { return std::abs(norm() - 1.0); }

void require_normalized(const PureState& psi) {
  if (!(psi.norm_deviation() <= kNormTolerance)) {
    throw Error(ErrorKind::NotNormalized,
                "state norm deviates from 1 by " + std::to_string(psi.norm_deviation()));
  }
}

ComplexMatrix density_from_pure(const PureState& psi) {
  require_normalized(psi);
  const auto amps = psi.amplitudes();
  const std::size_t n = amps.size();
  ComplexMatrix rho(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = amps[i] * std::conj(amps[j]);
  return rho;
}

ComplexMatrix reduced_density(const PureState& psi, std::span<const std::size_t> keep) {
  const auto& dims = psi.dims();
  std::array<bool, 3> kept{false, false, false};
  for (std::size_t f : keep) {
    if (f >= 3) throw Error(ErrorKind::DimensionMismatch, "kept factor out of range");
    kept[f] = true;
  }
  std::size_t kept_dim = 1, traced_dim = 1;
  for (std::size_t f = 0; f < 3; ++f) (kept[f] ? kept_dim : traced_dim) *= dims[f];

  // Reshape the amplitudes into a kept_dim x traced_dim block M; rho = M M^dagger.
  std::vector<Complex> block(kept_dim * traced_dim);
  const auto amps = psi.amplitudes();
  for (std::size_t i = 0; i < dims[0]; ++i)
    for (std::size_t j = 0; j < dims[1]; ++j)
      for (std::size_t k = 0; k < dims[2]; ++k) {
        const std::array<std::size_t, 3> digit{i, j, k};
        std::size_t row = 0, col = 0;
        for (std::size_t f = 0; f < 3; ++f) {
          if (kept[f])
            row = row * dims[f] + digit[f];
          else
            col = col * dims[f] + digit[f];
        }
        block[row * traced_dim + col] = amps[psi.index(i, j, k)];
      }

  ComplexMatrix rho(kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r)
    for (std::size_t c = r; c < kept_dim; ++c) {
      Complex s{};
      for (std::size_t t = 0; t < traced_dim; ++t)
        s += block[r * traced_dim + t] * std::conj(block[c * traced_dim + t]);
      rho(r, c) = s;
      rho(c, r) = std::conj(s);
    }
  return rho;
}

PureState apply_local_unitaries(const PureState& psi, const ComplexMatrix& ua,
                                const ComplexMatrix& ub, const ComplexMatrix& uc) {
  const auto& dims = psi.dims();
  if (ua.dimension() != dims[0] || ub.dimension() != dims[1] || uc.dimension() != dims[2]) {
    throw Error(ErrorKind::DimensionMismatch, "local unitary dimensions do not match the state");
  }
  const std::array<const ComplexMatrix*, 3> us{&ua, &ub, &uc};
  std::vector<Complex> cur(psi.amplitudes().begin(), psi.amplitudes().end());
  std::vector<Complex> next(cur.size());
  // Apply one factor at a time: stride[f] is the index step of factor f.
  const std::array<std::size_t, 3> stride{dims[1] * dims[2], dims[2], 1};
  for (std::size_t f = 0; f < 3; ++f) {
    const ComplexMatrix& u = *us[f];
    std::fill(next.begin(), next.end(), Complex{});
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      const std::size_t digit = (idx / stride[f]) % dims[f];
      const std::size_t base = idx - digit * stride[f];
      for (std::size_t r = 0; r < dims[f]; ++r) next[base + r * stride[f]] += u(r, digit) * cur[idx];
    }
    std::swap(cur, next);
  }
  return PureState(dims, std::move(cur));
}

}  // namespace negmono
