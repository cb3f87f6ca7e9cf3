/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef QCU_MATRIX_HPP_
#define QCU_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcu {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. All matrices in this project are
/// small (at most a few thousand rows for circuit simulation, typically 2x2
/// to 4x4), so there is no sparse or blocked path. Entries must stay finite;
/// constructors and deserialization enforce it, arithmetic does not re-check.
class ComplexMatrix {
public:
  /// 1x1 zero matrix. A zero-dimensional matrix is not representable.
  ComplexMatrix() : rows_(1), cols_(1), data_(1, cplx(0.0, 0.0)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  /// Row-wise brace construction: ComplexMatrix{{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::initializer_list<cplx> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx>& data() const noexcept { return data_; }
  std::vector<cplx>& data() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scalar);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);

/// Kronecker (tensor) product; result((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);

/// Matrix permanent via Ryser's inclusion-exclusion with Gray-code row-sum
/// updates (O(2^n * n)); closed forms for n <= 3. Square input up to 12 rows.
cplx permanent(const ComplexMatrix& a);

inline constexpr std::size_t kPermanentMaxRows = 12;

/// True iff the max-norm of (a^dagger a - I) is below tol.
bool is_unitary(const ComplexMatrix& a, double tol);

cplx determinant(const ComplexMatrix& a);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& a);

/// Largest absolute entrywise difference between same-shaped matrices.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

/// Entrywise comparison against b scaled by the phase that makes the pair
/// best aligned; returns the max-norm of (a - e^{i phase} b). Used wherever
/// gates are compared "up to global phase".
double max_abs_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigenSystem {
  std::vector<double> eigenvalues; // ascending
  ComplexMatrix eigenvectors;      // columns, matching eigenvalue order
};

/// Eigendecomposition of a Hermitian matrix (input is Hermitized first).
HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& a);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& a);

} // namespace qcu

#endif // QCU_MATRIX_HPP_
