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

#include "qcu/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "qcu/errors.hpp"

namespace qcu {

namespace {

// Result dimensions stay well below this for every workload in the project;
// kron on larger inputs signals a size error instead of allocating.
constexpr std::size_t kMaxDim = 1u << 16;

void check_finite(const std::vector<cplx>& entries, const char* what) {
  for (const cplx& v : entries) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError(std::string(what) + ": entries must be finite");
    }
  }
}

using EigenMap =
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

EigenMap as_eigen(const ComplexMatrix& a) {
  return EigenMap(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                  static_cast<Eigen::Index>(a.cols()));
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw ValidationError("ComplexMatrix: dimensions must be at least 1x1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw ValidationError("ComplexMatrix: dimensions must be at least 1x1");
  }
  if (data_.size() != rows * cols) {
    throw ValidationError("ComplexMatrix: entry count does not match rows*cols");
  }
  check_finite(data_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw ValidationError("ComplexMatrix: dimensions must be at least 1x1");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ValidationError("ComplexMatrix: ragged initializer rows");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  check_finite(data_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (cplx v : entries) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw ValidationError("matrix add: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw ValidationError("matrix subtract: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (cplx& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("matrix multiply: inner dimensions differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) {
  a *= scalar;
  return a;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() > kMaxDim / b.rows() || a.cols() > kMaxDim / b.cols()) {
    throw ValidationError("kron: result dimensions exceed the supported size");
  }
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(j, i) = std::conj(a(i, j));
    }
  }
  return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(j, i) = a(i, j);
    }
  }
  return c;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = std::conj(a(i, j));
    }
  }
  return c;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw ValidationError("trace: matrix must be square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

cplx permanent(const ComplexMatrix& a) {
  if (!a.is_square()) throw ValidationError("permanent: matrix must be square");
  const std::size_t n = a.rows();
  if (n > kPermanentMaxRows) {
    throw ValidationError("permanent: matrices above 12 rows are not supported");
  }
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) + a(0, 1) * a(1, 0);
  if (n == 3) {
    return a(0, 0) * (a(1, 1) * a(2, 2) + a(1, 2) * a(2, 1)) +
           a(0, 1) * (a(1, 0) * a(2, 2) + a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) + a(1, 1) * a(2, 0));
  }

  // Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij.
  // Gray-code enumeration updates the row sums by a single column per step.
  std::vector<cplx> row_sum(n, cplx(0.0, 0.0));
  cplx total = 0.0;
  std::uint32_t gray_prev = 0;
  double sign = 1.0; // (-1)^|S|, starts from |S|=1 after the first toggle
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t k = 1; k < limit; ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t changed = gray ^ gray_prev;
    const int col = std::countr_zero(changed);
    const double dir = (gray & changed) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      row_sum[i] += dir * a(i, static_cast<std::size_t>(col));
    }
    sign = -sign;
    cplx prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sum[i];
    total += sign * prod;
    gray_prev = gray;
  }
  const double outer = (n % 2 == 0) ? 1.0 : -1.0;
  return outer * total;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) throw ValidationError("is_unitary: matrix must be square");
  if (!(tol > 0.0)) throw ValidationError("is_unitary: tolerance must be positive");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        dot += std::conj(a(k, i)) * a(k, j);
      }
      if (i == j) dot -= 1.0;
      if (std::abs(dot) >= tol) return false;
    }
  }
  return true;
}

cplx determinant(const ComplexMatrix& a) {
  if (!a.is_square()) throw ValidationError("determinant: matrix must be square");
  if (a.rows() == 1) return a(0, 0);
  if (a.rows() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return as_eigen(a).determinant();
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const cplx& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_diff_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff_up_to_phase: shape mismatch");
  }
  // The distance min_psi max|a - e^{i psi} b| is evaluated at the
  // least-squares phase e^{i psi} = <b, a> / |<b, a>|.
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    overlap += std::conj(b.data()[i]) * a.data()[i];
  }
  const cplx phase = (std::abs(overlap) < std::numeric_limits<double>::min())
                         ? cplx(1.0, 0.0)
                         : overlap / std::abs(overlap);
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - phase * b.data()[i]));
  }
  return m;
}

HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw ValidationError("hermitian_eigensystem: matrix must be square");
  }
  const std::size_t n = a.rows();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigensystem: eigensolver failed");
  }
  HermitianEigenSystem out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.eigenvectors(i, j) =
          solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(as_eigen(a));
  std::vector<double> s(svd.singularValues().data(),
                        svd.singularValues().data() + svd.singularValues().size());
  return s;
}

} // namespace qcu
