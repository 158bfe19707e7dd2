#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tqsim/kernels.hpp"

namespace tqsim {

using cd = std::complex<double>;

// Dense row-major complex matrix. Products go through the kernel layer.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cd(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diag(const std::vector<cd>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cd& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const cd* data() const { return data_.data(); }
  cd* data() { return data_.data(); }

  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix operator*(cd scalar) const;

  std::vector<cd> apply(const std::vector<cd>& x) const;

  CMatrix adjoint() const;
  CMatrix kron(const CMatrix& rhs) const;
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  cd trace() const;
  double max_abs() const;
  double max_abs_diff(const CMatrix& rhs) const;
  bool approx_equal(const CMatrix& rhs, double tol) const;

  // max |U^dag U - I|, elementwise.
  double unitarity_defect() const;

 private:
  std::size_t rows_, cols_;
  std::vector<cd> data_;
};

// Eigenvalues of a Hermitian matrix, ascending. Uses a cyclic Jacobi sweep on
// the real symmetric embedding [[Re, -Im], [Im, Re]]; each eigenvalue of the
// input appears twice, duplicates are collapsed.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

// Operator norm: sqrt(max eigenvalue of A^dag A).
double operator_norm(const CMatrix& a);
// Modified operator norm: sqrt(min eigenvalue of A^dag A).
double operator_norm_min(const CMatrix& a);

}  // namespace tqsim
