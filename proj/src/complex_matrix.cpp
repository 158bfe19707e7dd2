#include "tqsim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqsim {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cd(1.0, 0.0);
  return m;
}

CMatrix CMatrix::diag(const std::vector<cd>& entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  CMatrix out(rows_, rhs.cols_);
  kern::cgemm(data_.data(), rhs.data_.data(), out.data_.data(), rows_, cols_, rhs.cols_);
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

CMatrix CMatrix::operator*(cd scalar) const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

std::vector<cd> CMatrix::apply(const std::vector<cd>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<cd> y(rows_);
  kern::cgemv(data_.data(), x.data(), y.data(), rows_, cols_);
  return y;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

CMatrix CMatrix::kron(const CMatrix& rhs) const {
  CMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const cd a = at(i, j);
      if (a == cd(0.0, 0.0)) continue;
      for (std::size_t p = 0; p < rhs.rows_; ++p)
        for (std::size_t q = 0; q < rhs.cols_; ++q)
          out.at(i * rhs.rows_ + p, j * rhs.cols_ + q) = a * rhs.at(p, q);
    }
  return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                       std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    throw std::invalid_argument("block out of range");
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

cd CMatrix::trace() const {
  cd t(0.0, 0.0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cd& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix diff dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
  return m;
}

bool CMatrix::approx_equal(const CMatrix& rhs, double tol) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && max_abs_diff(rhs) <= tol;
}

double CMatrix::unitarity_defect() const {
  return (adjoint() * (*this)).max_abs_diff(identity(cols_));
}

namespace {

// Cyclic Jacobi for a real symmetric matrix stored densely.
std::vector<double> jacobi_symmetric(std::vector<double> s, std::size_t n) {
  auto a = [&](std::size_t i, std::size_t j) -> double& { return s[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - sn * aiq;
          a(i, q) = sn * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - sn * aqi;
          a(q, i) = sn * api + c * aqi;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
  std::vector<double> s(4 * n * n, 0.0);
  const std::size_t m = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = h.at(i, j).real();
      const double im = h.at(i, j).imag();
      s[i * m + j] = re;
      s[(i + n) * m + (j + n)] = re;
      s[i * m + (j + n)] = -im;
      s[(i + n) * m + j] = im;
    }
  std::vector<double> doubled = jacobi_symmetric(std::move(s), m);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eig;
}

double operator_norm(const CMatrix& a) {
  std::vector<double> eig = hermitian_eigenvalues(a.adjoint() * a);
  return std::sqrt(std::max(0.0, eig.back()));
}

double operator_norm_min(const CMatrix& a) {
  std::vector<double> eig = hermitian_eigenvalues(a.adjoint() * a);
  return std::sqrt(std::max(0.0, eig.front()));
}

}  // namespace tqsim
