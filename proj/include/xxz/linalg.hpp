#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace xxz {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Everything here is desk-scale
/// (oracle operators are at most 2^N x 2^N with N <= 12, determinant
/// formulas at most (N+2) x (N+2)), so no blocking or BLAS.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols, Complex fill = Complex{0.0, 0.0})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

using CVector = std::vector<Complex>;

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);

CVector mat_vec(const CMatrix& m, const CVector& v);
CVector vec_mat(const CVector& v, const CMatrix& m);
Complex dot(const CVector& a, const CVector& b);  // bilinear, no conjugation

double max_abs(const CMatrix& m);
double max_abs(const CVector& v);

/// det(m) via LU with partial pivoting on magnitude; permutation parity
/// tracked for the sign. Throws std::invalid_argument for non-square input.
Complex lu_determinant(CMatrix m);

/// Solves m x = rhs in place via LU with partial pivoting.
/// Throws std::runtime_error when a pivot vanishes.
CVector lu_solve(CMatrix m, CVector rhs);

CMatrix inverse(const CMatrix& m);

/// (a (x) b)[(i*p+k),(j*q+l)] = a[i,j] * b[k,l] with b of shape p x q.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace xxz
