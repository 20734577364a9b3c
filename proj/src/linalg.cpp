#include "xxz/linalg.hpp"

#include <cmath>

namespace xxz {

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: shape mismatch");
  CMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("sub: shape mismatch");
  CMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  CVector r(m.rows(), Complex{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

CVector vec_mat(const CVector& v, const CMatrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("vec_mat: shape mismatch");
  CVector r(m.cols(), Complex{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Complex vi = v[i];
    if (vi == Complex{}) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += vi * m(i, j);
  }
  return r;
}

Complex dot(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const CMatrix& m) {
  double r = 0.0;
  for (const auto& x : m.data()) r = std::max(r, std::abs(x));
  return r;
}

double max_abs(const CVector& v) {
  double r = 0.0;
  for (const auto& x : v) r = std::max(r, std::abs(x));
  return r;
}

namespace {

// LU with partial pivoting, in place. Returns permutation sign, or 0 if a
// pivot column is exactly zero.
int lu_factor(CMatrix& m, std::vector<std::size_t>& piv) {
  const std::size_t n = m.rows();
  piv.resize(n);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv[k] = p;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    if (m(k, k) == Complex{}) return 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = m(i, k) / m(k, k);
      m(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return sign;
}

}  // namespace

Complex lu_determinant(CMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lu_determinant: non-square");
  if (m.rows() == 0) return Complex{1.0, 0.0};
  std::vector<std::size_t> piv;
  const int sign = lu_factor(m, piv);
  if (sign == 0) return Complex{};
  Complex det{static_cast<double>(sign), 0.0};
  for (std::size_t k = 0; k < m.rows(); ++k) det *= m(k, k);
  return det;
}

CVector lu_solve(CMatrix m, CVector rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lu_solve: non-square");
  if (m.rows() != rhs.size()) throw std::invalid_argument("lu_solve: rhs size");
  std::vector<std::size_t> piv;
  if (lu_factor(m, piv) == 0) throw std::runtime_error("lu_solve: singular matrix");
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k)
    if (piv[k] != k) std::swap(rhs[k], rhs[piv[k]]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) rhs[i] -= m(i, j) * rhs[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) rhs[ii] -= m(ii, j) * rhs[j];
    rhs[ii] /= m(ii, ii);
  }
  return rhs;
}

CMatrix inverse(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const std::size_t n = m.rows();
  CMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    CVector e(n, Complex{});
    e[j] = 1.0;
    CVector col = lu_solve(m, std::move(e));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

}  // namespace xxz
