#include "xxz/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

// Two-site operator op4 on qubits (qa, qb) of an nq-qubit register,
// qubit 0 leftmost in the tensor order. op4 row/col index = 2*bit(qa)+bit(qb).
CMatrix embed_two(const CMatrix& op4, int qa, int qb, int nq) {
  const std::size_t dim = std::size_t{1} << nq;
  const int sa = nq - 1 - qa;  // shift of qubit qa's bit
  const int sb = nq - 1 - qb;
  CMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const int ca = static_cast<int>((c >> sa) & 1u);
    const int cb = static_cast<int>((c >> sb) & 1u);
    for (int ra = 0; ra < 2; ++ra)
      for (int rb = 0; rb < 2; ++rb) {
        const Complex v = op4(static_cast<std::size_t>(2 * ra + rb),
                              static_cast<std::size_t>(2 * ca + cb));
        if (v == Complex{}) continue;
        std::size_t r = c;
        r = (r & ~(std::size_t{1} << sa)) | (static_cast<std::size_t>(ra) << sa);
        r = (r & ~(std::size_t{1} << sb)) | (static_cast<std::size_t>(rb) << sb);
        m(r, c) += v;
      }
  }
  return m;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

Oracle::Oracle(ChainParams p) : p_(std::move(p)) {
  p_.require_valid();
  if (p_.n > 12) throw std::invalid_argument("Oracle: N > 12 exceeds the dense cap");
  dim_ = std::size_t{1} << p_.n;
}

CMatrix Oracle::pauli_x() {
  CMatrix m(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}
CMatrix Oracle::pauli_y() {
  CMatrix m(2, 2);
  m(0, 1) = Complex{0.0, -1.0};
  m(1, 0) = Complex{0.0, 1.0};
  return m;
}
CMatrix Oracle::pauli_z() {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
CMatrix Oracle::sigma_plus() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  return m;
}
CMatrix Oracle::sigma_minus() {
  CMatrix m(2, 2);
  m(1, 0) = 1.0;
  return m;
}

CMatrix Oracle::r_matrix(Complex u, Complex eta) {
  const Complex sh = std::sinh(eta);
  if (std::abs(sh) < kPoleTol) throw std::domain_error("r_matrix: sinh(eta) vanishes");
  const Complex b = std::sinh(u + eta) / sh;
  const Complex c = std::sinh(u) / sh;
  CMatrix r(4, 4);
  r(0, 0) = r(3, 3) = b;
  r(1, 1) = r(2, 2) = c;
  r(1, 2) = r(2, 1) = 1.0;
  return r;
}

CMatrix Oracle::site_op(const CMatrix& op2, int site) const {
  if (site < 1 || site > p_.n) throw std::invalid_argument("site_op: site out of range");
  CMatrix m = CMatrix::identity(1);
  for (int j = 1; j <= p_.n; ++j)
    m = kron(m, j == site ? op2 : CMatrix::identity(2));
  return m;
}

const MonodromyBlocks& Oracle::monodromy(Complex u) const {
  const auto key = std::make_pair(u.real(), u.imag());
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;

  const int nq = p_.n + 1;  // aux qubit 0, chain qubits 1..N
  CMatrix t = kron(pauli_x(), CMatrix::identity(dim_));
  for (int j = p_.n; j >= 1; --j)
    t = t * embed_two(r_matrix(u - p_.thetas[j - 1], p_.eta), 0, j, nq);

  MonodromyBlocks blk;
  blk.C = CMatrix(dim_, dim_);
  blk.D = CMatrix(dim_, dim_);
  blk.A = CMatrix(dim_, dim_);
  blk.B = CMatrix(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      blk.C(i, j) = t(i, j);
      blk.D(i, j) = t(i, dim_ + j);
      blk.A(i, j) = t(dim_ + i, j);
      blk.B(i, j) = t(dim_ + i, dim_ + j);
    }
  return blocks_.emplace(key, std::move(blk)).first->second;
}

CMatrix Oracle::transfer(Complex u) const { return monodromy(u).transfer(); }

const CMatrix& Oracle::hamiltonian() const {
  if (ham_built_) return ham_;
  if (p_.n < 2) throw std::invalid_argument("hamiltonian: N >= 2 required");
  const CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  CMatrix h(dim_, dim_);
  for (int j = 1; j <= p_.n; ++j) {
    const bool wrap = (j == p_.n);
    const int jn = wrap ? 1 : j + 1;
    // twisted boundary: sigma_{N+1}^a = sigma_1^x sigma_1^a sigma_1^x
    auto twist = [&](const CMatrix& op) { return wrap ? sx * op * sx : op; };
    h = h - (site_op(sx, j) * site_op(twist(sx), jn) +
             site_op(sy, j) * site_op(twist(sy), jn) +
             std::cosh(p_.eta) * (site_op(sz, j) * site_op(twist(sz), jn)));
  }
  ham_ = std::move(h);
  ham_built_ = true;
  return ham_;
}

CVector Oracle::vacuum(Side) const {
  CVector v(dim_, Complex{});
  v[0] = 1.0;  // all spins up; covector has the same components
  return v;
}

CVector Oracle::sov_state(const std::vector<int>& h, Side side) const {
  if (h.size() != static_cast<std::size_t>(p_.n))
    throw std::invalid_argument("sov_state: label length");
  CVector v = vacuum(side);
  for (int j = 1; j <= p_.n; ++j) {
    if (!h[j - 1]) continue;
    const MonodromyBlocks& blk = monodromy(p_.thetas[j - 1]);
    v = (side == Side::right) ? mat_vec(blk.B, v) : vec_mat(v, blk.C);
  }
  return v;
}

CVector Oracle::reference_state_inhomogeneous(Side side) const {
  p_.require_nondegenerate();
  CVector ref(dim_, Complex{});
  std::vector<int> h(p_.n, 0);
  for (std::size_t mask = 0; mask < dim_; ++mask) {
    Complex coeff{1.0, 0.0};
    for (int l = 0; l < p_.n; ++l) {
      h[l] = static_cast<int>((mask >> (p_.n - 1 - l)) & 1u);
      if (h[l])
        coeff *= a_func(p_, p_.thetas[l]) * std::exp(p_.thetas[l]);
    }
    coeff /= sov_norm_f(p_, h);
    const CVector hv = sov_state(h, side);
    for (std::size_t i = 0; i < dim_; ++i) ref[i] += coeff * hv[i];
  }
  return ref;
}

Complex Oracle::q_integer(int l, Complex q) {
  if (l == 0) return Complex{1.0, 0.0};
  const Complex q2 = q * q;
  if (std::abs(q2 - Complex{1.0, 0.0}) < 1e-14)
    return Complex{static_cast<double>(l), 0.0};
  return (1.0 - std::pow(q2, l)) / (1.0 - q2);
}

Complex Oracle::q_factorial(int l, Complex q) {
  Complex f{1.0, 0.0};
  for (int k = 1; k <= l; ++k) f *= q_integer(k, q);
  return f;
}

CMatrix Oracle::b_minus_op() const {
  const Complex half = 0.5 * p_.eta;
  CMatrix op(dim_, dim_);
  for (int l = 1; l <= p_.n; ++l) {
    CMatrix term = CMatrix::identity(1);
    for (int k = 1; k <= p_.n; ++k) {
      CMatrix f(2, 2);
      if (k < l) {
        f(0, 0) = std::exp(-half);  // e^{-eta/2 sigma^z}
        f(1, 1) = std::exp(half);
      } else if (k == l) {
        f = sigma_minus();
      } else {
        f(0, 0) = std::exp(half);  // e^{+eta/2 sigma^z}
        f(1, 1) = std::exp(-half);
      }
      term = kron(term, f);
    }
    op = op + std::exp(0.5 * static_cast<double>(p_.n - 1) * p_.eta) * term;
  }
  return op;
}

CMatrix Oracle::c_plus_op() const {
  const Complex half = 0.5 * p_.eta;
  CMatrix op(dim_, dim_);
  for (int l = 1; l <= p_.n; ++l) {
    CMatrix term = CMatrix::identity(1);
    for (int k = 1; k <= p_.n; ++k) {
      CMatrix f(2, 2);
      if (k < l) {
        f(0, 0) = std::exp(half);
        f(1, 1) = std::exp(-half);
      } else if (k == l) {
        f = sigma_plus();
      } else {
        f(0, 0) = std::exp(-half);
        f(1, 1) = std::exp(half);
      }
      term = kron(term, f);
    }
    op = op + std::exp(0.5 * static_cast<double>(p_.n - 1) * p_.eta) * term;
  }
  return op;
}

CVector Oracle::reference_state_homogeneous(Side side) const {
  const Complex q = std::exp(p_.eta);
  const CMatrix ladder = (side == Side::right) ? b_minus_op() : c_plus_op();
  CVector ref = vacuum(side);
  CVector pw = ref;
  for (int l = 1; l <= p_.n; ++l) {
    pw = (side == Side::right) ? mat_vec(ladder, pw) : vec_mat(pw, ladder);
    const Complex inv = 1.0 / q_factorial(l, q);
    for (std::size_t i = 0; i < dim_; ++i) ref[i] += inv * pw[i];
  }
  return ref;
}

CVector Oracle::reference_state(Side side) const {
  bool homogeneous = true;
  for (const Complex& th : p_.thetas)
    if (std::abs(th) > 1e-14) homogeneous = false;
  return homogeneous ? reference_state_homogeneous(side)
                     : reference_state_inhomogeneous(side);
}

CVector Oracle::bethe_state(const std::vector<Complex>& roots, Side side) const {
  CVector v = reference_state(side);
  for (const Complex& r : roots) {
    const MonodromyBlocks& blk = monodromy(r);
    v = (side == Side::right) ? mat_vec(blk.D, v) : vec_mat(v, blk.D);
  }
  return v;
}

Complex Oracle::direct_expectation(const std::vector<Complex>& left_roots,
                                   const std::vector<Complex>& right_roots,
                                   const CMatrix& op) const {
  const CVector l = bethe_state(left_roots, Side::left);
  const CVector r = bethe_state(right_roots, Side::right);
  return dot(l, mat_vec(op, r));
}

double Oracle::local_op_reconstruction_check(int site) const {
  p_.require_nondegenerate();
  const int i = site;
  if (i < 1 || i > p_.n) throw std::invalid_argument("reconstruction: bad site");

  Complex phi_prod{1.0, 0.0};
  for (int m = 1; m < p_.n; ++m)
    for (int n = m + 1; n <= p_.n; ++n) phi_prod *= phi_jk(p_, m, n);
  const Complex pref = 1.0 / (phi_prod * phi_prod);

  std::vector<CMatrix> t;
  t.reserve(p_.n);
  for (int j = 1; j <= p_.n; ++j) t.push_back(transfer(p_.thetas[j - 1]));

  CMatrix pre = CMatrix::identity(dim_);
  for (int j = 1; j < i; ++j) pre = pre * t[j - 1];
  CMatrix post = CMatrix::identity(dim_);
  for (int j = i + 1; j <= p_.n; ++j) post = post * t[j - 1];
  CMatrix all = CMatrix::identity(dim_);
  for (int j = 1; j <= p_.n; ++j) all = all * t[j - 1];

  const MonodromyBlocks& blk = monodromy(p_.thetas[i - 1]);
  const CMatrix tail = post * all;

  double res = 0.0;
  res = std::max(res, max_abs(pref * (pre * blk.D * tail) - site_op(sigma_minus(), i)));
  res = std::max(res, max_abs(pref * (pre * blk.A * tail) - site_op(sigma_plus(), i)));
  const CMatrix zcore = 2.0 * Complex{1.0, 0.0} * blk.C - t[i - 1];
  res = std::max(res, max_abs(pref * (pre * zcore * tail) - site_op(pauli_z(), i)));

  // product identities for prod_j t(theta_j)
  CMatrix sx_all = CMatrix::identity(dim_);
  for (int j = 1; j <= p_.n; ++j) sx_all = sx_all * site_op(pauli_x(), j);
  res = std::max(res, max_abs(all - phi_prod * sx_all));
  res = std::max(res,
                 max_abs(all * all - (phi_prod * phi_prod) * CMatrix::identity(dim_)));
  return res;
}

std::vector<Complex> Oracle::transfer_eigenvalues(Complex u) const {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(transfer(u)), false);
  std::vector<Complex> ev(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

std::vector<Complex> Oracle::hamiltonian_eigenvalues() const {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(hamiltonian()), false);
  std::vector<Complex> ev(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

}  // namespace xxz
