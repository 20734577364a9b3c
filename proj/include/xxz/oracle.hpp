#pragma once

#include <map>
#include <vector>

#include "xxz/linalg.hpp"
#include "xxz/model.hpp"

namespace xxz {

enum class Side { left, right };

/// Monodromy blocks at a fixed spectral parameter, each 2^N x 2^N.
/// Auxiliary-space placement: (1,1)=C, (1,2)=D, (2,1)=A, (2,2)=B, so the
/// transfer matrix is t(u) = B(u) + C(u).
struct MonodromyBlocks {
  CMatrix A, B, C, D;
  CMatrix transfer() const { return B + C; }
};

/// Brute-force ground truth: every operator and state built explicitly in
/// the 2^N-dimensional Hilbert space. Desk-scale verification only; the
/// builders refuse N > 12.
class Oracle {
 public:
  explicit Oracle(ChainParams p);

  const ChainParams& params() const { return p_; }
  std::size_t dim() const { return dim_; }

  static CMatrix pauli_x();
  static CMatrix pauli_y();
  static CMatrix pauli_z();
  static CMatrix sigma_plus();
  static CMatrix sigma_minus();

  /// Six-vertex R-matrix, 4x4 in the basis {uu, ud, du, dd}.
  static CMatrix r_matrix(Complex u, Complex eta);

  /// op2 acting on 1-based site i of the chain.
  CMatrix site_op(const CMatrix& op2, int site) const;

  const MonodromyBlocks& monodromy(Complex u) const;  // cached per u
  CMatrix transfer(Complex u) const;
  const CMatrix& hamiltonian() const;

  CVector vacuum(Side side) const;  // |0> / <0| (covector stored as plain vector)

  /// prod_j [B(theta_j)]^{h_j} |0>  (right) or <0| prod_j [C(theta_j)]^{h_j}.
  CVector sov_state(const std::vector<int>& h, Side side) const;

  /// Reference state. The inhomogeneous construction expands over the SoV
  /// basis with f^{-1}(h); the homogeneous one uses the q-integer series
  /// with the B^-/C^+ ladder operators.
  CVector reference_state_inhomogeneous(Side side) const;
  CVector reference_state_homogeneous(Side side) const;
  CVector reference_state(Side side) const;  // picks by whether thetas vanish

  CMatrix b_minus_op() const;
  CMatrix c_plus_op() const;

  /// prod_j D(lambda_j) applied to the reference state (right), or the
  /// left reference covector times prod_j D(u_j).
  CVector bethe_state(const std::vector<Complex>& roots, Side side) const;

  /// <left| op |right> as a bilinear pairing (covector . matrix . vector,
  /// no complex conjugation anywhere).
  Complex direct_expectation(const std::vector<Complex>& left_roots,
                             const std::vector<Complex>& right_roots,
                             const CMatrix& op) const;

  /// Max-norm deviation of the monodromy-block reconstructions of
  /// sigma_i^-, sigma_i^+, sigma_i^z from the directly embedded operators,
  /// together with the transfer-matrix product identities.
  double local_op_reconstruction_check(int site) const;

  std::vector<Complex> transfer_eigenvalues(Complex u) const;
  std::vector<Complex> hamiltonian_eigenvalues() const;

  static Complex q_integer(int l, Complex q);
  static Complex q_factorial(int l, Complex q);

 private:
  ChainParams p_;
  std::size_t dim_;
  mutable std::map<std::pair<double, double>, MonodromyBlocks> blocks_;
  mutable CMatrix ham_;
  mutable bool ham_built_ = false;
};

}  // namespace xxz
