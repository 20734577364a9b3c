#pragma once

#include "xxz/detforms.hpp"
#include "xxz/model.hpp"

namespace xxz {

/// Homogeneous-limit evaluation: the theta_j -> 0 limits of the determinant
/// formulas, taken exactly through truncated Taylor jets at u = 0, plus a
/// Richardson epsilon-extrapolation fallback for the quantities that only
/// exist inhomogeneously.

/// tilde tau with the [-sinh^N(u+eta)/sinh^N(u-eta)]^h ratio.
Jet homo_tau(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
             Complex eta, int n, int h, const Jet& u);

/// phi_n(u) = sum_h tilde tau(h, u) e^{2(u - eta h)(n-1)}, expanded at u = 0.
/// n is the 1-based column index.
Jet phi_n(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
          Complex eta, int nsites, int n, std::size_t order);

/// tilde xi(u) expanded at u = 0.
Jet tilde_xi(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
             Complex eta, int nsites, std::size_t order);

/// Lambda({roots}, 0) with all inhomogeneities zero.
Complex lambda_hom(const std::vector<Complex>& roots, Complex eta, int n);

/// |P^hom| with P^hom_{m,n} = d^{m-1} phi_n / du^{m-1} |_0.
Complex p_hom_det(const std::vector<Complex>& uroots,
                  const std::vector<Complex>& lroots, Complex eta, int n);

/// S_N = |P^hom| / [2^{N(N-1)/2} prod_{k<N} k!]; valid on and off shell.
Complex homogeneous_scalar_product(const std::vector<Complex>& uroots,
                                   const std::vector<Complex>& lroots,
                                   Complex eta, int n);

/// Column functions of the sigma^- and sigma^-sigma^- determinants:
/// phi_n with an extra sinh(-u+eta h)/sinh eta (f^-) or
/// sinh^2(u-eta h)/sinh^2 eta (f^--) factor inside the h-sum.
Jet f_minus_n(const std::vector<Complex>& uroots,
              const std::vector<Complex>& lroots, Complex eta, int nsites,
              int n, std::size_t order);
Jet f_mm_n(const std::vector<Complex>& uroots,
           const std::vector<Complex>& lroots, Complex eta, int nsites, int n,
           std::size_t order);

Complex f_hom_d_det(const std::vector<Complex>& uroots,
                    const std::vector<Complex>& lroots, Complex eta, int n);
Complex homogeneous_ff_sminus(const std::vector<Complex>& uroots,
                              const std::vector<Complex>& lroots, Complex eta,
                              int n, int site);

Complex f_hom_z_det(const std::vector<Complex>& uroots,
                    const std::vector<Complex>& lroots, Complex eta, int n);
Complex homogeneous_ff_sz(const std::vector<Complex>& uroots,
                          const std::vector<Complex>& lroots, Complex eta, int n,
                          int site);

Complex f_hom_dd_det(const std::vector<Complex>& uroots,
                     const std::vector<Complex>& lroots, Complex eta, int n);
Complex homogeneous_cf_mm(const std::vector<Complex>& uroots,
                          const std::vector<Complex>& lroots, Complex eta, int n,
                          int site);

struct ExtrapolationResult {
  Complex value;
  double error_estimate = 0.0;
};

/// Richardson extrapolation of f over the path theta = eps*(1..N),
/// eps in {eps0, eps0/2, eps0/4}, assuming an analytic eps-expansion.
template <class F>
ExtrapolationResult richardson(F&& f, double eps0 = 1e-2) {
  const Complex f1 = f(eps0);
  const Complex f2 = f(eps0 / 2.0);
  const Complex f3 = f(eps0 / 4.0);
  const Complex a1 = 2.0 * f2 - f1;
  const Complex a2 = 2.0 * f3 - f2;
  const Complex v = (4.0 * a2 - a1) / 3.0;
  return {v, std::abs(v - a2)};
}

/// epsilon-extrapolated evaluation of an inhomogeneous formula at
/// theta = eps*(1..N) with the root sets re-polished onto the BAEs of the
/// perturbed chain at each eps.
ExtrapolationResult extrapolate_inhomogeneous(
    FFKind kind, const std::vector<Complex>& uroots,
    const std::vector<Complex>& lroots, Complex eta, int n, int site,
    double eps0 = 1e-2);

/// Closed form for N = 2 only.
Complex homogeneous_cf_zz_n2(const std::vector<Complex>& uroots,
                             const std::vector<Complex>& lroots, Complex eta,
                             int site);

/// N = 2: closed form (zero error estimate); N > 2: epsilon-extrapolation
/// with the Richardson error estimate reported.
ExtrapolationResult homogeneous_cf_zz(const std::vector<Complex>& uroots,
                                      const std::vector<Complex>& lroots,
                                      Complex eta, int n, int site);

}  // namespace xxz
