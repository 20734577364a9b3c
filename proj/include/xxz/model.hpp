#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "xxz/jet.hpp"
#include "xxz/linalg.hpp"

namespace xxz {

inline constexpr double kPoleTol = 1e-12;

/// Chain data: site count N, crossing parameter eta, inhomogeneities
/// theta_1..theta_N. The determinant formulas additionally require the
/// thetas to be pairwise distinct and distinct modulo +-eta; call
/// require_nondegenerate() before using them.
struct ChainParams {
  int n = 0;
  Complex eta{1.0, 0.0};
  std::vector<Complex> thetas;

  static ChainParams homogeneous(int n, Complex eta) {
    return ChainParams{n, eta, std::vector<Complex>(static_cast<std::size_t>(n))};
  }

  void require_valid() const {
    if (n <= 0 || thetas.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("ChainParams: bad site count");
    if (std::abs(std::sinh(eta)) < kPoleTol)
      throw std::domain_error("ChainParams: sinh(eta) vanishes");
  }

  void require_nondegenerate() const {
    require_valid();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Complex d = thetas[i] - thetas[j];
        if (std::abs(d) < kPoleTol || std::abs(d - eta) < kPoleTol ||
            std::abs(d + eta) < kPoleTol)
          throw std::domain_error("ChainParams: degenerate inhomogeneities");
      }
  }
};

/// Bethe root set with on-shell metadata. Roots are kept in canonical
/// order (sorted by (Im, Re)); root sets are sets, not tuples.
struct RootSet {
  std::vector<Complex> roots;
  double residual = 0.0;
  bool on_shell = false;

  void canonicalize() {
    // tolerant comparison keeps the order stable when converged imaginary
    // parts differ only by rounding noise around 0 or +-pi/2
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
      if (std::abs(a.imag() - b.imag()) > 1e-9) return a.imag() < b.imag();
      return a.real() < b.real();
    });
  }

  /// Order-insensitive multiset comparison.
  bool same_roots(const RootSet& o, double tol = 1e-8) const {
    if (roots.size() != o.roots.size()) return false;
    std::vector<bool> used(roots.size(), false);
    for (const Complex& a : roots) {
      bool found = false;
      for (std::size_t j = 0; j < o.roots.size(); ++j)
        if (!used[j] && std::abs(a - o.roots[j]) <= tol) {
          used[j] = true;
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }
};

// Scalar abstraction: the same formula code runs on plain Complex and on
// truncated Taylor jets.
inline Complex s_sinh(const Complex& x) { return std::sinh(x); }
inline Jet s_sinh(const Jet& x) { return sinh(x); }
inline Complex s_cosh(const Complex& x) { return std::cosh(x); }
inline Jet s_cosh(const Jet& x) { return cosh(x); }
inline Complex s_exp(const Complex& x) { return std::exp(x); }
inline Jet s_exp(const Jet& x) { return exp(x); }
inline Complex scalar_like(const Complex&, Complex v) { return v; }
inline Jet scalar_like(const Jet& proto, Complex v) { return Jet(proto.order(), v); }
inline double abs0(const Complex& x) { return std::abs(x); }
inline double abs0(const Jet& x) { return std::abs(x.value()); }

/// a(u) = prod_k sinh(u - theta_k + eta) / sinh(eta)
template <class S>
S a_func(const ChainParams& p, const S& u) {
  const Complex sh = std::sinh(p.eta);
  S prod = scalar_like(u, {1.0, 0.0});
  for (const Complex& th : p.thetas) prod = prod * (s_sinh(u - th + p.eta) / sh);
  return prod;
}

/// d(u) = prod_k sinh(u - theta_k) / sinh(eta)
template <class S>
S d_func(const ChainParams& p, const S& u) {
  const Complex sh = std::sinh(p.eta);
  S prod = scalar_like(u, {1.0, 0.0});
  for (const Complex& th : p.thetas) prod = prod * (s_sinh(u - th) / sh);
  return prod;
}

/// Q(u) = prod_j sinh(u - lambda_j) / sinh(eta)
template <class S>
S q_func(const std::vector<Complex>& roots, const S& u, Complex eta) {
  const Complex sh = std::sinh(eta);
  S prod = scalar_like(u, {1.0, 0.0});
  for (const Complex& l : roots) prod = prod * (s_sinh(u - l) / sh);
  return prod;
}

/// c(u) = e^{u - N eta + sum(theta_l - lambda_l)} - e^{-u - eta - sum(theta_l - lambda_l)}
template <class S>
S c_func(const ChainParams& p, const std::vector<Complex>& roots, const S& u) {
  Complex shift{};
  for (int l = 0; l < p.n; ++l) shift += p.thetas[l] - roots[l];
  const double nn = static_cast<double>(p.n);
  return s_exp(u - nn * p.eta + shift) - s_exp(-u - p.eta - shift);
}

/// Transfer-matrix eigenvalue from the inhomogeneous T-Q relation:
/// Lambda(u) = [a(u) e^u Q(u-eta) - e^{-u-eta} d(u) Q(u+eta) - c(u) a(u) d(u)] / Q(u).
/// u must stay away from the Bethe roots (poles of the quotient form).
template <class S>
S lambda_tq(const ChainParams& p, const std::vector<Complex>& roots, const S& u) {
  const S q0 = q_func(roots, u, p.eta);
  if (abs0(q0) < kPoleTol) throw std::domain_error("lambda_tq: u at a Bethe root");
  const S num = a_func(p, u) * s_exp(u) * q_func(roots, u - p.eta, p.eta) -
                s_exp(-u - p.eta) * d_func(p, u) * q_func(roots, u + p.eta, p.eta) -
                c_func(p, roots, u) * a_func(p, u) * d_func(p, u);
  return num / q0;
}

/// E = 2 sinh(eta) sum_j [coth(lambda_j + eta) - coth(lambda_j)]
///     - N cosh(eta) - 2 sinh(eta)
Complex energy(const RootSet& roots, Complex eta, int n);

/// dbar({lambda_k}, u, h) = prod_k sinh(lambda_k - u + eta h) / sinh(eta)
template <class S>
S dbar(const std::vector<Complex>& roots, const S& u, int h, Complex eta) {
  const Complex sh = std::sinh(eta);
  S prod = scalar_like(u, {1.0, 0.0});
  for (const Complex& l : roots)
    prod = prod * (s_sinh(l - u + static_cast<double>(h) * eta) / sh);
  return prod;
}

/// tau({u_l},{lambda_l},h,u) = dbar({u_k},u,h) dbar({lambda_k},u,h)
///   [-a(u)/d(u-eta)]^h e^{2uh + eta h (N-1)}
template <class S>
S tau_func(const ChainParams& p, const std::vector<Complex>& uroots,
           const std::vector<Complex>& lroots, int h, const S& u) {
  S t = dbar(uroots, u, h, p.eta) * dbar(lroots, u, h, p.eta);
  if (h == 1) {
    const S dm = d_func(p, u - p.eta);
    if (abs0(dm) < kPoleTol) throw std::domain_error("tau: d(u-eta) vanishes");
    t = t * (-a_func(p, u) / dm) *
        s_exp(2.0 * u + p.eta * static_cast<double>(p.n - 1));
  }
  return t;
}

Complex xi_func(const ChainParams& p, const std::vector<Complex>& uroots,
                const std::vector<Complex>& lroots, Complex theta_i, Complex theta_j);

// gamma1/gamma2 of the sigma^z sigma^z correlator; site i and the summation
// indices are 1-based as in the determinant formulas.
Complex gamma1(const ChainParams& p, const std::vector<Complex>& uroots,
               const std::vector<Complex>& lroots, int i, int jprime);
Complex gamma2(const ChainParams& p, const std::vector<Complex>& uroots,
               const std::vector<Complex>& lroots, int i, int j);

/// phi_{jk} = sinh(eta - theta_j + theta_k) sinh(eta + theta_j - theta_k) / sinh^2(eta)
Complex phi_jk(const ChainParams& p, int j, int k);  // 1-based

/// Matrix V with V[i,j] = e^{2 x_i (j-1)}.
CMatrix vandermonde(const std::vector<Complex>& xs);
/// prod_{j<i} (e^{2 x_i} - e^{2 x_j})  (fast path; equals |vandermonde(xs)|)
Complex vandermonde_det(const std::vector<Complex>& xs);

/// f(h) = prod_l [-a(theta_l) d(theta_l - eta) e^{-eta(N-1)}]^{h_l}
///        |V(theta)| / |V(theta - eta h)|
Complex sov_norm_f(const ChainParams& p, const std::vector<int>& h);

}  // namespace xxz
