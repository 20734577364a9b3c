#include "xxz/model.hpp"

namespace xxz {

Complex energy(const RootSet& roots, Complex eta, int n) {
  const Complex sh = std::sinh(eta);
  Complex sum{};
  for (const Complex& l : roots.roots) {
    const Complex s0 = std::sinh(l);
    const Complex s1 = std::sinh(l + eta);
    if (std::abs(s0) < kPoleTol || std::abs(s1) < kPoleTol)
      throw std::domain_error("energy: coth pole at a Bethe root");
    sum += std::cosh(l + eta) / s1 - std::cosh(l) / s0;
  }
  return 2.0 * sh * sum - static_cast<double>(n) * std::cosh(eta) - 2.0 * sh;
}

Complex xi_func(const ChainParams& p, const std::vector<Complex>& uroots,
                const std::vector<Complex>& lroots, Complex theta_i,
                Complex theta_j) {
  const Complex sh = std::sinh(p.eta);
  const Complex dm = d_func(p, theta_j - p.eta);
  if (std::abs(dm) < kPoleTol) throw std::domain_error("xi: d(theta_j - eta) vanishes");
  Complex xi = dbar(uroots, theta_j, 1, p.eta) * dbar(lroots, theta_j, 1, p.eta) *
               (-a_func(p, theta_j) / dm) *
               std::exp(theta_i + p.eta * static_cast<double>(p.n));
  for (int k = 0; k < p.n; ++k) {
    const Complex den = std::sinh(theta_j - uroots[k] - p.eta);
    if (std::abs(den) < kPoleTol)
      throw std::domain_error("xi: sinh(theta_j - u_k - eta) vanishes");
    xi *= std::exp(-theta_i + theta_j - p.eta) * std::sinh(theta_j - uroots[k]) /
          den * std::sinh(theta_j - p.thetas[k] - p.eta) / sh;
  }
  return xi;
}

Complex gamma1(const ChainParams& p, const std::vector<Complex>& uroots,
               const std::vector<Complex>& lroots, int i, int jprime) {
  const Complex den = std::sinh(p.thetas[i - 1] - p.thetas[i - 2]);
  if (std::abs(den) < kPoleTol)
    throw std::domain_error("gamma1: coincident theta_i, theta_{i-1}");
  return -std::sinh(p.thetas[i - 2] - p.thetas[jprime - 1]) / den *
         xi_func(p, uroots, lroots, p.thetas[i - 1], p.thetas[jprime - 1]);
}

Complex gamma2(const ChainParams& p, const std::vector<Complex>& uroots,
               const std::vector<Complex>& lroots, int i, int j) {
  return -std::sinh(p.thetas[i - 1] - p.thetas[j - 1] + p.eta) *
         xi_func(p, uroots, lroots, p.thetas[i - 2], p.thetas[j - 1]);
}

Complex phi_jk(const ChainParams& p, int j, int k) {
  const Complex sh = std::sinh(p.eta);
  const Complex d = p.thetas[j - 1] - p.thetas[k - 1];
  return std::sinh(p.eta - d) * std::sinh(p.eta + d) / (sh * sh);
}

CMatrix vandermonde(const std::vector<Complex>& xs) {
  const std::size_t n = xs.size();
  CMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e2x = std::exp(2.0 * xs[i]);
    Complex pw{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = pw;
      pw *= e2x;
    }
  }
  return v;
}

Complex vandermonde_det(const std::vector<Complex>& xs) {
  Complex det{1.0, 0.0};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      det *= std::exp(2.0 * xs[i]) - std::exp(2.0 * xs[j]);
  return det;
}

Complex sov_norm_f(const ChainParams& p, const std::vector<int>& h) {
  p.require_valid();
  if (h.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("sov_norm_f: label length");
  std::vector<Complex> shifted = p.thetas;
  Complex prefac{1.0, 0.0};
  for (int l = 0; l < p.n; ++l) {
    if (h[l]) {
      shifted[l] -= p.eta;
      prefac *= -a_func(p, p.thetas[l]) * d_func(p, p.thetas[l] - p.eta) *
                std::exp(-p.eta * static_cast<double>(p.n - 1));
    }
  }
  // the determinant may be legitimately tiny (all thetas near 0); only a
  // genuine coincidence of shifted arguments is singular
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      if (std::abs(shifted[i] - shifted[j]) < kPoleTol)
        throw std::domain_error("sov_norm_f: degenerate shifted Vandermonde");
  const Complex den = vandermonde_det(shifted);
  return prefac * vandermonde_det(p.thetas) / den;
}

}  // namespace xxz
