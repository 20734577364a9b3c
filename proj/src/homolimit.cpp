#include "xxz/homolimit.hpp"

#include <cmath>

#include "xxz/bae.hpp"

namespace xxz {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

// 2^{N(N-1)/2} prod_{k=1}^{N-1} k!
double hom_norm(int n) {
  double v = std::pow(2.0, 0.5 * static_cast<double>(n) * (n - 1));
  for (int k = 1; k < n; ++k) v *= factorial(k);
  return v;
}

// Determinant of the matrix whose (m,n) entry is the (m-1)-th derivative
// at 0 of the n-th column function, given the column jets.
CMatrix derivative_matrix(const std::vector<Jet>& cols) {
  const std::size_t n = cols.size();
  CMatrix m(n, n);
  double fact = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0) fact *= static_cast<double>(r);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = cols[c][r] * fact;
  }
  return m;
}

}  // namespace

Jet homo_tau(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
             Complex eta, int n, int h, const Jet& u) {
  Jet t = dbar(uroots, u, h, eta) * dbar(lroots, u, h, eta);
  if (h == 1) {
    const Jet ratio = -pow_int(sinh(u + eta), n) / pow_int(sinh(u - eta), n);
    t = t * ratio * exp(2.0 * u + eta * static_cast<double>(n - 1));
  }
  return t;
}

Jet phi_n(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
          Complex eta, int nsites, int n, std::size_t order) {
  const Jet u = Jet::variable(order, {0.0, 0.0});
  Jet sum(order);
  for (int h = 0; h <= 1; ++h)
    sum += homo_tau(uroots, lroots, eta, nsites, h, u) *
           exp((u - static_cast<double>(h) * eta) * Complex{2.0 * (n - 1), 0.0});
  return sum;
}

Jet tilde_xi(const std::vector<Complex>& uroots, const std::vector<Complex>& lroots,
             Complex eta, int nsites, std::size_t order) {
  const Jet u = Jet::variable(order, {0.0, 0.0});
  const Complex sh = std::sinh(eta);
  Jet xi = -(dbar(uroots, u, 1, eta) * dbar(lroots, u, 1, eta)) *
           exp(u * Complex{static_cast<double>(nsites), 0.0}) *
           (pow_int(sinh(u + eta), nsites) / std::pow(sh, nsites));
  for (const Complex& uk : uroots) xi = xi * (sinh(u - uk) / sinh(u - uk - eta));
  return xi;
}

Complex lambda_hom(const std::vector<Complex>& roots, Complex eta, int n) {
  return lambda_tq(ChainParams::homogeneous(n, eta), roots, Complex{});
}

Complex p_hom_det(const std::vector<Complex>& uroots,
                  const std::vector<Complex>& lroots, Complex eta, int n) {
  std::vector<Jet> cols;
  for (int c = 1; c <= n; ++c)
    cols.push_back(phi_n(uroots, lroots, eta, n, c, n - 1));
  return lu_determinant(derivative_matrix(cols));
}

Complex homogeneous_scalar_product(const std::vector<Complex>& uroots,
                                   const std::vector<Complex>& lroots,
                                   Complex eta, int n) {
  return p_hom_det(uroots, lroots, eta, n) / hom_norm(n);
}

namespace {

// f^-_n and f^--_n column jets share phi_n's structure with an extra
// sinh factor inside the h-sum.
Jet column_with_factor(const std::vector<Complex>& uroots,
                       const std::vector<Complex>& lroots, Complex eta, int nsites,
                       int n, std::size_t order, int power) {
  const Jet u = Jet::variable(order, {0.0, 0.0});
  const Complex sh = std::sinh(eta);
  Jet sum(order);
  for (int h = 0; h <= 1; ++h) {
    Jet term = homo_tau(uroots, lroots, eta, nsites, h, u) *
               exp((u - static_cast<double>(h) * eta) * Complex{2.0 * (n - 1), 0.0});
    if (power == 1) {
      term = term * (sinh(-u + static_cast<double>(h) * eta) / sh);
    } else {
      const Jet s = sinh(u - static_cast<double>(h) * eta) / sh;
      term = term * s * s;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Jet f_minus_n(const std::vector<Complex>& uroots,
              const std::vector<Complex>& lroots, Complex eta, int nsites,
              int n, std::size_t order) {
  return column_with_factor(uroots, lroots, eta, nsites, n, order, 1);
}

Jet f_mm_n(const std::vector<Complex>& uroots,
           const std::vector<Complex>& lroots, Complex eta, int nsites, int n,
           std::size_t order) {
  return column_with_factor(uroots, lroots, eta, nsites, n, order, 2);
}

Complex f_hom_d_det(const std::vector<Complex>& uroots,
                    const std::vector<Complex>& lroots, Complex eta, int n) {
  std::vector<Jet> cols;
  for (int c = 1; c <= n; ++c)
    cols.push_back(column_with_factor(uroots, lroots, eta, n, c, n - 1, 1));
  return lu_determinant(derivative_matrix(cols));
}

Complex homogeneous_ff_sminus(const std::vector<Complex>& uroots,
                              const std::vector<Complex>& lroots, Complex eta,
                              int n, int site) {
  const Complex lu = lambda_hom(uroots, eta, n);
  const Complex ll = lambda_hom(lroots, eta, n);
  return f_hom_d_det(uroots, lroots, eta, n) * std::pow(lu, site - 1) *
         std::pow(ll, 2 * n - site) / hom_norm(n);
}

Complex f_hom_z_det(const std::vector<Complex>& uroots,
                    const std::vector<Complex>& lroots, Complex eta, int n) {
  CMatrix m(n + 1, n + 1);
  std::vector<Jet> cols;
  for (int c = 1; c <= n; ++c)
    cols.push_back(phi_n(uroots, lroots, eta, n, c, n - 1));
  const Jet xi = tilde_xi(uroots, lroots, eta, n, n - 1);
  double fact = 1.0;
  for (int r = 0; r < n; ++r) {
    if (r > 0) fact *= static_cast<double>(r);
    for (int c = 0; c < n; ++c) m(r, c) = cols[c][r] * fact;
    m(r, n) = 2.0 * xi[r] * fact;
  }
  for (int c = 0; c < n; ++c) m(n, c) = 1.0;
  m(n, n) = -lambda_hom(lroots, eta, n);
  return lu_determinant(m);
}

Complex homogeneous_ff_sz(const std::vector<Complex>& uroots,
                          const std::vector<Complex>& lroots, Complex eta, int n,
                          int site) {
  const Complex lu = lambda_hom(uroots, eta, n);
  const Complex ll = lambda_hom(lroots, eta, n);
  return f_hom_z_det(uroots, lroots, eta, n) * std::pow(lu, site - 1) *
         std::pow(ll, 2 * n - site) / hom_norm(n);
}

Complex f_hom_dd_det(const std::vector<Complex>& uroots,
                     const std::vector<Complex>& lroots, Complex eta, int n) {
  std::vector<Jet> cols;
  for (int c = 1; c <= n; ++c)
    cols.push_back(column_with_factor(uroots, lroots, eta, n, c, n - 1, 2));
  return lu_determinant(derivative_matrix(cols));
}

Complex homogeneous_cf_mm(const std::vector<Complex>& uroots,
                          const std::vector<Complex>& lroots, Complex eta, int n,
                          int site) {
  const Complex lu = lambda_hom(uroots, eta, n);
  const Complex ll = lambda_hom(lroots, eta, n);
  return f_hom_dd_det(uroots, lroots, eta, n) * std::pow(lu, site - 2) *
         std::pow(ll, 2 * n - site) / hom_norm(n);
}

Complex homogeneous_cf_zz_n2(const std::vector<Complex>& uroots,
                             const std::vector<Complex>& lroots, Complex eta,
                             int site) {
  const int n = 2;
  if (site != 2) throw std::invalid_argument("homogeneous_cf_zz_n2: site must be 2");
  const Complex lu = lambda_hom(uroots, eta, n);
  const Complex ll = lambda_hom(lroots, eta, n);

  std::vector<Jet> cols;
  for (int c = 1; c <= n; ++c) cols.push_back(phi_n(uroots, lroots, eta, n, c, 1));
  const Jet xi = tilde_xi(uroots, lroots, eta, n, 1);
  CMatrix fc(3, 3);
  double fact = 1.0;
  for (int r = 0; r < 2; ++r) {
    if (r > 0) fact *= static_cast<double>(r);
    for (int c = 0; c < 2; ++c) fc(r, c) = cols[c][r] * fact;
    fc(r, 2) = xi[r] * fact;
  }
  fc(2, 0) = fc(2, 1) = 1.0;
  fc(2, 2) = 0.0;

  const Complex xi0 = xi.value();
  return ll * ll *
         (4.0 * xi0 * xi0 - ll * lu_determinant(fc) -
          lu * f_hom_z_det(uroots, lroots, eta, n) / 2.0);
}

ExtrapolationResult extrapolate_inhomogeneous(
    FFKind kind, const std::vector<Complex>& uroots,
    const std::vector<Complex>& lroots, Complex eta, int n, int site,
    double eps0) {
  auto eval = [&](double eps) {
    ChainParams p{n, eta, {}};
    p.thetas.resize(n);
    for (int j = 0; j < n; ++j) p.thetas[j] = Complex{eps * (j + 1), 0.0};
    FormFactorRequest req;
    req.params = p;
    req.left = polish_roots(p, uroots);
    req.right = polish_roots(p, lroots);
    req.site = site;
    req.kind = kind;
    if (!req.left.on_shell || !req.right.on_shell)
      throw std::runtime_error("extrapolation: root polishing diverged");
    switch (kind) {
      case FFKind::sminus:
        return ff_sigma_minus(req);
      case FFKind::sz:
        return ff_sigma_z(req);
      case FFKind::sminus_sminus:
        return cf_minus_minus(req);
      case FFKind::sz_sz:
        return cf_zz(req);
    }
    throw std::logic_error("extrapolation: unknown kind");
  };
  return richardson(eval, eps0);
}

ExtrapolationResult homogeneous_cf_zz(const std::vector<Complex>& uroots,
                                      const std::vector<Complex>& lroots,
                                      Complex eta, int n, int site) {
  if (n == 2)
    return {homogeneous_cf_zz_n2(uroots, lroots, eta, site), 0.0};
  return extrapolate_inhomogeneous(FFKind::sz_sz, uroots, lroots, eta, n, site);
}

}  // namespace xxz
