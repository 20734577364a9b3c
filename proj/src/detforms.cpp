#include "xxz/detforms.hpp"

#include <cmath>
#include <string>

#include "xxz/bae.hpp"

namespace xxz {

namespace {

void require_on_shell(const ChainParams& p, const RootSet& rs, const char* who) {
  if (rs.roots.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument(std::string(who) + ": root count mismatch");
  if (bae_residual_norm(p, rs.roots) > 1e-8)
    throw std::invalid_argument(std::string(who) + ": root set is off shell");
}

Complex e2pow(Complex base, int k) { return std::exp(2.0 * base * static_cast<double>(k)); }

// P_{ij} = sum_h tau(h, theta_i) e^{2(theta_i - eta h)(j-1)}
CMatrix p_matrix(const ChainParams& p, const std::vector<Complex>& u,
                 const std::vector<Complex>& l) {
  CMatrix m(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int h = 0; h <= 1; ++h) {
      const Complex t = tau_func(p, u, l, h, p.thetas[i]);
      for (int j = 0; j < p.n; ++j)
        m(i, j) += t * e2pow(p.thetas[i] - static_cast<double>(h) * p.eta, j);
    }
  return m;
}

// Common eigenvalue prefactor of the sigma reconstructions:
// prod phi^{-2} prod_{j<=cut_u} Lambda({u},theta_j)
//   prod_{j>i} Lambda({l},theta_j) prod_j Lambda({l},theta_j)
Complex reconstruction_prefactor(const ChainParams& p, const std::vector<Complex>& u,
                                 const std::vector<Complex>& l, int cut_u, int i) {
  Complex phi_prod{1.0, 0.0};
  for (int m = 1; m < p.n; ++m)
    for (int n = m + 1; n <= p.n; ++n) phi_prod *= phi_jk(p, m, n);
  Complex pref = 1.0 / (phi_prod * phi_prod);
  for (int j = 1; j <= cut_u; ++j) pref *= lambda_tq(p, u, p.thetas[j - 1]);
  for (int j = i + 1; j <= p.n; ++j) pref *= lambda_tq(p, l, p.thetas[j - 1]);
  for (int j = 1; j <= p.n; ++j) pref *= lambda_tq(p, l, p.thetas[j - 1]);
  return pref;
}

// F^C-style (N+1)x(N+1) matrix: P block, xi(theta_x, theta_m) last column
// (scaled by xi_scale), e^{2 theta_x (n-1)} last row, given corner.
CMatrix fc_matrix(const ChainParams& p, const std::vector<Complex>& u,
                  const std::vector<Complex>& l, Complex theta_x, double xi_scale,
                  Complex corner) {
  const int n = p.n;
  CMatrix m(n + 1, n + 1);
  const CMatrix pm = p_matrix(p, u, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = pm(i, j);
  for (int i = 0; i < n; ++i)
    m(i, n) = xi_scale * xi_func(p, u, l, theta_x, p.thetas[i]);
  for (int j = 0; j < n; ++j) m(n, j) = e2pow(theta_x, j);
  m(n, n) = corner;
  return m;
}

}  // namespace

Complex scalar_product_offshell(const ChainParams& p, const RootSet& uroots,
                                const RootSet& lroots) {
  p.require_nondegenerate();
  return lu_determinant(p_matrix(p, uroots.roots, lroots.roots)) /
         vandermonde_det(p.thetas);
}

Complex scalar_product_onshell_left(const ChainParams& p, const RootSet& uroots,
                                    const RootSet& lroots) {
  p.require_nondegenerate();
  require_on_shell(p, uroots, "scalar_product_onshell_left");
  const int n = p.n;
  const Complex sh = std::sinh(p.eta);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Complex th = p.thetas[i];
    const Complex du = d_func(p, uroots.roots[i]);
    for (int h = 0; h <= 1; ++h) {
      Complex coef =
          std::exp(p.eta * static_cast<double>(h * (n - 1)) + th * static_cast<double>(h)) * du;
      if (h == 1) {
        const Complex dm = d_func(p, th - p.eta);
        if (std::abs(dm) < kPoleTol)
          throw std::domain_error("scalar_product_onshell: d(theta_i - eta) vanishes");
        coef *= -lambda_tq(p, uroots.roots, th) / dm;
      }
      Complex prod{1.0, 0.0};
      for (int k = 0; k < n; ++k)
        prod *= std::sinh(lroots.roots[k] - th + static_cast<double>(h) * p.eta) / sh;
      for (int j = 0; j < n; ++j)
        m(i, j) += coef * prod * e2pow(th - static_cast<double>(h) * p.eta, j);
    }
  }
  return lu_determinant(m) / vandermonde_det(p.thetas);
}

Complex scalar_product_onshell_right(const ChainParams& p, const RootSet& uroots,
                                     const RootSet& lroots) {
  require_on_shell(p, lroots, "scalar_product_onshell_right");
  // P^NR = P^NL with the two root families exchanged
  RootSet l = lroots, u = uroots;
  return scalar_product_onshell_left(p, l, u);
}

Complex ff_sigma_minus(const FormFactorRequest& req) {
  const ChainParams& p = req.params;
  p.require_nondegenerate();
  require_on_shell(p, req.left, "ff_sigma_minus(left)");
  require_on_shell(p, req.right, "ff_sigma_minus(right)");
  const int i = req.site;
  const std::vector<Complex>&u = req.left.roots, &l = req.right.roots;
  const Complex sh = std::sinh(p.eta);
  CMatrix m(p.n, p.n);
  for (int mm = 0; mm < p.n; ++mm)
    for (int h = 0; h <= 1; ++h) {
      const Complex t = tau_func(p, u, l, h, p.thetas[mm]) *
                        std::sinh(p.thetas[i - 1] - p.thetas[mm] +
                                  static_cast<double>(h) * p.eta) /
                        sh;
      for (int nn = 0; nn < p.n; ++nn)
        m(mm, nn) += t * e2pow(p.thetas[mm] - static_cast<double>(h) * p.eta, nn);
    }
  return reconstruction_prefactor(p, u, l, i - 1, i) * lu_determinant(m) /
         vandermonde_det(p.thetas);
}

Complex c_block_expectation(const ChainParams& p, const RootSet& uroots,
                            const RootSet& lroots, int site) {
  p.require_nondegenerate();
  require_on_shell(p, uroots, "c_block_expectation(left)");
  require_on_shell(p, lroots, "c_block_expectation(right)");
  const CMatrix fc = fc_matrix(p, uroots.roots, lroots.roots, p.thetas[site - 1],
                               1.0, Complex{});
  return lu_determinant(fc) / vandermonde_det(p.thetas);
}

Complex ff_sigma_z(const FormFactorRequest& req, bool corner_uses_uroots) {
  const ChainParams& p = req.params;
  p.require_nondegenerate();
  require_on_shell(p, req.left, "ff_sigma_z(left)");
  require_on_shell(p, req.right, "ff_sigma_z(right)");
  const int i = req.site;
  const std::vector<Complex>&u = req.left.roots, &l = req.right.roots;
  const Complex corner =
      -lambda_tq(p, corner_uses_uroots ? u : l, p.thetas[i - 1]);
  const CMatrix fz = fc_matrix(p, u, l, p.thetas[i - 1], 2.0, corner);
  return reconstruction_prefactor(p, u, l, i - 1, i) * lu_determinant(fz) /
         vandermonde_det(p.thetas);
}

Complex cf_minus_minus(const FormFactorRequest& req) {
  const ChainParams& p = req.params;
  p.require_nondegenerate();
  if (req.site < 2) throw std::invalid_argument("cf_minus_minus: site must be >= 2");
  require_on_shell(p, req.left, "cf_minus_minus(left)");
  require_on_shell(p, req.right, "cf_minus_minus(right)");
  const int i = req.site;
  const std::vector<Complex>&u = req.left.roots, &l = req.right.roots;
  const Complex sh = std::sinh(p.eta);
  CMatrix m(p.n, p.n);
  for (int mm = 0; mm < p.n; ++mm)
    for (int h = 0; h <= 1; ++h) {
      const double hh = static_cast<double>(h);
      const Complex t = tau_func(p, u, l, h, p.thetas[mm]) *
                        std::sinh(p.thetas[i - 2] - p.thetas[mm] + hh * p.eta) / sh *
                        std::sinh(p.thetas[i - 1] - p.thetas[mm] + hh * p.eta) / sh;
      for (int nn = 0; nn < p.n; ++nn)
        m(mm, nn) += t * e2pow(p.thetas[mm] - hh * p.eta, nn);
    }
  return reconstruction_prefactor(p, u, l, i - 2, i) * lu_determinant(m) /
         vandermonde_det(p.thetas);
}

namespace {

// F^CC for a given j' with its j'-th row removed; (N+1)x(N+1).
// Rows 1..N: P block plus the gamma_2 / sinh(theta_m - theta_j' - eta)
// column; the two appended exponential rows carry zero in the last column.
CMatrix fcc_reduced(const ChainParams& p, const std::vector<Complex>& u,
                    const std::vector<Complex>& l, int site, int jprime) {
  const int n = p.n;
  const CMatrix pm = p_matrix(p, u, l);
  CMatrix full(n + 2, n + 1);
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) full(m, j) = pm(m, j);
    const Complex den = std::sinh(p.thetas[m] - p.thetas[jprime - 1] - p.eta);
    if (std::abs(den) < kPoleTol)
      throw std::domain_error("cf_zz: sinh(theta_m - theta_j' - eta) vanishes");
    full(m, n) = gamma2(p, u, l, site, m + 1) / den;
  }
  for (int j = 0; j < n; ++j) {
    full(n, j) = e2pow(p.thetas[site - 2], j);
    full(n + 1, j) = e2pow(p.thetas[site - 1], j);
  }
  CMatrix red(n + 1, n + 1);
  for (int r = 0, rr = 0; r < n + 2; ++r) {
    if (r == jprime - 1) continue;
    for (int j = 0; j <= n; ++j) red(rr, j) = full(r, j);
    ++rr;
  }
  return red;
}

}  // namespace

Complex cc_block_expectation(const ChainParams& p, const RootSet& uroots,
                             const RootSet& lroots, int site) {
  p.require_nondegenerate();
  if (site < 2) throw std::invalid_argument("cc_block_expectation: site must be >= 2");
  require_on_shell(p, uroots, "cc_block_expectation(left)");
  require_on_shell(p, lroots, "cc_block_expectation(right)");
  const std::vector<Complex>&u = uroots.roots, &l = lroots.roots;
  Complex sum{};
  for (int jp = 1; jp <= p.n; ++jp) {
    const double sign = ((p.n + jp) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * gamma1(p, u, l, site, jp) *
           lu_determinant(fcc_reduced(p, u, l, site, jp));
  }
  return sum / vandermonde_det(p.thetas);
}

Complex cf_zz(const FormFactorRequest& req) {
  const ChainParams& p = req.params;
  p.require_nondegenerate();
  if (req.site < 2) throw std::invalid_argument("cf_zz: site must be >= 2");
  require_on_shell(p, req.left, "cf_zz(left)");
  require_on_shell(p, req.right, "cf_zz(right)");
  const int i = req.site;
  const std::vector<Complex>&u = req.left.roots, &l = req.right.roots;

  Complex cc_sum{};
  // deterministic ordered reduction over j'
  for (int jp = 1; jp <= p.n; ++jp) {
    const double sign = ((p.n + jp) % 2 == 0) ? 1.0 : -1.0;
    cc_sum += sign * gamma1(p, u, l, i, jp) *
              lu_determinant(fcc_reduced(p, u, l, i, jp));
  }

  const Complex fc_det = lu_determinant(
      fc_matrix(p, u, l, p.thetas[i - 2], 1.0, Complex{}));
  const Complex fz_det = lu_determinant(
      fc_matrix(p, u, l, p.thetas[i - 1], 2.0, -lambda_tq(p, l, p.thetas[i - 1])));

  const Complex brace = 4.0 * cc_sum -
                        2.0 * lambda_tq(p, l, p.thetas[i - 1]) * fc_det -
                        lambda_tq(p, u, p.thetas[i - 2]) * fz_det;
  return reconstruction_prefactor(p, u, l, i - 2, i) * brace /
         vandermonde_det(p.thetas);
}

}  // namespace xxz
