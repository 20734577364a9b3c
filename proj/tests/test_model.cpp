#include <doctest.h>

#include <random>

#include "test_common.hpp"
#include "xxz/homolimit.hpp"
#include "xxz/oracle.hpp"

using namespace xxz;
using namespace xxz::testutil;

namespace {

ChainParams n1_params() { return ChainParams{1, {1.0, 0.0}, {Complex{}}}; }

}  // namespace

TEST_CASE("a_func and d_func") {
  ChainParams p1 = n1_params();
  CHECK(std::abs(a_func(p1, Complex{}) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(d_func(p1, Complex{})) < 1e-15);

  ChainParams p{3, {1.0, 0.0}, {{0.1, 0.0}, {-0.2, 0.0}, {0.0, 0.3}}};
  const Complex u{0.5, 0.0};
  Complex a_ref{1.0, 0.0}, d_ref{1.0, 0.0};
  for (const Complex& th : p.thetas) {
    a_ref *= std::sinh(u - th + p.eta) / std::sinh(p.eta);
    d_ref *= std::sinh(u - th) / std::sinh(p.eta);
  }
  CHECK(std::abs(a_func(p, u) - a_ref) < 1e-14);
  CHECK(std::abs(d_func(p, u) - d_ref) < 1e-14);
}

TEST_CASE("q_func") {
  RootSet l = table_l_roots();
  CHECK(std::abs(q_func(l.roots, l.roots[0], Complex{1.0, 0.0})) < 1e-14);

  std::vector<Complex> single{Complex{}};
  CHECK(std::abs(q_func(single, Complex{1.0, 0.0}, Complex{1.0, 0.0}) -
                 Complex{1.0, 0.0}) < 1e-15);

  const Complex u{0.7, 0.0};
  Complex ref{1.0, 0.0};
  for (const Complex& r : l.roots) ref *= std::sinh(u - r) / std::sinh(1.0);
  CHECK(std::abs(q_func(l.roots, u, Complex{1.0, 0.0}) - ref) < 1e-14);
}

TEST_CASE("c_func") {
  ChainParams p = hom3();
  RootSet l = table_l_roots();

  // direct evaluation at u = 0
  Complex shift{};
  for (int i = 0; i < p.n; ++i) shift += p.thetas[i] - l.roots[i];
  const Complex ref =
      std::exp(-3.0 * p.eta + shift) - std::exp(-p.eta - shift);
  CHECK(std::abs(c_func(p, l.roots, Complex{}) - ref) < 1e-14);

  // c vanishes where the two exponentials coincide
  const Complex u0 = (static_cast<double>(p.n) - 1.0) / 2.0 * p.eta - shift;
  CHECK(std::abs(c_func(p, l.roots, u0)) < 1e-13);
}

TEST_CASE("lambda_tq at u=0 for the reference sets") {
  ChainParams p = hom3();
  RootSet u = polished(p, table_u_roots());
  RootSet l = polished(p, table_l_roots());
  CHECK(std::abs(lambda_tq(p, u.roots, Complex{}) - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(lambda_tq(p, l.roots, Complex{}) - Complex{-1.0, 0.0}) < 1e-12);

  CHECK_THROWS_AS(lambda_tq(p, l.roots, l.roots[1]), std::domain_error);

  // residue probe at each root stays small on shell
  CHECK(lambda_analyticity_residual(p, l.roots) < 1e-6);
  CHECK(lambda_analyticity_residual(p, u.roots) < 1e-6);
}

TEST_CASE("energy of the reference sets sits in the oracle spectrum") {
  ChainParams p = hom3();
  Oracle oracle(p);
  auto spectrum = oracle.hamiltonian_eigenvalues();
  auto min_dist = [&spectrum](Complex e) {
    double best = 1e300;
    for (const Complex& s : spectrum) best = std::min(best, std::abs(e - s));
    return best;
  };

  RootSet u = polished(p, table_u_roots());
  RootSet l = polished(p, table_l_roots());
  const Complex eu = energy(u, p.eta, p.n);
  const Complex el = energy(l, p.eta, p.n);
  CHECK(min_dist(eu) < 1e-9);
  CHECK(min_dist(el) < 1e-9);
  // the two states are degenerate in energy but carry opposite Lambda(0)
  CHECK(std::abs(lambda_tq(p, u.roots, Complex{}) -
                 lambda_tq(p, l.roots, Complex{})) > 1.0);
  CHECK(std::abs(eu.imag()) < 1e-10);
  CHECK(std::abs(el.imag()) < 1e-10);
}

TEST_CASE("dbar") {
  RootSet l = table_l_roots();
  const Complex eta{1.0, 0.0};
  CHECK(std::abs(dbar(l.roots, l.roots[0], 0, eta)) < 1e-14);

  std::vector<Complex> single{{0.3, 0.1}};
  const Complex u{0.7, -0.2};
  CHECK(std::abs(dbar(single, u, 1, eta) -
                 std::sinh(single[0] - u + eta) / std::sinh(eta)) < 1e-15);

  Complex ref{1.0, 0.0};
  for (const Complex& r : l.roots)
    ref *= std::sinh(r - Complex{0.2, 0.0} + eta) / std::sinh(eta);
  CHECK(std::abs(dbar(l.roots, Complex{0.2, 0.0}, 1, eta) - ref) < 1e-14);
}

TEST_CASE("tau_func") {
  std::mt19937_64 rng(31);
  ChainParams p{2, {1.0, 0.0}, rand_thetas(rng, 2)};
  std::vector<Complex> ur{rand_c(rng, 1.0, 1.0), rand_c(rng, 1.0, 1.0)};
  std::vector<Complex> lr{rand_c(rng, 1.0, 1.0), rand_c(rng, 1.0, 1.0)};
  const Complex u{0.37, 0.11};

  // h = 0 drops the bracket and the exponential
  CHECK(std::abs(tau_func(p, ur, lr, 0, u) -
                 dbar(ur, u, 0, p.eta) * dbar(lr, u, 0, p.eta)) < 1e-14);

  // independent transcription of the h = 1 branch
  const Complex ref = dbar(ur, u, 1, p.eta) * dbar(lr, u, 1, p.eta) *
                      (-a_func(p, u) / d_func(p, u - p.eta)) *
                      std::exp(2.0 * u + p.eta * static_cast<double>(p.n - 1));
  CHECK(rel_err(tau_func(p, ur, lr, 1, u), ref) < 1e-14);
}

TEST_CASE("xi_func") {
  ChainParams p = hom3();
  RootSet u = polished(p, table_u_roots());
  RootSet l = polished(p, table_l_roots());

  // explicit zero factor sinh(theta_j - u_1) when theta_j hits a left root
  std::mt19937_64 rng(5);
  ChainParams pi{3, {1.0, 0.0}, rand_thetas(rng, 3)};
  std::vector<Complex> ur = u.roots;
  CHECK(std::abs(xi_func(pi, ur, l.roots, pi.thetas[0], ur[0])) < 1e-10);

  // homogeneous specialization agrees with the tilde xi expansion at u = 0
  const Complex direct = xi_func(p, u.roots, l.roots, Complex{}, Complex{});
  const Jet tx = tilde_xi(u.roots, l.roots, p.eta, p.n, 0);
  CHECK(rel_err(direct, tx.value()) < 1e-10);
}

TEST_CASE("gamma1 and gamma2") {
  std::mt19937_64 rng(21);
  ChainParams p{3, {1.0, 0.0}, rand_thetas(rng, 3)};
  RootSet uh = table_u_roots(), lh = table_l_roots();

  // gamma1 vanishes when theta_{j'} coincides with theta_{i-1}
  CHECK(std::abs(gamma1(p, uh.roots, lh.roots, 2, 1)) < 1e-12);

  // transcription check against the displayed formulas
  const int i = 2, jp = 3, j = 3;
  const Complex g1_ref =
      -std::sinh(p.thetas[0] - p.thetas[jp - 1]) /
      std::sinh(p.thetas[i - 1] - p.thetas[0]) *
      xi_func(p, uh.roots, lh.roots, p.thetas[i - 1], p.thetas[jp - 1]);
  CHECK(rel_err(gamma1(p, uh.roots, lh.roots, i, jp), g1_ref) < 1e-13);

  const Complex g2_ref =
      -std::sinh(p.thetas[i - 1] - p.thetas[j - 1] + p.eta) *
      xi_func(p, uh.roots, lh.roots, p.thetas[i - 2], p.thetas[j - 1]);
  CHECK(rel_err(gamma2(p, uh.roots, lh.roots, i, j), g2_ref) < 1e-13);
}

TEST_CASE("phi_jk") {
  ChainParams p{3, {1.0, 0.0}, {{0.2, 0.0}, {0.2, 0.0}, {1.2, 0.0}}};
  CHECK(std::abs(phi_jk(p, 1, 2) - Complex{1.0, 0.0}) < 1e-14);  // equal thetas
  CHECK(std::abs(phi_jk(p, 3, 1)) < 1e-14);  // theta_j - theta_k = eta

  std::mt19937_64 rng(8);
  ChainParams pr{3, {1.0, 0.0}, rand_thetas(rng, 3)};
  CHECK(std::abs(phi_jk(pr, 1, 3) - phi_jk(pr, 3, 1)) < 1e-15);
}

TEST_CASE("vandermonde") {
  std::vector<Complex> one{{0.3, 0.1}};
  CHECK(std::abs(vandermonde_det(one) - Complex{1.0, 0.0}) < 1e-15);

  const Complex y{0.4, -0.2};
  std::vector<Complex> two{Complex{}, y};
  CHECK(std::abs(vandermonde_det(two) - (std::exp(2.0 * y) - 1.0)) < 1e-14);

  std::mt19937_64 rng(77);
  std::vector<Complex> xs(5);
  for (auto& x : xs) x = rand_c(rng, 0.5, 0.5);
  CHECK(rel_err(vandermonde_det(xs), lu_determinant(vandermonde(xs))) < 1e-12);
}

TEST_CASE("sov_norm_f") {
  std::mt19937_64 rng(13);
  ChainParams p{3, {1.0, 0.0}, {{0.1, 0.0}, {-0.2, 0.0}, {0.25, 0.0}}};

  CHECK(std::abs(sov_norm_f(p, {0, 0, 0}) - Complex{1.0, 0.0}) < 1e-14);

  ChainParams p1{1, {1.0, 0.0}, {{0.3, 0.0}}};
  const Complex f1 = sov_norm_f(p1, {1});
  const Complex ref1 = -a_func(p1, p1.thetas[0]) * d_func(p1, p1.thetas[0] - p1.eta);
  CHECK(rel_err(f1, ref1) < 1e-14);

  // matches the oracle inner product <h|h> for every label
  Oracle oracle(p);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> h{(mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    const Complex lhs = sov_norm_f(p, h);
    const Complex rhs =
        dot(oracle.sov_state(h, Side::left), oracle.sov_state(h, Side::right));
    CHECK(rel_err(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("SoV basis is biorthogonal and complete") {
  ChainParams p{3, {1.0, 0.0}, {{0.1, 0.0}, {-0.2, 0.0}, {0.25, 0.0}}};
  Oracle oracle(p);
  std::vector<std::vector<int>> labels;
  for (int mask = 0; mask < 8; ++mask)
    labels.push_back({(mask >> 2) & 1, (mask >> 1) & 1, mask & 1});

  for (const auto& h : labels)
    for (const auto& hp : labels) {
      if (h == hp) continue;
      const Complex ov =
          dot(oracle.sov_state(h, Side::left), oracle.sov_state(hp, Side::right));
      CHECK(std::abs(ov) < 1e-10);
    }

  CMatrix resolution(8, 8);
  for (const auto& h : labels) {
    const CVector r = oracle.sov_state(h, Side::right);
    const CVector l = oracle.sov_state(h, Side::left);
    const Complex f = sov_norm_f(p, h);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) resolution(i, j) += r[i] * l[j] / f;
  }
  CHECK(max_abs(resolution - CMatrix::identity(8)) < 1e-9);
}

TEST_CASE("scalar formulas agree between Complex and order-0 jets") {
  ChainParams p = hom3();
  RootSet l = table_l_roots();
  const Complex u{0.45, 0.15};
  Jet ju(0, u);
  CHECK(std::abs(a_func(p, u) - a_func(p, ju).value()) < 1e-12);
  CHECK(std::abs(d_func(p, u) - d_func(p, ju).value()) < 1e-12);
  CHECK(std::abs(lambda_tq(p, l.roots, u) -
                 lambda_tq(p, l.roots, ju).value()) < 1e-12);
}

TEST_CASE("parameter validation") {
  ChainParams bad{2, {0.0, 0.0}, {Complex{}, Complex{}}};
  CHECK_THROWS_AS(bad.require_valid(), std::domain_error);

  ChainParams degen{2, {1.0, 0.0}, {{0.2, 0.0}, {0.2, 0.0}}};
  CHECK_THROWS_AS(degen.require_nondegenerate(), std::domain_error);

  ChainParams eta_gap{2, {1.0, 0.0}, {{0.0, 0.0}, {1.0, 0.0}}};
  CHECK_THROWS_AS(eta_gap.require_nondegenerate(), std::domain_error);
}
