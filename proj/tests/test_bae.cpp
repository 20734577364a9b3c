#include <doctest.h>

#include "test_common.hpp"
#include "xxz/bae.hpp"
#include "xxz/oracle.hpp"

using namespace xxz;
using namespace xxz::testutil;

TEST_CASE("published root sets satisfy the equations") {
  ChainParams p = hom3();
  CHECK(bae_residual_norm(p, table_l_roots().roots) < 1e-9);
  CHECK(bae_residual_norm(p, table_u_roots().roots) < 1e-9);

  auto perturbed = table_l_roots().roots;
  perturbed[0] += 0.1;
  CHECK(bae_residual_norm(p, perturbed) > 1e-3);
}

TEST_CASE("polish drives the residual to the floor") {
  ChainParams p = hom3();
  RootSet rs = polish_roots(p, table_l_roots().roots, 1e-13, 80);
  CHECK(rs.on_shell);
  CHECK(rs.residual < 1e-13);
}

TEST_CASE("solver recovers both published sets") {
  ChainParams p = hom3();
  SolverConfig cfg;
  cfg.n_starts = 200;
  cfg.seed = 7;
  auto sols = solve_bae(p, cfg);
  REQUIRE(!sols.empty());

  bool found_u = false, found_l = false;
  for (const auto& s : sols) {
    CHECK(s.on_shell);
    CHECK(s.residual <= cfg.tol);
    if (s.same_roots(table_u_roots(), 1e-9)) found_u = true;
    if (s.same_roots(table_l_roots(), 1e-9)) found_l = true;
  }
  CHECK(found_u);
  CHECK(found_l);
}

TEST_CASE("solver is deterministic and parallel matches serial") {
  ChainParams p = hom3();
  SolverConfig cfg;
  cfg.n_starts = 120;
  cfg.seed = 3;
  auto a = solve_bae(p, cfg);
  auto b = solve_bae(p, cfg);
  auto c = solve_bae_serial(p, cfg);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].same_roots(b[i], 1e-14));
    CHECK(a[i].same_roots(c[i], 1e-14));
  }
}

TEST_CASE("certified sets pass the analyticity probe and the spectrum check") {
  ChainParams p = hom3();
  Oracle oracle(p);
  auto spectrum = oracle.hamiltonian_eigenvalues();
  SolverConfig cfg;
  cfg.n_starts = 200;
  cfg.seed = 7;
  for (const auto& s : solve_bae(p, cfg)) {
    CHECK(lambda_analyticity_residual(p, s.roots) < 1e-6);
    const Complex e = energy(s, p.eta, p.n);
    double best = 1e300;
    for (const Complex& ev : spectrum) best = std::min(best, std::abs(e - ev));
    CHECK(best < 1e-7);
  }
}

TEST_CASE("N=2 solutions map onto distinct transfer eigenvalue functions") {
  ChainParams p = ChainParams::homogeneous(2, {1.0, 0.0});
  Oracle oracle(p);
  SolverConfig cfg;
  cfg.n_starts = 400;
  cfg.seed = 1;
  auto sols = solve_bae(p, cfg);
  REQUIRE(!sols.empty());

  const std::vector<Complex> probes{{0.31, 0.0}, {-0.22, 0.1}, {0.05, -0.17}};
  std::vector<std::vector<Complex>> eig_at_probe;
  for (const Complex& u : probes) eig_at_probe.push_back(oracle.transfer_eigenvalues(u));

  // every solution's Lambda(u) matches an oracle eigenvalue at each probe,
  // and distinct solutions give distinct eigenvalue triples
  std::vector<std::vector<Complex>> triples;
  for (const auto& s : sols) {
    std::vector<Complex> triple;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Complex lam = lambda_tq(p, s.roots, probes[k]);
      double best = 1e300;
      for (const Complex& ev : eig_at_probe[k]) best = std::min(best, std::abs(lam - ev));
      CHECK(best < 1e-7 * std::max(1.0, std::abs(lam)));
      triple.push_back(lam);
    }
    triples.push_back(triple);
  }
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      double diff = 0.0;
      for (std::size_t k = 0; k < probes.size(); ++k)
        diff = std::max(diff, std::abs(triples[i][k] - triples[j][k]));
      CHECK(diff > 1e-6);
    }
}

TEST_CASE("N=1 roots certify against the 2x2 transfer matrix") {
  ChainParams p = ChainParams::homogeneous(1, {1.0, 0.0});
  Oracle oracle(p);
  SolverConfig cfg;
  cfg.n_starts = 60;
  cfg.seed = 2;
  auto sols = solve_bae(p, cfg);
  REQUIRE(!sols.empty());
  for (const auto& s : sols) {
    const Complex u{0.4, 0.1};
    const Complex lam = lambda_tq(p, s.roots, u);
    double best = 1e300;
    for (const Complex& ev : oracle.transfer_eigenvalues(u))
      best = std::min(best, std::abs(lam - ev));
    CHECK(best < 1e-8);
  }
}
