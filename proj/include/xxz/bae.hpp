#pragma once

#include <cstdint>
#include <vector>

#include "xxz/model.hpp"

namespace xxz {

struct SolverConfig {
  int max_iters = 60;
  double tol = 1e-11;
  int n_starts = 200;
  std::uint64_t seed = 0;
  double start_box = 2.0;  // half-width of the real part of random starts
};

/// Residuals of the Bethe ansatz equations for a candidate root set:
/// r_j = e^{l_j} a(l_j) Q(l_j - eta) - e^{-l_j - eta} d(l_j) Q(l_j + eta)
///       - c(l_j) a(l_j) d(l_j)
/// with Q and c built from the same candidates.
std::vector<Complex> bae_residual(const ChainParams& p,
                                  const std::vector<Complex>& roots);

double bae_residual_norm(const ChainParams& p, const std::vector<Complex>& roots);

/// Damped Newton from a given start; Jacobian from order-1 jets.
/// Returns a canonicalized RootSet; on_shell is set iff the final residual
/// meets tol and the roots are pairwise distinct.
RootSet polish_roots(const ChainParams& p, const std::vector<Complex>& guess,
                     double tol = 1e-11, int max_iters = 60);

/// Two-sided analyticity probe of the T-Q quotient at each root:
/// max_j (delta/2)|Lambda(l_j + delta) - Lambda(l_j - delta)|, which
/// estimates the pole residue at l_j up to O(delta^2).
double lambda_analyticity_residual(const ChainParams& p,
                                   const std::vector<Complex>& roots,
                                   double delta = 1e-4);

/// Multi-start damped Newton over the fundamental strip
/// Im in [-pi/2, pi/2], imaginary parts folded back into (-pi/2, pi/2]
/// after convergence and the residual re-checked. Deterministic for fixed
/// (p, cfg); OpenMP-parallel over starts with an ordered merge, so it
/// agrees exactly with solve_bae_serial.
std::vector<RootSet> solve_bae(const ChainParams& p, const SolverConfig& cfg);

/// Serial reference implementation of the same search.
std::vector<RootSet> solve_bae_serial(const ChainParams& p, const SolverConfig& cfg);

}  // namespace xxz
