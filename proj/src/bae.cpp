#include "xxz/bae.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

namespace xxz {

namespace {

constexpr double kPi = std::numbers::pi;

template <class S>
std::vector<S> residual_t(const ChainParams& p, const std::vector<S>& roots) {
  const Complex sh = std::sinh(p.eta);
  const int n = p.n;

  auto q_at = [&](const S& u) {
    S prod = scalar_like(u, {1.0, 0.0});
    for (const S& l : roots) prod = prod * (s_sinh(u - l) / sh);
    return prod;
  };

  Complex theta_sum{};
  for (const Complex& th : p.thetas) theta_sum += th;
  S root_sum = scalar_like(roots[0], {0.0, 0.0});
  for (const S& l : roots) root_sum = root_sum + l;

  auto c_at = [&](const S& u) {
    return s_exp(u - static_cast<double>(n) * p.eta + theta_sum - root_sum) -
           s_exp(-u - p.eta - theta_sum + root_sum);
  };

  std::vector<S> r;
  r.reserve(n);
  for (int j = 0; j < n; ++j) {
    const S& x = roots[j];
    const S a = a_func(p, x);
    const S d = d_func(p, x);
    r.push_back(s_exp(x) * a * q_at(x - p.eta) -
                s_exp(-x - p.eta) * d * q_at(x + p.eta) - c_at(x) * a * d);
  }
  return r;
}

double norm_inf(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Jacobian column k from order-1 jets in root k.
CMatrix jacobian(const ChainParams& p, const std::vector<Complex>& roots) {
  const int n = p.n;
  CMatrix j(n, n);
  for (int k = 0; k < n; ++k) {
    std::vector<Jet> jr;
    jr.reserve(n);
    for (int m = 0; m < n; ++m)
      jr.push_back(m == k ? Jet::variable(1, roots[m]) : Jet(1, roots[m]));
    const std::vector<Jet> r = residual_t(p, jr);
    for (int i = 0; i < n; ++i) j(i, k) = r[i][1];
  }
  return j;
}

double fold_im(double im) {
  double y = std::remainder(im, kPi);
  if (y <= -kPi / 2.0) y += kPi;
  return y;
}

bool pairwise_distinct(const std::vector<Complex>& roots, double tol = 1e-10) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < tol) return false;
  return true;
}

// Root pairs with lambda_i - lambda_j = +-eta (mod i pi) degenerate the
// T-Q relation: one equation is satisfied identically and the Newton map
// converges onto a continuum of non-physical sets. Reject them.
bool eta_pair_free(const std::vector<Complex>& roots, Complex eta,
                   double tol = 1e-6) {
  auto near_mod_ipi = [tol](Complex z) {
    return std::abs(Complex{z.real(), std::remainder(z.imag(), kPi)}) < tol;
  };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Complex d = roots[i] - roots[j];
      if (near_mod_ipi(d - eta) || near_mod_ipi(d + eta)) return false;
    }
  return true;
}

struct NewtonResult {
  std::vector<Complex> roots;
  double residual;
};

// Damped Newton with no folding or certification.
std::optional<NewtonResult> newton_core(const ChainParams& p,
                                        std::vector<Complex> x, double tol,
                                        int max_iters) {
  double norm = norm_inf(residual_t(p, x));
  for (int it = 0; it < max_iters && norm > tol; ++it) {
    std::vector<Complex> r = residual_t(p, x);
    CVector rhs(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rhs[i] = -r[i];
    CVector step;
    try {
      step = lu_solve(jacobian(p, x), std::move(rhs));
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
    // halve the step until the residual decreases, else abandon the start
    double scale = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings <= 20; ++halvings) {
      std::vector<Complex> xn = x;
      for (std::size_t i = 0; i < xn.size(); ++i) xn[i] += scale * step[i];
      const double nn = norm_inf(residual_t(p, xn));
      if (nn < norm) {
        x = std::move(xn);
        norm = nn;
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  if (norm > tol) return std::nullopt;
  return NewtonResult{std::move(x), norm};
}

std::optional<RootSet> newton_from(const ChainParams& p, std::vector<Complex> x0,
                                   double tol, int max_iters) {
  auto nr = newton_core(p, std::move(x0), tol, max_iters);
  if (!nr) return std::nullopt;

  // fold into the fundamental strip and re-certify the residual
  std::vector<Complex> folded(nr->roots.size());
  for (std::size_t i = 0; i < nr->roots.size(); ++i)
    folded[i] = Complex{nr->roots[i].real(), fold_im(nr->roots[i].imag())};
  double fnorm = norm_inf(residual_t(p, folded));
  if (fnorm > tol) {
    auto rp = newton_core(p, folded, tol, 10);
    if (!rp) return std::nullopt;
    for (const Complex& c : rp->roots)
      if (c.imag() <= -kPi / 2.0 - 1e-9 || c.imag() > kPi / 2.0 + 1e-9)
        return std::nullopt;
    folded = std::move(rp->roots);
    fnorm = rp->residual;
  }
  // drive the residual to its floor so repeated finds of the same root
  // set coincide within the dedup distance
  for (int it = 0; it < 8; ++it) {
    std::vector<Complex> r = residual_t(p, folded);
    CVector rhs(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rhs[i] = -r[i];
    CVector step;
    try {
      step = lu_solve(jacobian(p, folded), std::move(rhs));
    } catch (const std::runtime_error&) {
      break;
    }
    std::vector<Complex> xn = folded;
    for (std::size_t i = 0; i < xn.size(); ++i) xn[i] += step[i];
    const double nn = norm_inf(residual_t(p, xn));
    if (nn >= fnorm) break;
    folded = std::move(xn);
    fnorm = nn;
  }
  if (!pairwise_distinct(folded)) return std::nullopt;
  if (!eta_pair_free(folded, p.eta)) return std::nullopt;
  // runaway real parts make every exponential underflow and the residual
  // vacuously zero; physical roots stay within a few units of the thetas
  for (const Complex& c : folded)
    if (std::abs(c.real()) > 20.0) return std::nullopt;

  RootSet rs;
  rs.roots = std::move(folded);
  rs.residual = fnorm;
  rs.on_shell = true;
  rs.canonicalize();
  return rs;
}

std::vector<Complex> start_point(const ChainParams& p, const SolverConfig& cfg,
                                 int start) {
  // per-start generator so parallel and serial runs sample identically
  std::seed_seq seq{cfg.seed,
                    static_cast<std::uint64_t>(start) +
                        std::uint64_t{0x9e3779b97f4a7c15}};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> re(-cfg.start_box, cfg.start_box);
  std::uniform_real_distribution<double> im(-kPi / 2.0, kPi / 2.0);
  std::vector<Complex> x(p.n);
  // stratified: uniform box, real line, and strip-boundary line starts.
  // Purely uniform sampling almost never reaches the states whose roots
  // all sit on Im = pi/2 (the basin is tiny), yet those are common.
  const int kind = start % 3;
  for (int j = 0; j < p.n; ++j) {
    double y = kind == 0 ? im(rng) : (kind == 1 ? 0.0 : kPi / 2.0);
    x[j] = Complex{re(rng), y};
  }
  return x;
}

// equality modulo the i pi quasi-period of sinh, as a root multiset
bool same_mod_ipi(const RootSet& a, const RootSet& b, double tol = 1e-8) {
  if (a.roots.size() != b.roots.size()) return false;
  std::vector<bool> used(b.roots.size(), false);
  for (const Complex& x : a.roots) {
    bool found = false;
    for (std::size_t j = 0; j < b.roots.size(); ++j) {
      if (used[j]) continue;
      const Complex d = x - b.roots[j];
      if (std::abs(Complex{d.real(), std::remainder(d.imag(), kPi)}) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<RootSet> merge_solutions(const ChainParams& p,
                                     std::vector<RootSet> found,
                                     double probe_tol = 1e-6) {
  std::sort(found.begin(), found.end(), [](const RootSet& a, const RootSet& b) {
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      const Complex x = a.roots[i], y = b.roots[i];
      if (std::abs(x.imag() - y.imag()) > 1e-12) return x.imag() < y.imag();
      if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
    }
    return false;
  });
  std::vector<RootSet> out;
  for (RootSet& rs : found) {
    bool dup = false;
    for (RootSet& kept : out)
      if (same_mod_ipi(kept, rs)) {
        dup = true;
        if (rs.residual < kept.residual) kept = rs;
        break;
      }
    if (!dup) out.push_back(std::move(rs));
  }
  // certification: keep only root sets whose T-Q quotient is pole-free
  std::vector<RootSet> certified;
  for (RootSet& rs : out) {
    bool ok = false;
    try {
      ok = lambda_analyticity_residual(p, rs.roots) <= probe_tol;
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (ok) certified.push_back(std::move(rs));
  }
  return certified;
}

}  // namespace

std::vector<Complex> bae_residual(const ChainParams& p,
                                  const std::vector<Complex>& roots) {
  if (roots.size() != static_cast<std::size_t>(p.n))
    throw std::invalid_argument("bae_residual: root count");
  return residual_t(p, roots);
}

double bae_residual_norm(const ChainParams& p, const std::vector<Complex>& roots) {
  return norm_inf(bae_residual(p, roots));
}

RootSet polish_roots(const ChainParams& p, const std::vector<Complex>& guess,
                     double tol, int max_iters) {
  auto nr = newton_core(p, guess, tol, max_iters);
  RootSet rs;
  if (nr) {
    rs.roots = std::move(nr->roots);
    rs.residual = nr->residual;
    rs.on_shell = pairwise_distinct(rs.roots);
  } else {
    rs.roots = guess;
    rs.residual = bae_residual_norm(p, guess);
    rs.on_shell = false;
  }
  rs.canonicalize();
  return rs;
}

double lambda_analyticity_residual(const ChainParams& p,
                                   const std::vector<Complex>& roots,
                                   double delta) {
  double worst = 0.0;
  for (const Complex& l : roots) {
    const Complex lp = lambda_tq(p, roots, l + Complex{delta, 0.0});
    const Complex lm = lambda_tq(p, roots, l - Complex{delta, 0.0});
    // (delta/2)(lp - lm) = residue + O(delta^2); the analytic part of
    // Lambda drops out, so this vanishes exactly when the pole does
    worst = std::max(worst, 0.5 * delta * std::abs(lp - lm));
  }
  return worst;
}

std::vector<RootSet> solve_bae_serial(const ChainParams& p, const SolverConfig& cfg) {
  p.require_valid();
  std::vector<RootSet> found;
  for (int s = 0; s < cfg.n_starts; ++s) {
    auto rs = newton_from(p, start_point(p, cfg, s), cfg.tol, cfg.max_iters);
    if (rs) found.push_back(std::move(*rs));
  }
  return merge_solutions(p, std::move(found));
}

std::vector<RootSet> solve_bae(const ChainParams& p, const SolverConfig& cfg) {
  p.require_valid();
  std::vector<std::optional<RootSet>> slots(cfg.n_starts);
#ifdef XXZ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int s = 0; s < cfg.n_starts; ++s)
    slots[s] = newton_from(p, start_point(p, cfg, s), cfg.tol, cfg.max_iters);
  std::vector<RootSet> found;
  for (auto& slot : slots)
    if (slot) found.push_back(std::move(*slot));
  return merge_solutions(p, std::move(found));
}

}  // namespace xxz
