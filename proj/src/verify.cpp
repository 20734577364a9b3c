#include "xxz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "xxz/bae.hpp"
#include "xxz/detforms.hpp"
#include "xxz/homolimit.hpp"
#include "xxz/oracle.hpp"

namespace xxz {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq ss{seed, static_cast<std::uint64_t>(trial) +
                             std::uint64_t{0x9e3779b97f4a7c15}};
  return std::mt19937_64(ss);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_spectral(std::mt19937_64& rng) {
  return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
}

std::vector<Complex> random_thetas(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Complex> th(n);
    for (auto& t : th) t = Complex{uniform(rng, -0.3, 0.3), 0.0};
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(th[i] - th[j]) < 0.03) { ok = false; break; }
    if (ok) return th;
  }
  throw std::runtime_error("random_thetas: could not draw a separated set");
}

std::vector<Complex> random_roots(std::mt19937_64& rng, int n) {
  std::vector<Complex> r(n);
  for (auto& x : r)
    x = Complex{uniform(rng, -1.0, 1.0),
                uniform(rng, -1.5, 1.5)};
  return r;
}

std::string describe(const ChainParams& p) {
  std::ostringstream os;
  os << "n=" << p.n << " eta=" << p.eta.real();
  if (p.eta.imag() != 0.0) os << "+" << p.eta.imag() << "i";
  os << " theta=[";
  for (int i = 0; i < p.n; ++i) {
    if (i) os << ", ";
    os << p.thetas[i].real();
  }
  os << "]";
  return os.str();
}

double rel_err(Complex got, Complex want) {
  // the compared quantities are O(1); for entries that vanish by a selection
  // rule the absolute difference is the meaningful error
  const double scale = std::max({std::abs(got), std::abs(want), 1.0});
  return std::abs(got - want) / scale;
}

/// Runs body(trial, rng) -> (err, case description) over all trials in
/// parallel with deterministic per-trial seeding; keeps the worst case.
CheckResult run_trials(
    const std::string& name, double tol, int trials, std::uint64_t seed,
    const std::function<std::pair<double, std::string>(int, std::mt19937_64&)>&
        body) {
  std::vector<double> errs(trials, 0.0);
  std::vector<std::string> descs(trials);
#ifdef XXZ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    try {
      auto [e, d] = body(t, rng);
      errs[t] = e;
      descs[t] = d;
    } catch (const std::exception& ex) {
      errs[t] = std::numeric_limits<double>::infinity();
      descs[t] = std::string("exception: ") + ex.what();
    }
  }
  CheckResult r{name, 0.0, tol, trials, ""};
  for (int t = 0; t < trials; ++t)
    if (errs[t] >= r.err) {
      r.err = errs[t];
      r.worst_case = "trial " + std::to_string(t) +
                     (descs[t].empty() ? "" : ": " + descs[t]);
    }
  return r;
}

/// [[C,D],[A,B]] in an explicit auxiliary qubit prepended to the space the
/// blocks act on.
CMatrix assemble_aux(const CMatrix& C, const CMatrix& D, const CMatrix& A,
                     const CMatrix& B) {
  const std::size_t d = C.rows();
  CMatrix m(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      m(i, j) = C(i, j);
      m(i, d + j) = D(i, j);
      m(d + i, j) = A(i, j);
      m(d + i, d + j) = B(i, j);
    }
  return m;
}

CMatrix swap_gate() {
  CMatrix s(4, 4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

double yang_baxter_residual(Complex u1, Complex u2, Complex u3, Complex eta) {
  const CMatrix i2 = CMatrix::identity(2);
  const CMatrix s12 = kron(swap_gate(), i2);
  const CMatrix r12 = kron(Oracle::r_matrix(u1 - u2, eta), i2);
  const CMatrix r23 = kron(i2, Oracle::r_matrix(u2 - u3, eta));
  const CMatrix r13 = s12 * kron(i2, Oracle::r_matrix(u1 - u3, eta)) * s12;
  return max_abs(r12 * r13 * r23 - r23 * r13 * r12);
}

double rtt_residual(const ChainParams& p, Complex u, Complex v) {
  Oracle oracle(p);
  const std::size_t dim = oracle.dim();
  const CMatrix i2 = CMatrix::identity(2);
  const auto& bu = oracle.monodromy(u);
  const auto& bv = oracle.monodromy(v);
  // auxiliary ordering: qubit 0 carries T0, qubit 1 carries T0bar
  const CMatrix t0 = assemble_aux(kron(i2, bu.C), kron(i2, bu.D),
                                  kron(i2, bu.A), kron(i2, bu.B));
  const CMatrix t0bar = kron(i2, assemble_aux(bv.C, bv.D, bv.A, bv.B));
  const CMatrix r =
      kron(Oracle::r_matrix(u - v, p.eta), CMatrix::identity(dim));
  return max_abs(r * t0 * t0bar - t0bar * t0 * r);
}

double log_derivative_residual(int n, Complex eta) {
  const ChainParams p = ChainParams::homogeneous(n, eta);
  Oracle oracle(p);
  const double step = 1e-5;
  const CMatrix tp = oracle.transfer(Complex{step, 0.0});
  const CMatrix tm = oracle.transfer(Complex{-step, 0.0});
  const CMatrix t0inv = inverse(oracle.transfer(Complex{0.0, 0.0}));
  const CMatrix dlog = Complex{1.0 / (2.0 * step), 0.0} * ((tp - tm) * t0inv);
  const CMatrix h = (-2.0 * std::sinh(eta)) * dlog +
                    (static_cast<double>(n) * std::cosh(eta)) *
                        CMatrix::identity(oracle.dim());
  return max_abs(h - oracle.hamiltonian());
}

struct OnShellPair {
  ChainParams p;
  RootSet left, right;
};

/// Random non-degenerate chain plus two certified root sets of its BAEs.
OnShellPair onshell_pair(std::mt19937_64& rng, int n, std::uint64_t seed,
                         int trial) {
  ChainParams p{n, Complex{1.0, 0.0}, random_thetas(rng, n)};
  SolverConfig cfg;
  cfg.n_starts = 64;
  cfg.seed = seed ^ (static_cast<std::uint64_t>(trial) * 0x2545f4914f6cdd1dull);
  const auto sols = solve_bae(p, cfg);
  if (sols.empty()) throw std::runtime_error("onshell_pair: solver found nothing");
  const std::size_t il = rng() % sols.size();
  const std::size_t ir = rng() % sols.size();
  // the determinants amplify root error; polish down to the noise floor
  return {p, polish_roots(p, sols[il].roots, 1e-13, 80),
          polish_roots(p, sols[ir].roots, 1e-13, 80)};
}

CMatrix embedded_sigma(const Oracle& oracle, const CMatrix& op2, int site) {
  return oracle.site_op(op2, site);
}

}  // namespace

std::vector<CheckResult> run_algebra_suite(int n, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;

  out.push_back(run_trials(
      "yang_baxter", 1e-12, trials, seed, [](int, std::mt19937_64& rng) {
        const Complex eta{uniform(rng, 0.6, 1.4), 0.0};
        const double e = yang_baxter_residual(random_spectral(rng),
                                              random_spectral(rng),
                                              random_spectral(rng), eta);
        return std::make_pair(e, "eta=" + std::to_string(eta.real()));
      }));

  out.push_back(run_trials(
      "rtt", 1e-10, trials, seed + 1, [n](int, std::mt19937_64& rng) {
        ChainParams p{n, Complex{1.0, 0.0}, random_thetas(rng, n)};
        const double e = rtt_residual(p, random_spectral(rng), random_spectral(rng));
        return std::make_pair(e, describe(p));
      }));

  out.push_back(run_trials(
      "transfer_commute", 1e-10, trials, seed + 2, [n](int, std::mt19937_64& rng) {
        ChainParams p{n, Complex{1.0, 0.0}, random_thetas(rng, n)};
        Oracle oracle(p);
        const CMatrix tu = oracle.transfer(random_spectral(rng));
        const CMatrix tv = oracle.transfer(random_spectral(rng));
        return std::make_pair(max_abs(tu * tv - tv * tu), describe(p));
      }));

  out.push_back(run_trials(
      "inverse_problem", 1e-8, trials, seed + 3, [n](int, std::mt19937_64& rng) {
        ChainParams p{n, Complex{1.0, 0.0}, random_thetas(rng, n)};
        Oracle oracle(p);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i)
          worst = std::max(worst, oracle.local_op_reconstruction_check(i));
        return std::make_pair(worst, describe(p));
      }));

  out.push_back(run_trials(
      "hamiltonian_log_derivative", 1e-6, trials, seed + 4,
      [n](int, std::mt19937_64& rng) {
        const Complex eta{uniform(rng, 0.6, 1.4), 0.0};
        return std::make_pair(log_derivative_residual(n, eta),
                              "eta=" + std::to_string(eta.real()));
      }));

  return out;
}

std::vector<CheckResult> run_scalar_suite(int n, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;

  out.push_back(run_trials(
      "scalar_offshell_vs_oracle", 1e-7, trials, seed + 10,
      [n](int, std::mt19937_64& rng) {
        ChainParams p{n, Complex{1.0, 0.0}, random_thetas(rng, n)};
        RootSet u{random_roots(rng, n)}, l{random_roots(rng, n)};
        Oracle oracle(p);
        const Complex want =
            oracle.direct_expectation(u.roots, l.roots,
                                      CMatrix::identity(oracle.dim()));
        const Complex got = scalar_product_offshell(p, u, l);
        return std::make_pair(rel_err(got, want), describe(p));
      }));

  out.push_back(run_trials(
      "scalar_onshell_left_vs_oracle", 1e-7, trials, seed + 11,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 11, t);
        RootSet l{random_roots(rng, n)};
        Oracle oracle(pair.p);
        const Complex want = oracle.direct_expectation(
            pair.left.roots, l.roots, CMatrix::identity(oracle.dim()));
        const Complex got = scalar_product_onshell_left(pair.p, pair.left, l);
        return std::make_pair(rel_err(got, want), describe(pair.p));
      }));

  out.push_back(run_trials(
      "scalar_onshell_right_vs_oracle", 1e-7, trials, seed + 12,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 12, t);
        RootSet u{random_roots(rng, n)};
        Oracle oracle(pair.p);
        const Complex want = oracle.direct_expectation(
            u.roots, pair.right.roots, CMatrix::identity(oracle.dim()));
        const Complex got = scalar_product_onshell_right(pair.p, u, pair.right);
        return std::make_pair(rel_err(got, want), describe(pair.p));
      }));

  out.push_back(run_trials(
      "scalar_onshell_matches_offshell", 1e-7, trials, seed + 13,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 13, t);
        RootSet l{random_roots(rng, n)};
        const Complex a = scalar_product_onshell_left(pair.p, pair.left, l);
        const Complex b = scalar_product_offshell(pair.p, pair.left, l);
        return std::make_pair(rel_err(a, b), describe(pair.p));
      }));

  return out;
}

std::vector<CheckResult> run_ff_suite(int n, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;

  out.push_back(run_trials(
      "ff_sminus_vs_oracle", 1e-7, trials, seed + 20,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 20, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i) {
          FormFactorRequest req{pair.p, pair.left, pair.right, i, FFKind::sminus};
          const Complex want = oracle.direct_expectation(
              pair.left.roots, pair.right.roots,
              embedded_sigma(oracle, Oracle::sigma_minus(), i));
          worst = std::max(worst, rel_err(ff_sigma_minus(req), want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  out.push_back(run_trials(
      "c_block_vs_oracle", 1e-7, trials, seed + 21,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 21, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i) {
          const Complex want = oracle.direct_expectation(
              pair.left.roots, pair.right.roots,
              oracle.monodromy(pair.p.thetas[i - 1]).C);
          const Complex got =
              c_block_expectation(pair.p, pair.left, pair.right, i);
          worst = std::max(worst, rel_err(got, want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  out.push_back(run_trials(
      "ff_sz_vs_oracle", 1e-7, trials, seed + 22,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 22, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i) {
          FormFactorRequest req{pair.p, pair.left, pair.right, i, FFKind::sz};
          const Complex want = oracle.direct_expectation(
              pair.left.roots, pair.right.roots,
              embedded_sigma(oracle, Oracle::pauli_z(), i));
          worst = std::max(worst, rel_err(ff_sigma_z(req), want));
          worst = std::max(worst, rel_err(ff_sigma_z(req, true), want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  return out;
}

std::vector<CheckResult> run_cf_suite(int n, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  if (n < 2)
    throw std::invalid_argument("run_cf_suite: two-point functions need n >= 2");

  out.push_back(run_trials(
      "cf_mm_vs_oracle", 1e-7, trials, seed + 30,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 30, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 2; i <= n; ++i) {
          FormFactorRequest req{pair.p, pair.left, pair.right, i,
                                FFKind::sminus_sminus};
          const CMatrix op =
              embedded_sigma(oracle, Oracle::sigma_minus(), i - 1) *
              embedded_sigma(oracle, Oracle::sigma_minus(), i);
          const Complex want = oracle.direct_expectation(pair.left.roots,
                                                         pair.right.roots, op);
          worst = std::max(worst, rel_err(cf_minus_minus(req), want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  out.push_back(run_trials(
      "cc_block_vs_oracle", 1e-7, trials, seed + 31,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 31, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 2; i <= n; ++i) {
          const CMatrix op = oracle.monodromy(pair.p.thetas[i - 2]).C *
                             oracle.monodromy(pair.p.thetas[i - 1]).C;
          const Complex want = oracle.direct_expectation(pair.left.roots,
                                                         pair.right.roots, op);
          const Complex got =
              cc_block_expectation(pair.p, pair.left, pair.right, i);
          worst = std::max(worst, rel_err(got, want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  out.push_back(run_trials(
      "cf_zz_vs_oracle", 1e-6, trials, seed + 32,
      [n, seed](int t, std::mt19937_64& rng) {
        auto pair = onshell_pair(rng, n, seed + 32, t);
        Oracle oracle(pair.p);
        double worst = 0.0;
        for (int i = 2; i <= n; ++i) {
          FormFactorRequest req{pair.p, pair.left, pair.right, i, FFKind::sz_sz};
          const CMatrix op = embedded_sigma(oracle, Oracle::pauli_z(), i - 1) *
                             embedded_sigma(oracle, Oracle::pauli_z(), i);
          const Complex want = oracle.direct_expectation(pair.left.roots,
                                                         pair.right.roots, op);
          worst = std::max(worst, rel_err(cf_zz(req), want));
        }
        return std::make_pair(worst, describe(pair.p));
      }));

  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n, int trials,
                                   std::uint64_t seed) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("run_suite: n must be in 1..6");
  std::vector<CheckResult> out;
  const auto append = [&out](std::vector<CheckResult> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  if (suite == "algebra" || suite == "all") append(run_algebra_suite(n, trials, seed));
  if (suite == "scalar" || suite == "all") append(run_scalar_suite(n, trials, seed));
  if (n >= 1 && (suite == "ff" || suite == "all"))
    append(run_ff_suite(n, trials, seed));
  if (n >= 2 && (suite == "cf" || suite == "all"))
    append(run_cf_suite(n, trials, seed));
  if (out.empty())
    throw std::invalid_argument("run_suite: unknown suite " + suite);
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass(); });
}

}  // namespace xxz
