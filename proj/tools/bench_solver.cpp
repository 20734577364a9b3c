#include <chrono>
#include <cstdio>
#include <string>

#include "xxz/bae.hpp"

// Times the multi-start BAE solver against its serial reference and checks
// that both return identical solution sets.

using namespace xxz;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 3;
  int starts = 400;
  int reps = 3;
  if (argc > 1) n = std::stoi(argv[1]);
  if (argc > 2) starts = std::stoi(argv[2]);
  if (argc > 3) reps = std::stoi(argv[3]);

  const ChainParams p = ChainParams::homogeneous(n, Complex{1.0, 0.0});
  SolverConfig cfg;
  cfg.n_starts = starts;
  cfg.seed = 7;

  std::printf("BAE solver benchmark: N=%d, %d starts, %d reps\n", n, starts,
              reps);

  std::vector<RootSet> par, ser;
  double best_par = 1e300, best_ser = 1e300;
  for (int r = 0; r < reps; ++r) {
    best_par = std::min(best_par, time_ms([&] { par = solve_bae(p, cfg); }));
    best_ser = std::min(best_ser,
                        time_ms([&] { ser = solve_bae_serial(p, cfg); }));
  }

  bool same = par.size() == ser.size();
  for (std::size_t i = 0; same && i < par.size(); ++i)
    same = par[i].same_roots(ser[i], 1e-12);

  std::printf("parallel: %8.2f ms  (%zu solutions)\n", best_par, par.size());
  std::printf("serial:   %8.2f ms  (%zu solutions)\n", best_ser, ser.size());
  std::printf("speedup:  %8.2fx\n", best_ser / best_par);
  std::printf("results identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
