// Wall-clock comparison of the OpenMP kernels against their serial references.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "systolic/bounds.hpp"
#include "systolic/cycles.hpp"
#include "systolic/embedding.hpp"
#include "systolic/grid.hpp"
#include "systolic/identities.hpp"
#include "systolic/intersection.hpp"

using namespace systolic;

namespace {

double median_seconds(int reps, const std::function<void()> &fn) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void row(const char *name, int reps, const std::function<void()> &serial_fn,
         const std::function<void()> &parallel_fn) {
  const double s = median_seconds(reps, serial_fn);
  const double p = median_seconds(reps, parallel_fn);
  std::printf("%-22s %12.6f %12.6f %8.2fx\n", name, s, p, s / p);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app("serial vs OpenMP kernel timings");
  int reps = 5;
  int genus_max = 400;
  int lengths = 400;
  int n = 9;
  int cycle_bound = 5;
  app.add_option("--reps", reps)->capture_default_str();
  app.add_option("--genus-max", genus_max, "Bounds sweep over genus 2..genus-max")
      ->capture_default_str();
  app.add_option("--lengths", lengths, "Points in the bounds sweep length grid")
      ->capture_default_str();
  app.add_option("--n", n, "Complete graph for the cycle kernels")->capture_default_str();
  app.add_option("--cycle-bound", cycle_bound, "Cycle length bound")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

  std::vector<int> genera;
  for (int g = 2; g <= genus_max; ++g) genera.push_back(g);
  const auto ls = grid::log_spaced(0.1, 30.0, lengths);
  const Length rp(std::asinh(1.0));
  const double slack = bounds::default_area_slack();
  row("bounds sweep", reps,
      [&] { (void)bounds::serial::sweep(genera, ls, rp, slack); },
      [&] { (void)bounds::sweep(genera, ls, rp, slack); });

  identities::SuiteConfig cfg = identities::default_config();
  cfg.identity_grid = grid::log_spaced(0.1, 30.0, 5000);
  cfg.inequality_grid = grid::lin_spaced(bounds::short_regime_threshold(), 30.0, 2000);
  row("identity suite", reps,
      [&] { (void)identities::serial::run_suite(cfg); },
      [&] { (void)identities::run_suite(cfg); });

  std::mt19937_64 rng(1);
  const RotationSystem rs = embedding::random_complete_rotation(n, rng);
  row("cycle enumeration", reps,
      [&] { (void)serial::enumerate_short_cycles(rs, cycle_bound); },
      [&] { (void)enumerate_short_cycles(rs, cycle_bound); });

  const auto cycles = enumerate_short_cycles(rs, std::min(cycle_bound, 4));
  std::printf("(intersection matrix over %zu cycles)\n", cycles.size());
  row("intersection matrix", reps,
      [&] { (void)serial::intersection_matrix(cycles, rs); },
      [&] { (void)intersection_matrix(cycles, rs); });
  return 0;
}
