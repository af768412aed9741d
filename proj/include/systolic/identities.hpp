#pragma once

// Numerical verification sweep: exact trigonometric identities checked to a
// relative tolerance, and the closed-form inequalities of the covering
// argument checked on (genus, length) grids.

#include <string>
#include <vector>

namespace systolic::identities {

enum class CheckKind { kIdentity, kInequality, kMonotone };

struct CheckResult {
  std::string name;
  CheckKind kind;
  std::size_t points = 0;
  /// Identities: max relative error. Inequalities: max of lhs/rhs (must stay
  /// below 1). Monotone: number of order violations.
  double worst = 0.0;
  double tolerance = 0.0;
  /// Length at which `worst` was attained (NaN when not applicable).
  double worst_length = 0.0;
  /// Smallest failing length, NaN when none failed.
  double first_failure = 0.0;
  bool passed = false;
  /// Non-gating checks are reported but do not affect the suite verdict.
  bool gating = true;
};

struct SuiteConfig {
  std::vector<double> identity_grid;   // default: 50 log-spaced points on [0.1, 30]
  std::vector<double> inequality_grid; // default: 200 points on [2 arcsinh 1, 30]
  std::vector<int> genera;             // default: 2..100
  /// Multiplies every checked left-hand side; 1.0 for honest runs.
  double perturbation = 1.0;
  /// Make the 100 (g-1) e^{l/2} / l comparison gating.
  bool strict = false;
};

[[nodiscard]] SuiteConfig default_config();

struct SuiteResult {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

/// OpenMP-parallel over grid points.
[[nodiscard]] SuiteResult run_suite(const SuiteConfig &config);

namespace serial {
[[nodiscard]] SuiteResult run_suite(const SuiteConfig &config);
} // namespace serial

} // namespace systolic::identities
