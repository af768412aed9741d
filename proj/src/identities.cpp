#include "systolic/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "systolic/bounds.hpp"
#include "systolic/grid.hpp"
#include "systolic/hyptrig.hpp"

namespace systolic::identities {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Sample {
  double value;   // error or ratio at this point
  double length;  // l of this point
  bool failed;
};

struct Scan {
  double worst = -std::numeric_limits<double>::infinity();
  double worst_length = kNaN;
  double first_failure = kNaN;
  std::size_t points = 0;

  void absorb(const Sample &s) {
    ++points;
    if (s.value > worst || std::isnan(worst_length)) {
      worst = s.value;
      worst_length = s.length;
    }
    if (s.failed && (std::isnan(first_failure) || s.length < first_failure)) {
      first_failure = s.length;
    }
  }

  void merge(const Scan &o) {
    points += o.points;
    if (o.points > 0 && (o.worst > worst || std::isnan(worst_length))) {
      worst = o.worst;
      worst_length = o.worst_length;
    }
    if (!std::isnan(o.first_failure) &&
        (std::isnan(first_failure) || o.first_failure < first_failure)) {
      first_failure = o.first_failure;
    }
  }
};

template <typename Fn>
Scan scan(std::size_t n, Fn &&sample, bool parallel) {
  Scan total;
  if (!parallel) {
    for (std::size_t i = 0; i < n; ++i) total.absorb(sample(i));
    return total;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    Scan local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) local.absorb(sample(static_cast<std::size_t>(i)));
#pragma omp critical(systolic_identity_merge)
    total.merge(local);
  }
  return total;
}

double rel_error(double lhs, double rhs) { return std::abs(lhs - rhs) / std::abs(rhs); }

// cosh(x) - 1 without cancellation.
double cosh_m1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

CheckResult finish(std::string name, CheckKind kind, const Scan &s, double tol, bool gating) {
  CheckResult r;
  r.name = std::move(name);
  r.kind = kind;
  r.points = s.points;
  r.worst = s.points > 0 ? s.worst : 0.0;
  r.tolerance = tol;
  r.worst_length = s.worst_length;
  r.first_failure = s.first_failure;
  r.passed = std::isnan(s.first_failure);
  r.gating = gating;
  return r;
}

void validate(const SuiteConfig &cfg) {
  // Throws before any OpenMP region is entered.
  for (double l : cfg.identity_grid) (void)Length(l);
  for (double l : cfg.inequality_grid) (void)Length(l);
  for (int g : cfg.genera) (void)bounds::BoundQuery(g, Length(1.0));
  if (cfg.identity_grid.empty() || cfg.inequality_grid.empty() || cfg.genera.empty()) {
    throw std::invalid_argument("verification grids must be non-empty");
  }
}

SuiteResult run(const SuiteConfig &cfg, bool parallel) {
  validate(cfg);
  const double pert = cfg.perturbation;
  const auto &L = cfg.identity_grid;
  SuiteResult out;

  auto identity = [&](std::string name, double tol, auto &&lhs_rhs) {
    const Scan s = scan(
        L.size(),
        [&](std::size_t i) {
          const double l = L[i];
          const auto [lhs, rhs] = lhs_rhs(l);
          const double err = rel_error(lhs * pert, rhs);
          return Sample{err, l, !(err <= tol)};
        },
        parallel);
    out.checks.push_back(finish(std::move(name), CheckKind::kIdentity, s, tol, true));
  };

  identity("systolic_collar", 1e-12, [](double l) {
    const double r = bounds::systolic_radius(Length(l)).value();
    return std::pair{std::cosh(2.0 * r) * cosh_m1(0.5 * l), std::cosh(0.5 * l)};
  });
  identity("symmetric_pants", 1e-12, [](double l) {
    const double d = hyptrig::pants_adjacent_distance(Length(l), Length(l), Length(l)).value();
    return std::pair{std::cosh(d) * cosh_m1(0.5 * l), std::cosh(0.5 * l)};
  });
  identity("pants_equals_twice_systolic_radius", 1e-12, [](double l) {
    const double d = hyptrig::pants_adjacent_distance(Length(l), Length(l), Length(l)).value();
    return std::pair{d, 2.0 * bounds::systolic_radius(Length(l)).value()};
  });
  identity("double_angle", 1e-14, [](double l) {
    return std::pair{std::sinh(0.25 * l) / std::sinh(0.5 * l), 0.5 / std::cosh(0.25 * l)};
  });
  identity("min_angle_definition", 1e-14, [](double l) {
    return std::pair{std::sin(bounds::min_angle(l).radians()) * 2.0 * std::cosh(0.25 * l), 1.0};
  });

  // Inequalities over genus x length; ratios must stay below 1.
  const auto &I = cfg.inequality_grid;
  const auto &G = cfg.genera;
  const std::size_t gl = G.size() * I.size();
  auto inequality = [&](std::string name, bool strict_lt, bool gating, std::size_t n,
                        auto &&ratio) {
    const Scan s = scan(
        n,
        [&](std::size_t k) {
          const auto [value, l] = ratio(k);
          const double v = value * pert;
          return Sample{v, l, strict_lt ? !(v < 1.0) : !(v <= 1.0)};
        },
        parallel);
    out.checks.push_back(finish(std::move(name), CheckKind::kInequality, s, 1.0, gating));
  };

  inequality("cover_F_below_16(g-1)e^(l/2)", true, true, gl, [&](std::size_t k) {
    const int g = G[k / I.size()];
    const double l = I[k % I.size()];
    const bounds::BoundQuery q(g, Length(l));
    return std::pair{bounds::cover_count_bound(q) / (16.0 * (g - 1) * std::exp(0.5 * l)), l};
  });
  inequality("area_minorant_(pi/4)e^(-l/2)", true, true, I.size(), [&](std::size_t k) {
    const double l = I[k];
    const double r = bounds::systolic_radius(Length(l)).value();
    const double minorant = 0.25 * std::numbers::pi * std::exp(-0.5 * l);
    return std::pair{minorant / hyptrig::disk_area(Length(0.5 * r)), l};
  });
  inequality("composite_FG/H_below_effective", false, cfg.strict, gl, [&](std::size_t k) {
    const int g = G[k / I.size()];
    const double l = I[k % I.size()];
    const bounds::BoundQuery q(g, Length(l));
    const double composite =
        bounds::cover_count_bound(q) * bounds::per_ball_bound(q) / bounds::balls_per_systole(q);
    return std::pair{composite / bounds::effective_bound(q), l};
  });

  // Monotonicity on the sorted identity grid and along the genus grid;
  // `worst` holds the violation count.
  auto monotone = [&](std::string name, const Scan &s, std::size_t violations) {
    CheckResult r = finish(std::move(name), CheckKind::kMonotone, s, 0.0, true);
    r.worst = static_cast<double>(violations);
    out.checks.push_back(r);
  };
  {
    std::vector<double> sorted = L;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Scan s;
    std::size_t violations = 0;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      const Length a(sorted[i]);
      const Length b(sorted[i + 1]);
      const bool ok = bounds::collar_width(a) > bounds::collar_width(b) &&
                      bounds::systolic_radius(a) > bounds::systolic_radius(b) &&
                      bounds::intersection_radius(a) > bounds::intersection_radius(b) &&
                      bounds::min_angle(a.value()) > bounds::min_angle(b.value());
      violations += ok ? 0 : 1;
      s.absorb(Sample{ok ? 0.0 : 1.0, sorted[i + 1], !ok});
    }
    monotone("w_r_R_theta_strictly_decreasing", s, violations);
  }
  {
    std::vector<int> genera = G;
    std::sort(genera.begin(), genera.end());
    Scan s;
    std::size_t violations = 0;
    for (double l : I) {
      for (std::size_t i = 0; i + 1 < genera.size(); ++i) {
        const bool ok = bounds::kissing_bound(bounds::BoundQuery(genera[i], Length(l))) <=
                        bounds::kissing_bound(bounds::BoundQuery(genera[i + 1], Length(l)));
        violations += ok ? 0 : 1;
        s.absorb(Sample{ok ? 0.0 : 1.0, l, !ok});
      }
    }
    monotone("kissing_bound_nondecreasing_in_genus", s, violations);
  }
  return out;
}

} // namespace

SuiteConfig default_config() {
  SuiteConfig cfg;
  cfg.identity_grid = grid::log_spaced(0.1, 30.0, 50);
  cfg.inequality_grid = grid::lin_spaced(bounds::short_regime_threshold(), 30.0, 200);
  for (int g = 2; g <= 100; ++g) cfg.genera.push_back(g);
  return cfg;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.passed || !c.gating; });
}

SuiteResult run_suite(const SuiteConfig &config) { return run(config, true); }

namespace serial {
SuiteResult run_suite(const SuiteConfig &config) { return run(config, false); }
} // namespace serial

} // namespace systolic::identities
