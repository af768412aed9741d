#pragma once

// Closed-form quantities behind the upper bound on the number of systoles
// of a closed hyperbolic surface, plus the comparison calculators for the
// conjectured growth rates.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "systolic/hyptrig.hpp"

namespace systolic::bounds {

/// 2 arcsinh(1): at or below this systole length distinct systoles are disjoint.
[[nodiscard]] double short_regime_threshold() noexcept;

/// Default warning slack C in "sys <= 2 log g + C". Any embedded disk of
/// radius l/2 has area at most 4 pi (g - 1), which gives
/// l <= 2 arccosh(2g - 1) < 2 log g + 2 log 4.
[[nodiscard]] double default_area_slack() noexcept;

struct BoundQuery {
  int genus;
  Length sys_length;
  Length r_prime;  // R' of the per-ball estimate
  double area_slack;

  BoundQuery(int genus, Length sys_length);
  BoundQuery(int genus, Length sys_length, Length r_prime, double area_slack);

  /// True when sys_length exceeds 2 log g + area_slack (a warning, not an error).
  [[nodiscard]] bool exceeds_area_bound() const;
};

enum class Regime { kShort, kCovering };

struct BoundReport {
  int genus;
  double sys_length;
  Regime regime;
  bool exceeds_area_bound;

  double collar_w;
  double systolic_r;
  double theta_min;
  double intersection_R;
  double cover_F;
  double per_ball_G;
  double per_ball_G_simplified;
  double balls_per_systole_H;
  double composite_bound;  // F G / H
  double effective_bound;  // 100 (g-1) e^{l/2} / l
  double kiss_upper;
};

[[nodiscard]] Length collar_width(Length l);
[[nodiscard]] Length systolic_radius(Length l);
/// arcsin(1 / (2 cosh(l/4))); l = 0 is the limiting case pi/6.
[[nodiscard]] Angle min_angle(double l);
[[nodiscard]] Length intersection_radius(Length l);

/// Area(S) / Area(D_{r/2}) with Area(S) = 4 pi (g - 1).
[[nodiscard]] double cover_count_bound(const BoundQuery &q);
/// pi sinh(R + R') / (2 arcsinh(sinh R' sin theta)).
[[nodiscard]] double per_ball_bound(const BoundQuery &q);
/// (pi/2) sinh(R + R') / theta, the simplified display with R' = arcsinh 1.
[[nodiscard]] double per_ball_bound_simplified(const BoundQuery &q);
/// 2 l / r(l).
[[nodiscard]] double balls_per_systole(const BoundQuery &q);
/// 100 (g - 1) e^{l/2} / l.
[[nodiscard]] double effective_bound(const BoundQuery &q);
/// 3g - 3 in the short regime, otherwise min(F G / H, effective bound).
[[nodiscard]] double kissing_bound(const BoundQuery &q);

[[nodiscard]] BoundReport make_report(const BoundQuery &q);

/// Reports for every (genus, length) pair, genus-major order. OpenMP-parallel.
[[nodiscard]] std::vector<BoundReport> sweep(std::span<const int> genera,
                                             std::span<const double> lengths,
                                             Length r_prime, double area_slack);

namespace serial {
[[nodiscard]] std::vector<BoundReport> sweep(std::span<const int> genera,
                                             std::span<const double> lengths,
                                             Length r_prime, double area_slack);
} // namespace serial

struct CorollaryBounds {
  int genus;
  double subquadratic;  // U g (g-1) / log g, U = 50 by default
  double conj_size;     // (4/3) log g + A
  double conj_number;   // B g^{4/3}
  double strong_lower;
};

struct CorollaryParams {
  double A = 0.0;
  double B = 1.0;
  double U = 50.0;
};

[[nodiscard]] CorollaryBounds corollary_bounds(int genus, CorollaryParams params = {});

/// g sqrt(48g - 47) + 15 g + sqrt(48g - 47)/3 - 41/3, defined for g >= 1.
[[nodiscard]] double strong_lower(int genus);

struct Rational {
  std::int64_t num;
  std::int64_t den;
  friend bool operator==(const Rational &, const Rational &) = default;
};

/// Exact value of strong_lower when 48g - 47 is a perfect square.
[[nodiscard]] std::optional<Rational> strong_lower_exact(int genus);

} // namespace systolic::bounds
