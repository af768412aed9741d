#include "systolic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "systolic/error.hpp"

namespace systolic::bounds {
namespace {

constexpr double kPi = std::numbers::pi;

void check_genus(int genus) {
  if (genus < 2) {
    throw DomainError("genus must be at least 2, got " + std::to_string(genus));
  }
}

} // namespace

double short_regime_threshold() noexcept { return 2.0 * std::asinh(1.0); }

double default_area_slack() noexcept { return 2.0 * std::log(4.0); }

BoundQuery::BoundQuery(int genus, Length sys_length)
    : BoundQuery(genus, sys_length, Length(std::asinh(1.0)), default_area_slack()) {}

BoundQuery::BoundQuery(int genus, Length sys_length, Length r_prime, double area_slack)
    : genus(genus), sys_length(sys_length), r_prime(r_prime), area_slack(area_slack) {
  check_genus(genus);
  if (!std::isfinite(area_slack)) {
    throw DomainError("area slack must be finite");
  }
}

bool BoundQuery::exceeds_area_bound() const {
  return sys_length.value() > 2.0 * std::log(static_cast<double>(genus)) + area_slack;
}

Length collar_width(Length l) { return Length(std::asinh(1.0 / std::sinh(0.5 * l.value()))); }

Length systolic_radius(Length l) {
  return Length(std::asinh(1.0 / (2.0 * std::sinh(0.25 * l.value()))));
}

Angle min_angle(double l) {
  if (!std::isfinite(l) || l < 0.0) {
    throw DomainError("min_angle: length must be finite and non-negative");
  }
  if (l > kMaxLength) {
    throw RangeError("min_angle: length exceeds supported range");
  }
  return Angle(std::asin(1.0 / (2.0 * std::cosh(0.25 * l))));
}

Length intersection_radius(Length l) {
  return Length(std::asinh(2.0 / std::tanh(0.25 * l.value())));
}

double cover_count_bound(const BoundQuery &q) {
  const double r = systolic_radius(q.sys_length).value();
  return 4.0 * kPi * (q.genus - 1) / hyptrig::disk_area(Length(0.5 * r));
}

double per_ball_bound(const BoundQuery &q) {
  const double R = intersection_radius(q.sys_length).value();
  const double theta = min_angle(q.sys_length.value()).radians();
  const double rp = q.r_prime.value();
  return kPi * std::sinh(R + rp) / (2.0 * std::asinh(std::sinh(rp) * std::sin(theta)));
}

double per_ball_bound_simplified(const BoundQuery &q) {
  const double R = intersection_radius(q.sys_length).value();
  const double theta = min_angle(q.sys_length.value()).radians();
  return 0.5 * kPi * std::sinh(R + q.r_prime.value()) / theta;
}

double balls_per_systole(const BoundQuery &q) {
  return 2.0 * q.sys_length.value() / systolic_radius(q.sys_length).value();
}

double effective_bound(const BoundQuery &q) {
  const double l = q.sys_length.value();
  return 100.0 * (q.genus - 1) * std::exp(0.5 * l) / l;
}

double kissing_bound(const BoundQuery &q) {
  if (q.sys_length.value() <= short_regime_threshold()) {
    return 3.0 * q.genus - 3.0;
  }
  const double composite = cover_count_bound(q) * per_ball_bound(q) / balls_per_systole(q);
  return std::min(composite, effective_bound(q));
}

BoundReport make_report(const BoundQuery &q) {
  const Length l = q.sys_length;
  BoundReport rep{};
  rep.genus = q.genus;
  rep.sys_length = l.value();
  rep.regime = l.value() <= short_regime_threshold() ? Regime::kShort : Regime::kCovering;
  rep.exceeds_area_bound = q.exceeds_area_bound();
  rep.collar_w = collar_width(l).value();
  rep.systolic_r = systolic_radius(l).value();
  rep.theta_min = min_angle(l.value()).radians();
  rep.intersection_R = intersection_radius(l).value();
  rep.cover_F = cover_count_bound(q);
  rep.per_ball_G = per_ball_bound(q);
  rep.per_ball_G_simplified = per_ball_bound_simplified(q);
  rep.balls_per_systole_H = balls_per_systole(q);
  rep.composite_bound = rep.cover_F * rep.per_ball_G / rep.balls_per_systole_H;
  rep.effective_bound = effective_bound(q);
  rep.kiss_upper = kissing_bound(q);
  return rep;
}

std::vector<BoundReport> sweep(std::span<const int> genera, std::span<const double> lengths,
                               Length r_prime, double area_slack) {
  // Validate serially so exceptions never escape an OpenMP region.
  std::vector<BoundQuery> queries;
  queries.reserve(genera.size() * lengths.size());
  for (int g : genera) {
    for (double l : lengths) {
      queries.emplace_back(g, Length(l), r_prime, area_slack);
    }
  }
  std::vector<BoundReport> out(queries.size());
  const auto count = static_cast<std::int64_t>(queries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = make_report(queries[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace serial {

std::vector<BoundReport> sweep(std::span<const int> genera, std::span<const double> lengths,
                               Length r_prime, double area_slack) {
  std::vector<BoundReport> out;
  out.reserve(genera.size() * lengths.size());
  for (int g : genera) {
    for (double l : lengths) {
      out.push_back(make_report(BoundQuery(g, Length(l), r_prime, area_slack)));
    }
  }
  return out;
}

} // namespace serial

double strong_lower(int genus) {
  if (genus < 1) {
    throw DomainError("strong_lower: genus must be at least 1");
  }
  const double g = genus;
  const double s = std::sqrt(48.0 * g - 47.0);
  return g * s + 15.0 * g + s / 3.0 - 41.0 / 3.0;
}

std::optional<Rational> strong_lower_exact(int genus) {
  if (genus < 1) {
    throw DomainError("strong_lower_exact: genus must be at least 1");
  }
  const std::int64_t g = genus;
  const std::int64_t radicand = 48 * g - 47;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(radicand))));
  while (s * s > radicand) --s;
  while ((s + 1) * (s + 1) <= radicand) ++s;
  if (s * s != radicand) {
    return std::nullopt;
  }
  // 3 * value = 3 g s + 45 g + s - 41
  const std::int64_t num = 3 * g * s + 45 * g + s - 41;
  const std::int64_t d = std::gcd(num, std::int64_t{3});
  return Rational{num / d, 3 / d};
}

CorollaryBounds corollary_bounds(int genus, CorollaryParams params) {
  check_genus(genus);
  const double g = genus;
  const double lg = std::log(g);
  return CorollaryBounds{
      .genus = genus,
      .subquadratic = params.U * g * (g - 1.0) / lg,
      .conj_size = 4.0 / 3.0 * lg + params.A,
      .conj_number = params.B * std::pow(g, 4.0 / 3.0),
      .strong_lower = strong_lower(genus),
  };
}

} // namespace systolic::bounds
