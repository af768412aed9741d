#include "systolic/hyptrig.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "systolic/error.hpp"

namespace systolic {

Length::Length(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("length must be positive and finite, got " + std::to_string(value));
  }
  if (value > kMaxLength) {
    throw RangeError("length " + std::to_string(value) + " exceeds " +
                     std::to_string(kMaxLength) + " (sinh overflow)");
  }
}

Angle::Angle(double radians) : radians_(radians) {
  if (!std::isfinite(radians) || radians <= 0.0 || radians >= std::numbers::pi) {
    throw DomainError("angle must lie in (0, pi), got " + std::to_string(radians));
  }
}

namespace hyptrig {
namespace {

// asinh of a value that must be finite; guards the sine-rule quotients.
Length checked_asinh(double x, const char *what) {
  if (!std::isfinite(x)) {
    throw RangeError(std::string(what) + ": sinh of result overflows");
  }
  return Length(std::asinh(x));
}

} // namespace

Length pants_adjacent_distance(Length a, Length b, Length c) {
  const double ha = 0.5 * a.value();
  const double hb = 0.5 * b.value();
  const double hc = 0.5 * c.value();
  // cosh d - 1 = (cosh(c/2) + cosh((a-b)/2)) / (sinh(a/2) sinh(b/2)), free of
  // the cancellation that makes acosh(cosh d) inaccurate for short distances.
  const double x = (std::cosh(hc) + std::cosh(ha - hb)) / (std::sinh(ha) * std::sinh(hb));
  if (!std::isfinite(x)) {
    throw RangeError("pants_adjacent_distance: cosh of result overflows");
  }
  if (x > 1e150) {
    return Length(std::log(2.0 * x));
  }
  return Length(std::log1p(x + std::sqrt(x * (x + 2.0))));
}

Length right_triangle_opposite(Angle theta, Length hyp) {
  if (theta.radians() > 0.5 * std::numbers::pi) {
    throw DomainError("right_triangle_opposite: angle must be at most pi/2");
  }
  return checked_asinh(std::sin(theta.radians()) * std::sinh(hyp.value()),
                       "right_triangle_opposite");
}

Length triangle_sine_transfer(Angle theta_at, Length side_opposite, Angle theta_target) {
  const double s = std::sin(theta_at.radians()) * std::sinh(side_opposite.value()) /
                   std::sin(theta_target.radians());
  return checked_asinh(s, "triangle_sine_transfer");
}

double disk_area(Length rho) {
  // cosh(x) - 1 = 2 sinh^2(x/2) avoids cancellation for small radii.
  const double s = std::sinh(0.5 * rho.value());
  return 4.0 * std::numbers::pi * s * s;
}

double disk_circumference(Length rho) {
  return 2.0 * std::numbers::pi * std::sinh(rho.value());
}

} // namespace hyptrig
} // namespace systolic
