#pragma once

// Hyperbolic trigonometry for the curvature -1 plane: right and general
// triangles, pairs of pants, and metric disks.

namespace systolic {

/// Largest length accepted anywhere in the library; sinh overflows
/// double precision shortly after.
inline constexpr double kMaxLength = 700.0;

/// Positive, finite hyperbolic length.
class Length {
public:
  /// Throws DomainError unless value > 0 and finite, RangeError if value > kMaxLength.
  explicit Length(double value);

  [[nodiscard]] double value() const noexcept { return value_; }

  friend bool operator==(Length, Length) = default;
  friend auto operator<=>(Length, Length) = default;

private:
  double value_;
};

/// Angle in radians, strictly between 0 and pi.
class Angle {
public:
  explicit Angle(double radians);

  [[nodiscard]] double radians() const noexcept { return radians_; }

  friend bool operator==(Angle, Angle) = default;
  friend auto operator<=>(Angle, Angle) = default;

private:
  double radians_;
};

namespace hyptrig {

/// Distance between the boundary geodesics of lengths `a` and `b` in the
/// pair of pants whose third boundary has length `c`:
///   cosh d = (cosh(c/2) + cosh(a/2) cosh(b/2)) / (sinh(a/2) sinh(b/2)).
[[nodiscard]] Length pants_adjacent_distance(Length a, Length b, Length c);

/// Side opposite `theta` in a right triangle with hypotenuse `hyp`:
/// sinh s = sin(theta) sinh(hyp). Requires theta <= pi/2.
[[nodiscard]] Length right_triangle_opposite(Angle theta, Length hyp);

/// Sine rule transfer: returns s with
///   sinh s = sin(theta_at) sinh(side_opposite) / sin(theta_target).
[[nodiscard]] Length triangle_sine_transfer(Angle theta_at, Length side_opposite,
                                            Angle theta_target);

/// Area 2 pi (cosh rho - 1) of a metric disk.
[[nodiscard]] double disk_area(Length rho);

/// Circumference 2 pi sinh rho of a metric disk.
[[nodiscard]] double disk_circumference(Length rho);

} // namespace hyptrig
} // namespace systolic
