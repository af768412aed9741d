#include "doctest.h"

#include <cmath>
#include <numbers>

#include "systolic/bounds.hpp"
#include "systolic/error.hpp"
#include "systolic/grid.hpp"
#include "systolic/hyptrig.hpp"

using namespace systolic;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("Length and Angle reject invalid values") {
  CHECK_THROWS_AS((void)Length(0.0), DomainError);
  CHECK_THROWS_AS((void)Length(-1.0), DomainError);
  CHECK_THROWS_AS((void)Length(std::nan("")), DomainError);
  CHECK_THROWS_AS((void)Length(INFINITY), DomainError);
  CHECK_THROWS_AS((void)Length(700.5), RangeError);
  CHECK(Length(700.0).value() == 700.0);
  CHECK_THROWS_AS((void)Angle(0.0), DomainError);
  CHECK_THROWS_AS((void)Angle(kPi), DomainError);
  CHECK(Angle(1.0).radians() == 1.0);
}

// Reference values below are 40-digit evaluations of the closed forms.
TEST_CASE("pants distance matches high-precision values") {
  using hyptrig::pants_adjacent_distance;
  CHECK(rel(pants_adjacent_distance(Length(2), Length(2), Length(2)).value(),
            1.7049128323580137) < 1e-14);
  CHECK(rel(pants_adjacent_distance(Length(1), Length(1), Length(4)).value(),
            3.612225999682252) < 1e-14);
  CHECK(rel(pants_adjacent_distance(Length(3), Length(2), Length(1)).value(),
            1.2579754911284713) < 1e-14);
  CHECK(rel(pants_adjacent_distance(Length(0.5), Length(0.5), Length(0.5)).value(),
            4.1843752852942677) < 1e-14);
}

TEST_CASE("pants distance is symmetric in its adjacent boundaries") {
  using hyptrig::pants_adjacent_distance;
  for (double a : {0.3, 1.0, 4.0, 11.0}) {
    for (double b : {0.7, 2.0, 9.0}) {
      const double ab = pants_adjacent_distance(Length(a), Length(b), Length(1.5)).value();
      const double ba = pants_adjacent_distance(Length(b), Length(a), Length(1.5)).value();
      CHECK(rel(ab, ba) < 1e-14);
    }
  }
}

TEST_CASE("symmetric pants distance is twice the systolic radius") {
  for (double l : grid::log_spaced(0.1, 30.0, 50)) {
    const double d = hyptrig::pants_adjacent_distance(Length(l), Length(l), Length(l)).value();
    CHECK(rel(d, 2.0 * std::asinh(1.0 / (2.0 * std::sinh(l / 4.0)))) <= 1e-12);
    CHECK(rel(std::cosh(d) * (std::cosh(l / 2.0) - 1.0), std::cosh(l / 2.0)) <= 1e-12);
  }
}

TEST_CASE("pants distance increases in the far boundary and decreases in the adjacent one") {
  using hyptrig::pants_adjacent_distance;
  const auto lengths = grid::log_spaced(0.1, 30.0, 40);
  for (double fixed : {0.5, 2.0, 7.0}) {
    for (std::size_t i = 1; i < lengths.size(); ++i) {
      const double lo = lengths[i - 1];
      const double hi = lengths[i];
      CHECK(pants_adjacent_distance(Length(fixed), Length(fixed), Length(hi)).value() >
            pants_adjacent_distance(Length(fixed), Length(fixed), Length(lo)).value());
      CHECK(pants_adjacent_distance(Length(hi), Length(fixed), Length(fixed)).value() <
            pants_adjacent_distance(Length(lo), Length(fixed), Length(fixed)).value());
    }
  }
}

TEST_CASE("double-angle identity") {
  for (double l : grid::log_spaced(0.1, 30.0, 50)) {
    CHECK(rel(std::sinh(l / 4.0) / std::sinh(l / 2.0), 1.0 / (2.0 * std::cosh(l / 4.0))) <=
          1e-14);
  }
}

TEST_CASE("right triangle solver") {
  using hyptrig::right_triangle_opposite;
  CHECK(rel(right_triangle_opposite(Angle(kPi / 6), Length(2)).value(), 1.356944490074306) <
        1e-14);
  CHECK(rel(right_triangle_opposite(Angle(kPi / 2), Length(3)).value(), 3.0) < 1e-14);
  CHECK_THROWS_AS((void)right_triangle_opposite(Angle(2.0), Length(1)), DomainError);
  for (double theta : {0.1, 0.5, 1.0, 1.5}) {
    for (double h : {0.01, 1.0, 5.0, 40.0}) {
      CHECK(right_triangle_opposite(Angle(theta), Length(h)).value() < h);
    }
  }
}

TEST_CASE("sine rule transfer") {
  using hyptrig::triangle_sine_transfer;
  CHECK(rel(triangle_sine_transfer(Angle(kPi / 6), Length(1), Angle(kPi / 2)).value(),
            0.5581634595116061) < 1e-14);
  // Same angle on both sides returns the side itself.
  CHECK(rel(triangle_sine_transfer(Angle(0.7), Length(2.5), Angle(0.7)).value(), 2.5) < 1e-14);
  CHECK_THROWS_AS((void)triangle_sine_transfer(Angle(1.5), Length(699), Angle(1e-300)), RangeError);
}

TEST_CASE("disk area and circumference") {
  CHECK(rel(hyptrig::disk_area(Length(1)), 3.412276265284902) < 1e-14);
  CHECK(rel(hyptrig::disk_circumference(Length(1)), 7.3840068728826453) < 1e-14);
  // Small disks are nearly Euclidean.
  CHECK(rel(hyptrig::disk_area(Length(1e-4)), kPi * 1e-8) < 1e-8);
}

TEST_CASE("sine rule on the threshold triangle at l = 4") {
  // sin(theta_l) sinh(R(l)) = 1 / sinh(l/4).
  const double l = 4.0;
  const double d = hyptrig::triangle_sine_transfer(
                       bounds::min_angle(l), bounds::intersection_radius(Length(l)),
                       Angle(kPi / 2))
                       .value();
  CHECK(rel(d, 0.7719368329053047) < 1e-14);
  CHECK(d < bounds::intersection_radius(Length(l)).value());
}
