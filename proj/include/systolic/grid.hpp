#pragma once

#include <string_view>
#include <vector>

namespace systolic::grid {

/// n points, geometrically spaced, endpoints included.
[[nodiscard]] std::vector<double> log_spaced(double lo, double hi, int n);
/// n points, evenly spaced, endpoints included.
[[nodiscard]] std::vector<double> lin_spaced(double lo, double hi, int n);
/// lo, lo + step, ... up to hi (inclusive within 1e-9 step).
[[nodiscard]] std::vector<double> stepped(double lo, double hi, double step);

/// Parses "x", "a..b" (step 1), "a..b:step", "a..b:logN", "a..b:linN",
/// or comma-separated lists of these. Throws std::invalid_argument.
[[nodiscard]] std::vector<double> parse_real_grid(std::string_view text);

/// Parses "g", "a..b", "a..b:step" or comma lists over integers.
[[nodiscard]] std::vector<int> parse_int_grid(std::string_view text);

} // namespace systolic::grid
