#include "systolic/equalize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "systolic/error.hpp"

namespace systolic {

EqualizationTrace equalize_lengths(const std::vector<double> &initial,
                                   const IntersectionMatrix &matrix, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 6.0)) {
    throw DomainError("epsilon must lie in (0, 1/6)");
  }
  const auto n = static_cast<int>(initial.size());
  if (matrix.size() != n) {
    throw DomainError("matrix size " + std::to_string(matrix.size()) + " does not match " +
                      std::to_string(n) + " lengths");
  }
  const double lo = 3.0 - 6.0 * epsilon;
  for (double l : initial) {
    if (!(l >= lo && l <= 3.0)) {
      throw DomainError("initial length " + std::to_string(l) + " outside [3 - 6 eps, 3]");
    }
  }
  if (!intersection_graph_connected(matrix)) {
    throw PreconditionError("equalization cannot complete: intersection graph is disconnected");
  }

  EqualizationTrace trace{epsilon, initial, {}, initial};
  if (n == 0) return trace;
  std::vector<double> len = initial;
  const double target = *std::max_element(len.begin(), len.end());
  const double snap = 1e-12 * target;

  for (;;) {
    std::vector<int> max_set;
    std::vector<char> in_max(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (len[static_cast<std::size_t>(i)] == target) {
        max_set.push_back(i);
        in_max[static_cast<std::size_t>(i)] = 1;
      }
    }
    if (static_cast<int>(max_set.size()) == n) break;

    std::vector<int> movers;
    for (int j = 0; j < n; ++j) {
      if (in_max[static_cast<std::size_t>(j)]) continue;
      for (int i : max_set) {
        if (matrix.at(i, j) == 1) {
          movers.push_back(j);
          break;
        }
      }
    }
    if (movers.empty()) {
      // Unreachable for a connected intersection graph.
      throw PreconditionError("equalization cannot complete: no cycle crosses the maximal set");
    }
    double width = std::numeric_limits<double>::infinity();
    for (int j : movers) width = std::min(width, 0.5 * (target - len[static_cast<std::size_t>(j)]));
    for (int j : movers) {
      double &l = len[static_cast<std::size_t>(j)];
      l += 2.0 * width;
      if (std::abs(l - target) <= snap || l > target) l = target;
    }
    trace.steps.push_back(EqualizationStep{std::move(max_set), width, len});
  }
  trace.final_lengths = len;
  return trace;
}

} // namespace systolic
