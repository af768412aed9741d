#pragma once

// Discrete model of grafting: lengths of a cycle family are raised until
// they all match the initial maximum.
//
// Each step takes the set M of cycles at the current maximum L. Every
// cycle outside M that crosses some member of M exactly once gains 2 per
// unit of inserted width (it crosses the grafted neighborhood boundary at
// least twice). The step width is the smallest that lifts one such cycle to
// L; cycles reaching L join M together. Members of M never change.

#include <vector>

#include "systolic/intersection.hpp"

namespace systolic {

struct EqualizationStep {
  std::vector<int> max_set;  // M at the start of the step
  double width;              // omega_0
  std::vector<double> lengths;  // after the step
};

struct EqualizationTrace {
  double epsilon;
  std::vector<double> initial;
  std::vector<EqualizationStep> steps;
  std::vector<double> final_lengths;
};

/// Requires 0 < epsilon < 1/6, all lengths in [3 - 6 epsilon, 3] and a
/// connected intersection-1 graph. Throws DomainError for bad arguments and
/// PreconditionError("equalization cannot complete") when disconnected.
[[nodiscard]] EqualizationTrace equalize_lengths(const std::vector<double> &initial,
                                                 const IntersectionMatrix &matrix, double epsilon);

} // namespace systolic
