#pragma once

// Mod-2 homology of cycles in the closed surface of a rotation system:
// edge-indicator vectors modulo the span of the face boundaries.

#include <cstdint>
#include <span>
#include <vector>

#include "systolic/cycles.hpp"

namespace systolic {

class Z2Homology {
public:
  explicit Z2Homology(const RotationSystem &rs);

  /// Reduced representative of the cycle's class; equal vectors iff
  /// homologous mod 2. All-zero iff null-homologous.
  [[nodiscard]] std::vector<std::uint64_t> reduce(const GraphCycle &c) const;
  [[nodiscard]] bool is_trivial(const GraphCycle &c) const;
  [[nodiscard]] bool homologous(const GraphCycle &a, const GraphCycle &b) const;
  /// Number of distinct classes among the given cycles.
  [[nodiscard]] int distinct_classes(std::span<const GraphCycle> cycles) const;

private:
  [[nodiscard]] std::vector<std::uint64_t> indicator(const GraphCycle &c) const;
  void reduce_in_place(std::vector<std::uint64_t> &v) const;

  const RotationSystem *rs_;
  std::vector<int> edge_index_;  // half-edge -> edge number
  std::size_t words_ = 0;
  // Echelon basis of the face-boundary span; pivots_[k] is the pivot bit of basis_[k].
  std::vector<std::vector<std::uint64_t>> basis_;
  std::vector<int> pivots_;
};

} // namespace systolic
