#pragma once

// Crossing numbers of cycles drawn in the ribbon surface of a rotation
// system, the intersection matrix over a cycle family, and the checks
// built on it.
//
// Where two cycles meet at a vertex without sharing an edge, their strands
// cross there exactly when the two corners interleave in the cyclic order.
// Along a shared run of edges the strands are pushed apart to parallel
// copies inside the ribbon; the copies cross once inside the run exactly
// when the two cycles leave it on opposite sides at its two ends:
//
/*
 *        A         A                 A         B
 *         \       /                   \       /
 *   u ---- shared ---- w      vs.   u ---- shared ---- w
 *         /       \                   /       \
 *        B         B                 B         A
 *      (0 crossings)               (1 crossing)
 */
//
// At each run end we record which cycle leaves first counterclockwise from
// the shared half-edge; the cycles cross iff the same cycle does so at both
// ends (the counterclockwise sense flips across the edge).

#include <span>
#include <vector>

#include "systolic/cycles.hpp"

namespace systolic {

/// Crossings of the ribbon representatives of two simple cycles. Identical
/// cycles (up to rotation and reversal) give 0.
[[nodiscard]] int geometric_intersection_number(const GraphCycle &a, const GraphCycle &b,
                                                const RotationSystem &rs);

class IntersectionMatrix {
public:
  explicit IntersectionMatrix(int size);

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                    static_cast<std::size_t>(j)];
  }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, int value);

  [[nodiscard]] std::vector<char> mod2_row(int i) const;
  [[nodiscard]] int max_entry() const;
  /// Number of unordered pairs i < j with entry == value.
  [[nodiscard]] long count_pairs(int value) const;

private:
  int size_;
  std::vector<int> entries_;
};

/// OpenMP-parallel over cycle pairs.
[[nodiscard]] IntersectionMatrix intersection_matrix(std::span<const GraphCycle> cycles,
                                                     const RotationSystem &rs);

namespace serial {
[[nodiscard]] IntersectionMatrix intersection_matrix(std::span<const GraphCycle> cycles,
                                                     const RotationSystem &rs);
} // namespace serial

struct Mod2Result {
  IntersectionMatrix matrix;
  /// All mod-2 rows pairwise distinct.
  bool rows_distinct;
};

[[nodiscard]] Mod2Result mod2_matrix_and_distinctness(std::span<const GraphCycle> cycles,
                                                      const RotationSystem &rs);

/// True when all mod-2 rows of m are pairwise distinct.
[[nodiscard]] bool rows_pairwise_distinct(const IntersectionMatrix &m);
[[nodiscard]] int distinct_row_count(const IntersectionMatrix &m);

/// Connectivity of the graph whose edges are pairs with entry exactly 1.
/// Families of size 0 or 1 count as connected.
[[nodiscard]] bool intersection_graph_connected(const IntersectionMatrix &m);

} // namespace systolic
