#pragma once

// Short cycles of the unit-length metric graph carried by a rotation system.

#include <span>
#include <string>
#include <vector>

#include "systolic/rotation_system.hpp"

namespace systolic {

/// Pair of half-edges at a vertex through which a cycle passes.
struct Corner {
  HalfEdge in;   // half-edge of the arriving edge, at this vertex
  HalfEdge out;  // half-edge of the departing edge, at this vertex
};

/// Closed edge walk without immediate backtracking. Dart i leaves vertex i
/// and arrives at vertex i+1 (cyclically).
class GraphCycle {
public:
  /// Throws ValidationError unless the darts form a closed walk in `rs`
  /// without backtracking.
  GraphCycle(const RotationSystem &rs, std::vector<HalfEdge> darts);

  [[nodiscard]] int length() const noexcept { return static_cast<int>(darts_.size()); }
  [[nodiscard]] std::span<const HalfEdge> darts() const noexcept { return darts_; }
  [[nodiscard]] std::span<const Vertex> vertices() const noexcept { return vertices_; }
  /// Corner at vertices()[i].
  [[nodiscard]] Corner corner(const RotationSystem &rs, int i) const;
  /// Each vertex visited once.
  [[nodiscard]] bool is_simple() const;
  /// True when every dart and transition is consistent with `rs`.
  [[nodiscard]] bool belongs_to(const RotationSystem &rs) const;

  /// Least rotation/reflection, ordered by (vertex, edge) tokens then darts.
  [[nodiscard]] GraphCycle canonical(const RotationSystem &rs) const;
  /// "v0-v1-...-vk" label of the vertex sequence.
  [[nodiscard]] std::string label() const;

  friend bool operator==(const GraphCycle &, const GraphCycle &) = default;
  friend auto operator<=>(const GraphCycle &a, const GraphCycle &b) {
    if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
    return a.darts_ <=> b.darts_;
  }

private:
  GraphCycle() = default;
  std::vector<HalfEdge> darts_;
  std::vector<Vertex> vertices_;
};

/// All simple cycles of length <= length_bound, each once up to rotation and
/// reversal, canonicalized and sorted. OpenMP-parallel over start vertices.
[[nodiscard]] std::vector<GraphCycle> enumerate_short_cycles(const RotationSystem &rs,
                                                             int length_bound);

namespace serial {
[[nodiscard]] std::vector<GraphCycle> enumerate_short_cycles(const RotationSystem &rs,
                                                             int length_bound);
} // namespace serial

/// Sizes of the two arcs into which a corner splits the other half-edges
/// at its vertex.
struct CornerSplit {
  int ccw_arc;  // strictly between in and out, counterclockwise from in
  int cw_arc;
};
[[nodiscard]] CornerSplit split_at(const RotationSystem &rs, Corner c);

/// True when some corner of `c` splits the remaining half-edges of its
/// vertex into two non-empty arcs. Throws ValidationError if c is not a
/// cycle of rs.
[[nodiscard]] bool is_qualifying(const GraphCycle &c, const RotationSystem &rs);

/// Number of unordered pairs of half-edges at v that split the remaining
/// half-edges into two non-empty arcs, counted by enumeration.
[[nodiscard]] int qualifying_transition_count(const RotationSystem &rs, Vertex v);

} // namespace systolic
