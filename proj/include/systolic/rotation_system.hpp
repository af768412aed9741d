#pragma once

// Rotation systems (combinatorial maps) of graphs embedded in closed
// orientable surfaces. Half-edges are 0..2E-1; each vertex carries the
// counterclockwise cyclic order of its half-edges and an involution pairs
// the two halves of every edge. Loops and multiple edges are allowed.

#include <span>
#include <vector>

namespace systolic {

using HalfEdge = int;
using Vertex = int;

class RotationSystem {
public:
  /// Validates and takes ownership. `rotations[v]` lists the half-edges at
  /// v in cyclic order; `pairing[h]` is the other half of h's edge.
  /// Throws ValidationError unless pairing is a fixed-point-free involution
  /// on 0..N-1 and every half-edge occurs in exactly one rotation, once.
  RotationSystem(std::vector<std::vector<HalfEdge>> rotations, std::vector<HalfEdge> pairing);

  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  [[nodiscard]] int half_edge_count() const noexcept { return static_cast<int>(pair_.size()); }
  [[nodiscard]] int edge_count() const noexcept { return half_edge_count() / 2; }

  [[nodiscard]] std::span<const HalfEdge> rotation(Vertex v) const { return rotations_.at(v); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(rotations_.at(v).size()); }

  [[nodiscard]] HalfEdge pair(HalfEdge h) const { return pair_.at(h); }
  [[nodiscard]] Vertex vertex_of(HalfEdge h) const { return vertex_.at(h); }
  /// Index of h within its vertex's rotation.
  [[nodiscard]] int position(HalfEdge h) const { return position_.at(h); }
  /// Next half-edge counterclockwise around the same vertex.
  [[nodiscard]] HalfEdge succ(HalfEdge h) const;
  [[nodiscard]] HalfEdge pred(HalfEdge h) const;
  /// Face-tracing operator: cross the edge, then turn to the rotation successor.
  [[nodiscard]] HalfEdge face_next(HalfEdge h) const { return succ(pair(h)); }
  /// Vertex at the far end of h's edge.
  [[nodiscard]] Vertex head(HalfEdge h) const { return vertex_of(pair(h)); }
  /// Representative id of h's edge (the smaller half-edge).
  [[nodiscard]] int edge_of(HalfEdge h) const { return h < pair(h) ? h : pair(h); }

  [[nodiscard]] bool is_connected() const;

  [[nodiscard]] const std::vector<std::vector<HalfEdge>> &rotations() const noexcept {
    return rotations_;
  }
  [[nodiscard]] const std::vector<HalfEdge> &pairing() const noexcept { return pair_; }

  friend bool operator==(const RotationSystem &a, const RotationSystem &b) {
    return a.rotations_ == b.rotations_ && a.pair_ == b.pair_;
  }

private:
  std::vector<std::vector<HalfEdge>> rotations_;
  std::vector<HalfEdge> pair_;
  std::vector<Vertex> vertex_;
  std::vector<int> position_;
};

struct SurfaceSummary {
  int V = 0;
  int E = 0;
  int F = 0;
  int euler_char = 0;
  /// Genus of the closed surface obtained by capping every face with a disk.
  int genus = 0;
  /// Genus and boundary count of the ribbon (graph neighborhood) surface;
  /// V - E = 2 - 2 g - b.
  int bordered_genus = 0;
  int boundary_components = 0;
};

/// Orbits of face_next. Each face lists its half-edges in tracing order.
[[nodiscard]] std::vector<std::vector<HalfEdge>> trace_faces(const RotationSystem &rs);

/// Euler-characteristic bookkeeping. Throws ValidationError for disconnected graphs.
[[nodiscard]] SurfaceSummary summarize(const RotationSystem &rs);

/// Minimal orientable genus of K_n: ceil((n-3)(n-4)/12). Requires n >= 3.
[[nodiscard]] int ringel_youngs_genus(int n);

/// Single vertex with half-edges 0..4m-1 in cyclic order and opposite
/// pairing h <-> h + 2m. Requires m >= 1.
[[nodiscard]] RotationSystem npod_surface(int m);

/// Embedding of a simple graph from neighbor cyclic orders. Edge e joins
/// (u, v), u < v, in lexicographic order; half-edge 2e sits at u and 2e+1 at v.
/// Throws ValidationError when adjacency is not symmetric or has repeats.
[[nodiscard]] RotationSystem from_neighbor_orders(const std::vector<std::vector<Vertex>> &orders);

/// Neighbor cyclic orders of a loopless simple-graph rotation system.
[[nodiscard]] std::vector<std::vector<Vertex>> neighbor_orders(const RotationSystem &rs);

/// True when the underlying graph is K_n: no loops, no multi-edges, all pairs adjacent.
[[nodiscard]] bool is_complete_graph(const RotationSystem &rs);

} // namespace systolic
