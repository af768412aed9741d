#include "systolic/rotation_system.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "systolic/error.hpp"

namespace systolic {

RotationSystem::RotationSystem(std::vector<std::vector<HalfEdge>> rotations,
                               std::vector<HalfEdge> pairing)
    : rotations_(std::move(rotations)), pair_(std::move(pairing)) {
  const auto n = static_cast<int>(pair_.size());
  if (n % 2 != 0) {
    throw ValidationError("odd number of half-edges");
  }
  for (int h = 0; h < n; ++h) {
    const int p = pair_[static_cast<std::size_t>(h)];
    if (p < 0 || p >= n) {
      throw ValidationError("pairing of half-edge " + std::to_string(h) + " out of range");
    }
    if (p == h) {
      throw ValidationError("half-edge " + std::to_string(h) + " paired with itself");
    }
    if (pair_[static_cast<std::size_t>(p)] != h) {
      throw ValidationError("pairing is not an involution at half-edge " + std::to_string(h));
    }
  }
  vertex_.assign(static_cast<std::size_t>(n), -1);
  position_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    const auto &rot = rotations_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const HalfEdge h = rot[i];
      if (h < 0 || h >= n) {
        throw ValidationError("rotation of vertex " + std::to_string(v) +
                              " lists unknown half-edge " + std::to_string(h));
      }
      if (vertex_[static_cast<std::size_t>(h)] != -1) {
        throw ValidationError("half-edge " + std::to_string(h) + " appears twice in rotations");
      }
      vertex_[static_cast<std::size_t>(h)] = static_cast<Vertex>(v);
      position_[static_cast<std::size_t>(h)] = static_cast<int>(i);
    }
  }
  for (int h = 0; h < n; ++h) {
    if (vertex_[static_cast<std::size_t>(h)] == -1) {
      throw ValidationError("half-edge " + std::to_string(h) + " missing from rotations");
    }
  }
}

HalfEdge RotationSystem::succ(HalfEdge h) const {
  const auto &rot = rotations_[static_cast<std::size_t>(vertex_.at(h))];
  const auto i = static_cast<std::size_t>(position_[static_cast<std::size_t>(h)]);
  return rot[(i + 1) % rot.size()];
}

HalfEdge RotationSystem::pred(HalfEdge h) const {
  const auto &rot = rotations_[static_cast<std::size_t>(vertex_.at(h))];
  const auto i = static_cast<std::size_t>(position_[static_cast<std::size_t>(h)]);
  return rot[(i + rot.size() - 1) % rot.size()];
}

bool RotationSystem::is_connected() const {
  const int nv = vertex_count();
  if (nv == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (HalfEdge h : rotation(v)) {
      const Vertex w = head(h);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nv;
}

std::vector<std::vector<HalfEdge>> trace_faces(const RotationSystem &rs) {
  const int n = rs.half_edge_count();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<HalfEdge>> faces;
  for (HalfEdge start = 0; start < n; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<HalfEdge> face;
    HalfEdge h = start;
    do {
      used[static_cast<std::size_t>(h)] = 1;
      face.push_back(h);
      h = rs.face_next(h);
    } while (h != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

SurfaceSummary summarize(const RotationSystem &rs) {
  if (rs.vertex_count() == 0) {
    throw ValidationError("empty rotation system");
  }
  if (!rs.is_connected()) {
    throw ValidationError("graph is disconnected");
  }
  SurfaceSummary s;
  s.V = rs.vertex_count();
  s.E = rs.edge_count();
  // A lone vertex bounds one (degenerate) face.
  s.F = s.E == 0 ? 1 : static_cast<int>(trace_faces(rs).size());
  s.euler_char = s.V - s.E + s.F;
  const int twice_genus = 2 - s.euler_char;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw ValidationError("Euler characteristic " + std::to_string(s.euler_char) +
                          " is not that of a closed orientable surface");
  }
  s.genus = twice_genus / 2;
  s.boundary_components = s.F;
  s.bordered_genus = (2 - s.boundary_components - s.V + s.E) / 2;
  return s;
}

int ringel_youngs_genus(int n) {
  if (n < 3) {
    throw DomainError("ringel_youngs_genus: n must be at least 3");
  }
  const long num = static_cast<long>(n - 3) * (n - 4);
  return static_cast<int>((num + 11) / 12);
}

RotationSystem npod_surface(int m) {
  if (m < 1) {
    throw DomainError("npod_surface: m must be at least 1");
  }
  const int n = 4 * m;
  std::vector<HalfEdge> rot(static_cast<std::size_t>(n));
  std::vector<HalfEdge> pairing(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    rot[static_cast<std::size_t>(h)] = h;
    pairing[static_cast<std::size_t>(h)] = (h + 2 * m) % n;
  }
  return RotationSystem({std::move(rot)}, std::move(pairing));
}

RotationSystem from_neighbor_orders(const std::vector<std::vector<Vertex>> &orders) {
  const auto nv = static_cast<int>(orders.size());
  std::map<std::pair<Vertex, Vertex>, int> edge_index;
  for (Vertex u = 0; u < nv; ++u) {
    std::vector<Vertex> sorted = orders[static_cast<std::size_t>(u)];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("repeated neighbor at vertex " + std::to_string(u));
    }
    for (Vertex w : sorted) {
      if (w < 0 || w >= nv || w == u) {
        throw ValidationError("bad neighbor " + std::to_string(w) + " at vertex " +
                              std::to_string(u));
      }
      const auto &back = orders[static_cast<std::size_t>(w)];
      if (std::find(back.begin(), back.end(), u) == back.end()) {
        throw ValidationError("adjacency not symmetric between " + std::to_string(u) + " and " +
                              std::to_string(w));
      }
      if (u < w) edge_index.emplace(std::pair{u, w}, 0);
    }
  }
  int e = 0;
  for (auto &[key, idx] : edge_index) idx = e++;

  std::vector<std::vector<HalfEdge>> rotations(static_cast<std::size_t>(nv));
  std::vector<HalfEdge> pairing(static_cast<std::size_t>(2 * e));
  for (Vertex u = 0; u < nv; ++u) {
    for (Vertex w : orders[static_cast<std::size_t>(u)]) {
      const int idx = edge_index.at({std::min(u, w), std::max(u, w)});
      const HalfEdge h = u < w ? 2 * idx : 2 * idx + 1;
      rotations[static_cast<std::size_t>(u)].push_back(h);
      pairing[static_cast<std::size_t>(h)] = h ^ 1;
    }
  }
  return RotationSystem(std::move(rotations), std::move(pairing));
}

std::vector<std::vector<Vertex>> neighbor_orders(const RotationSystem &rs) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(rs.vertex_count()));
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    for (HalfEdge h : rs.rotation(v)) out[static_cast<std::size_t>(v)].push_back(rs.head(h));
  }
  return out;
}

bool is_complete_graph(const RotationSystem &rs) {
  const int n = rs.vertex_count();
  if (rs.edge_count() != n * (n - 1) / 2) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (rs.degree(v) != n - 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (HalfEdge h : rs.rotation(v)) {
      const Vertex w = rs.head(h);
      if (w == v || seen[static_cast<std::size_t>(w)]) return false;
      seen[static_cast<std::size_t>(w)] = 1;
    }
  }
  return true;
}

} // namespace systolic
