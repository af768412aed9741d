#include "systolic/cycles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>

#include "systolic/error.hpp"

namespace systolic {

GraphCycle::GraphCycle(const RotationSystem &rs, std::vector<HalfEdge> darts)
    : darts_(std::move(darts)) {
  if (darts_.empty()) {
    throw ValidationError("cycle must contain at least one edge");
  }
  const auto k = darts_.size();
  for (HalfEdge h : darts_) {
    if (h < 0 || h >= rs.half_edge_count()) {
      throw ValidationError("cycle uses unknown half-edge " + std::to_string(h));
    }
  }
  vertices_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const HalfEdge h = darts_[i];
    const HalfEdge next = darts_[(i + 1) % k];
    vertices_[i] = rs.vertex_of(h);
    if (rs.head(h) != rs.vertex_of(next)) {
      throw ValidationError("cycle is not a closed walk");
    }
    if (next == rs.pair(h)) {
      throw ValidationError("cycle backtracks along half-edge " + std::to_string(h));
    }
  }
}

Corner GraphCycle::corner(const RotationSystem &rs, int i) const {
  const auto k = darts_.size();
  const auto idx = static_cast<std::size_t>(i);
  return Corner{rs.pair(darts_[(idx + k - 1) % k]), darts_[idx]};
}

bool GraphCycle::is_simple() const {
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GraphCycle::belongs_to(const RotationSystem &rs) const {
  const auto k = darts_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const HalfEdge h = darts_[i];
    if (h < 0 || h >= rs.half_edge_count()) return false;
    if (rs.vertex_of(h) != vertices_[i]) return false;
    const HalfEdge next = darts_[(i + 1) % k];
    if (next < 0 || next >= rs.half_edge_count()) return false;
    if (rs.head(h) != rs.vertex_of(next) || next == rs.pair(h)) return false;
  }
  return true;
}

GraphCycle GraphCycle::canonical(const RotationSystem &rs) const {
  const auto k = darts_.size();
  using Token = std::pair<Vertex, int>;
  std::vector<Token> best_tokens;
  std::vector<HalfEdge> best_darts;
  auto consider = [&](const std::vector<HalfEdge> &d) {
    std::vector<Token> tokens(k);
    for (std::size_t i = 0; i < k; ++i) tokens[i] = {rs.vertex_of(d[i]), rs.edge_of(d[i])};
    if (best_darts.empty() || std::tie(tokens, d) < std::tie(best_tokens, best_darts)) {
      best_tokens = std::move(tokens);
      best_darts = d;
    }
  };
  std::vector<HalfEdge> reversed(k);
  for (std::size_t i = 0; i < k; ++i) reversed[i] = rs.pair(darts_[k - 1 - i]);
  std::vector<HalfEdge> rotated(k);
  const std::array<const std::vector<HalfEdge> *, 2> orientations{&darts_, &reversed};
  for (const auto *seq : orientations) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < k; ++i) rotated[i] = (*seq)[(s + i) % k];
      consider(rotated);
    }
  }
  GraphCycle out;
  out.darts_ = std::move(best_darts);
  out.vertices_.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.vertices_[i] = rs.vertex_of(out.darts_[i]);
  return out;
}

std::string GraphCycle::label() const {
  std::string s;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(vertices_[i]);
  }
  return s;
}

namespace {

// Depth-first extension of a path from `start` through vertices > start.
void extend(const RotationSystem &rs, Vertex start, int bound, std::vector<HalfEdge> &path,
            std::vector<char> &on_path, std::vector<GraphCycle> &out) {
  const Vertex u = path.empty() ? start : rs.head(path.back());
  for (HalfEdge h : rs.rotation(u)) {
    if (!path.empty() && h == rs.pair(path.back())) continue;  // backtrack
    const Vertex w = rs.head(h);
    if (w == start) {
      // Closing dart; a 2-cycle must not return along its first edge.
      if (!path.empty() && rs.pair(h) == path.front()) continue;
      path.push_back(h);
      out.push_back(GraphCycle(rs, path).canonical(rs));
      path.pop_back();
      continue;
    }
    if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
    if (static_cast<int>(path.size()) + 2 > bound) continue;  // need >= 1 more dart to close
    on_path[static_cast<std::size_t>(w)] = 1;
    path.push_back(h);
    extend(rs, start, bound, path, on_path, out);
    path.pop_back();
    on_path[static_cast<std::size_t>(w)] = 0;
  }
}

std::vector<GraphCycle> cycles_from(const RotationSystem &rs, Vertex start, int bound) {
  std::vector<GraphCycle> out;
  std::vector<HalfEdge> path;
  std::vector<char> on_path(static_cast<std::size_t>(rs.vertex_count()), 0);
  on_path[static_cast<std::size_t>(start)] = 1;
  extend(rs, start, bound, path, on_path, out);
  return out;
}

void sort_unique(std::vector<GraphCycle> &cycles) {
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
}

} // namespace

std::vector<GraphCycle> enumerate_short_cycles(const RotationSystem &rs, int length_bound) {
  if (length_bound < 1) return {};
  const int nv = rs.vertex_count();
  std::vector<std::vector<GraphCycle>> per_start(static_cast<std::size_t>(nv));
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < nv; ++s) {
    per_start[static_cast<std::size_t>(s)] = cycles_from(rs, s, length_bound);
  }
  std::vector<GraphCycle> all;
  for (auto &part : per_start) {
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  sort_unique(all);
  return all;
}

namespace serial {

std::vector<GraphCycle> enumerate_short_cycles(const RotationSystem &rs, int length_bound) {
  if (length_bound < 1) return {};
  std::vector<GraphCycle> all;
  for (Vertex s = 0; s < rs.vertex_count(); ++s) {
    auto part = cycles_from(rs, s, length_bound);
    all.insert(all.end(), part.begin(), part.end());
  }
  sort_unique(all);
  return all;
}

} // namespace serial

CornerSplit split_at(const RotationSystem &rs, Corner c) {
  const int d = rs.degree(rs.vertex_of(c.in));
  const int ccw = ((rs.position(c.out) - rs.position(c.in)) % d + d) % d - 1;
  return CornerSplit{ccw, d - 2 - ccw};
}

bool is_qualifying(const GraphCycle &c, const RotationSystem &rs) {
  if (!c.belongs_to(rs)) {
    throw ValidationError("cycle " + c.label() + " is not a cycle of this rotation system");
  }
  for (int i = 0; i < c.length(); ++i) {
    const CornerSplit s = split_at(rs, c.corner(rs, i));
    if (s.ccw_arc > 0 && s.cw_arc > 0) return true;
  }
  return false;
}

int qualifying_transition_count(const RotationSystem &rs, Vertex v) {
  const auto rot = rs.rotation(v);
  int count = 0;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    for (std::size_t j = i + 1; j < rot.size(); ++j) {
      const CornerSplit s = split_at(rs, Corner{rot[i], rot[j]});
      count += (s.ccw_arc > 0 && s.cw_arc > 0) ? 1 : 0;
    }
  }
  return count;
}

} // namespace systolic
