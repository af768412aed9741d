#include "systolic/intersection.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "systolic/error.hpp"

namespace systolic {
namespace {

// Corner of a simple cycle at each vertex it visits.
std::unordered_map<Vertex, Corner> corners_by_vertex(const GraphCycle &c,
                                                     const RotationSystem &rs) {
  std::unordered_map<Vertex, Corner> out;
  for (int i = 0; i < c.length(); ++i) {
    out.emplace(c.vertices()[static_cast<std::size_t>(i)], c.corner(rs, i));
  }
  return out;
}

// Counterclockwise distance from `from` to `to` around their common vertex.
int ccw_steps(const RotationSystem &rs, HalfEdge from, HalfEdge to) {
  const int d = rs.degree(rs.vertex_of(from));
  return ((rs.position(to) - rs.position(from)) % d + d) % d;
}

bool interleaved(const RotationSystem &rs, Corner a, Corner b) {
  const int span = ccw_steps(rs, a.in, a.out);
  const int s1 = ccw_steps(rs, a.in, b.in);
  const int s2 = ccw_steps(rs, a.in, b.out);
  const bool in1 = s1 > 0 && s1 < span;
  const bool in2 = s2 > 0 && s2 < span;
  return in1 != in2;
}

int shared_count(Corner a, Corner b) {
  int n = 0;
  for (HalfEdge x : {a.in, a.out}) {
    if (x == b.in || x == b.out) ++n;
  }
  return n;
}

HalfEdge other(Corner c, HalfEdge h) { return c.in == h ? c.out : c.in; }

// At a run end with shared half-edge s: does cycle A leave first
// counterclockwise from s?
bool a_leaves_first(const RotationSystem &rs, HalfEdge s, Corner a, Corner b) {
  return ccw_steps(rs, s, other(a, s)) < ccw_steps(rs, s, other(b, s));
}

} // namespace

int geometric_intersection_number(const GraphCycle &a, const GraphCycle &b,
                                  const RotationSystem &rs) {
  if (!a.is_simple() || !b.is_simple()) {
    throw UnsupportedError("intersection numbers are computed for simple cycles only");
  }
  if (a.canonical(rs) == b.canonical(rs)) return 0;

  const auto ca = corners_by_vertex(a, rs);
  const auto cb = corners_by_vertex(b, rs);
  int transverse = 0;
  int run_end_crossings = 0;
  for (const auto &[v, corner_a] : ca) {
    const auto it = cb.find(v);
    if (it == cb.end()) continue;
    const Corner corner_b = it->second;
    const int shared = shared_count(corner_a, corner_b);
    if (shared == 0) {
      transverse += interleaved(rs, corner_a, corner_b) ? 1 : 0;
      continue;
    }
    if (shared == 2) continue;  // interior of a shared run

    // Run end: follow the shared half-edge to the opposite end of the run.
    const HalfEdge s = (corner_a.in == corner_b.in || corner_a.in == corner_b.out)
                           ? corner_a.in
                           : corner_a.out;
    const bool first_here = a_leaves_first(rs, s, corner_a, corner_b);
    HalfEdge h = s;
    for (;;) {
      const HalfEdge arrive = rs.pair(h);
      const Vertex w = rs.vertex_of(arrive);
      const Corner wa = ca.at(w);
      const Corner wb = cb.at(w);
      if (shared_count(wa, wb) == 2) {
        h = other(wa, arrive);
        continue;
      }
      const bool first_there = a_leaves_first(rs, arrive, wa, wb);
      run_end_crossings += (first_here == first_there) ? 1 : 0;
      break;
    }
  }
  // Every run was seen from both of its ends.
  return transverse + run_end_crossings / 2;
}

IntersectionMatrix::IntersectionMatrix(int size)
    : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
  if (size < 0) throw DomainError("matrix size must be non-negative");
}

void IntersectionMatrix::set(int i, int j, int value) {
  const auto n = static_cast<std::size_t>(size_);
  entries_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = value;
  entries_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = value;
}

std::vector<char> IntersectionMatrix::mod2_row(int i) const {
  std::vector<char> row(static_cast<std::size_t>(size_));
  for (int j = 0; j < size_; ++j) row[static_cast<std::size_t>(j)] = static_cast<char>(at(i, j) & 1);
  return row;
}

int IntersectionMatrix::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

long IntersectionMatrix::count_pairs(int value) const {
  long n = 0;
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) n += at(i, j) == value ? 1 : 0;
  }
  return n;
}

namespace {

void check_family(std::span<const GraphCycle> cycles, const RotationSystem &rs) {
  for (const auto &c : cycles) {
    if (!c.belongs_to(rs)) {
      throw ValidationError("cycle " + c.label() + " is not a cycle of this rotation system");
    }
    if (!c.is_simple()) {
      throw UnsupportedError("cycle " + c.label() + " is not simple");
    }
  }
}

} // namespace

IntersectionMatrix intersection_matrix(std::span<const GraphCycle> cycles,
                                       const RotationSystem &rs) {
  check_family(cycles, rs);
  const auto n = static_cast<std::int64_t>(cycles.size());
  IntersectionMatrix m(static_cast<int>(n));
  // Row i owns the entries (i, j > i), so writes never collide.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      m.set(static_cast<int>(i), static_cast<int>(j),
            geometric_intersection_number(cycles[static_cast<std::size_t>(i)],
                                          cycles[static_cast<std::size_t>(j)], rs));
    }
  }
  return m;
}

namespace serial {

IntersectionMatrix intersection_matrix(std::span<const GraphCycle> cycles,
                                       const RotationSystem &rs) {
  check_family(cycles, rs);
  const auto n = static_cast<int>(cycles.size());
  IntersectionMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m.set(i, j,
            geometric_intersection_number(cycles[static_cast<std::size_t>(i)],
                                          cycles[static_cast<std::size_t>(j)], rs));
    }
  }
  return m;
}

} // namespace serial

int distinct_row_count(const IntersectionMatrix &m) {
  std::vector<std::vector<char>> rows;
  rows.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) rows.push_back(m.mod2_row(i));
  std::sort(rows.begin(), rows.end());
  return static_cast<int>(std::unique(rows.begin(), rows.end()) - rows.begin());
}

bool rows_pairwise_distinct(const IntersectionMatrix &m) {
  return distinct_row_count(m) == m.size();
}

Mod2Result mod2_matrix_and_distinctness(std::span<const GraphCycle> cycles,
                                        const RotationSystem &rs) {
  IntersectionMatrix m = intersection_matrix(cycles, rs);
  const bool distinct = rows_pairwise_distinct(m);
  return Mod2Result{std::move(m), distinct};
}

bool intersection_graph_connected(const IntersectionMatrix &m) {
  const int n = m.size();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!seen[static_cast<std::size_t>(j)] && m.at(i, j) == 1) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

} // namespace systolic
