#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "systolic/construction.hpp"
#include "systolic/cycles.hpp"
#include "systolic/embedding.hpp"
#include "systolic/equalize.hpp"
#include "systolic/error.hpp"
#include "systolic/homology.hpp"
#include "systolic/intersection.hpp"
#include "systolic/rotation_system.hpp"

using namespace systolic;

namespace {

RotationSystem catalog(int n) { return *embedding::catalog_embedding(n); }

// Simple cycles of length exactly k, counted over ordered vertex tuples.
long brute_force_cycle_count(const std::vector<std::vector<Vertex>> &adj, int k) {
  const int n = static_cast<int>(adj.size());
  const auto adjacent = [&](int u, int v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  };
  long ordered = 0;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(path.size()) == k) {
      if (adjacent(path.back(), path.front())) ++ordered;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!used[v] && adjacent(path.back(), v)) {
        used[v] = 1;
        path.push_back(v);
        extend();
        path.pop_back();
        used[v] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    extend();
    used[s] = 0;
  }
  return ordered / (2 * k);
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// A triangle u-v-w fails to qualify iff at each corner the two neighbors are
// cyclically adjacent in the neighbor order.
bool corner_adjacent(const std::vector<Vertex> &order, Vertex a, Vertex b) {
  const int d = static_cast<int>(order.size());
  const auto pa = std::find(order.begin(), order.end(), a) - order.begin();
  const auto pb = std::find(order.begin(), order.end(), b) - order.begin();
  const auto diff = (pa - pb + d) % d;
  return diff == 1 || diff == d - 1;
}

bool triangle_qualifies_by_positions(const std::vector<std::vector<Vertex>> &orders,
                                     std::span<const Vertex> t) {
  for (int i = 0; i < 3; ++i) {
    const Vertex v = t[i];
    if (!corner_adjacent(orders[v], t[(i + 1) % 3], t[(i + 2) % 3])) return true;
  }
  return false;
}

RotationSystem random_simple_graph(int n, double p, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<Vertex>> orders(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v == u + 1 || coin(rng) < p) {
        orders[u].push_back(v);
        orders[v].push_back(u);
      }
    }
  }
  for (auto &o : orders) std::shuffle(o.begin(), o.end(), rng);
  return from_neighbor_orders(orders);
}

// Two bowties joined by an edge 0-5. Within a bowtie the two triangles
// cross once at the center; across bowties nothing crosses.
RotationSystem double_bowtie() {
  return from_neighbor_orders({{1, 3, 2, 4, 5},
                               {2, 0},
                               {0, 1},
                               {4, 0},
                               {0, 3},
                               {6, 8, 7, 9, 0},
                               {7, 5},
                               {5, 6},
                               {9, 5},
                               {5, 8}});
}

} // namespace

TEST_CASE("cycle enumeration matches a brute-force count") {
  for (int n = 3; n <= 9; ++n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    const RotationSystem rs = embedding::random_complete_rotation(n, rng);
    const auto tri = enumerate_short_cycles(rs, 3);
    CHECK(tri.size() == static_cast<std::size_t>(binomial(n, 3)));
    for (const auto &c : tri) CHECK(c.length() == 3);
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const RotationSystem rs = random_simple_graph(7, 0.45, rng);
    const auto adj = neighbor_orders(rs);
    const auto cycles = enumerate_short_cycles(rs, 5);
    for (int k = 3; k <= 5; ++k) {
      const auto got = std::count_if(cycles.begin(), cycles.end(),
                                     [k](const GraphCycle &c) { return c.length() == k; });
      CHECK(got == brute_force_cycle_count(adj, k));
    }
    CHECK(cycles == serial::enumerate_short_cycles(rs, 5));
  }
}

TEST_CASE("enumeration edge cases") {
  CHECK(enumerate_short_cycles(catalog(7), 3).size() == 35);
  CHECK(enumerate_short_cycles(catalog(4), 3).size() == 4);
  CHECK(enumerate_short_cycles(catalog(7), 2).empty());
  CHECK(enumerate_short_cycles(npod_surface(1), 1).size() == 2);
  CHECK(enumerate_short_cycles(npod_surface(3), 1).size() == 6);
  // Canonical and unique.
  const RotationSystem rs = catalog(6);
  const auto cycles = enumerate_short_cycles(rs, 4);
  for (const auto &c : cycles) CHECK(c.canonical(rs) == c);
  CHECK(std::adjacent_find(cycles.begin(), cycles.end()) == cycles.end());
}

TEST_CASE("GraphCycle validation") {
  const RotationSystem rs = catalog(4);
  // Edge 0 joins 0-1 (half-edges 0, 1), edge 1 joins 0-2, edge 3 joins 1-2.
  CHECK_NOTHROW((void)GraphCycle(rs, {0, 6, 3}));
  CHECK_THROWS_AS((void)GraphCycle(rs, {0, 1}), ValidationError);
  CHECK_THROWS_AS((void)GraphCycle(rs, {0, 6}), ValidationError);
  CHECK_THROWS_AS((void)GraphCycle(rs, {}), ValidationError);
  const GraphCycle c(rs, {0, 6, 3});
  CHECK(c.label() == "0-1-2");
  CHECK(c.is_simple());
  CHECK(c.canonical(rs) == GraphCycle(rs, {2, 7, 1}).canonical(rs));
}

TEST_CASE("qualifying triangles agree with a position-based check") {
  for (int n = 4; n <= 8; ++n) {
    const RotationSystem rs = catalog(n);
    const auto orders = neighbor_orders(rs);
    for (const auto &c : enumerate_short_cycles(rs, 3)) {
      CHECK(is_qualifying(c, rs) == triangle_qualifies_by_positions(orders, c.vertices()));
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const RotationSystem rs = embedding::random_complete_rotation(7, rng);
    const auto orders = neighbor_orders(rs);
    for (const auto &c : enumerate_short_cycles(rs, 3)) {
      CHECK(is_qualifying(c, rs) == triangle_qualifies_by_positions(orders, c.vertices()));
    }
  }
}

TEST_CASE("facial triangles never qualify") {
  const RotationSystem rs = catalog(7);
  const auto faces = trace_faces(rs);
  for (const auto &f : faces) {
    std::vector<HalfEdge> darts(f.begin(), f.end());
    CHECK_FALSE(is_qualifying(GraphCycle(rs, darts), rs));
  }
  // A torus triangulation of K7: every other triangle qualifies.
  CHECK(count_qualifying(rs).qualifying_count() == 35 - static_cast<int>(faces.size()));
}

TEST_CASE("is_qualifying rejects foreign cycles") {
  const RotationSystem k4 = catalog(4);
  const GraphCycle c(k4, {0, 6, 3});
  CHECK_THROWS_AS((void)is_qualifying(c, npod_surface(1)), ValidationError);
}

TEST_CASE("per-vertex splitting pairs: d(d-3)/2 at a vertex of degree d") {
  for (int m = 1; m <= 4; ++m) {
    const int d = 4 * m;
    CHECK(qualifying_transition_count(npod_surface(m), 0) == d * (d - 3) / 2);
  }
  for (int n = 4; n <= 8; ++n) {
    const RotationSystem rs = catalog(n);
    for (Vertex v = 0; v < n; ++v) {
      CHECK(qualifying_transition_count(rs, v) == (n - 1) * (n - 4) / 2);
    }
  }
  std::mt19937_64 rng(77);
  const RotationSystem rs = random_simple_graph(9, 0.5, rng);
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    const int d = rs.degree(v);
    CHECK(qualifying_transition_count(rs, v) == std::max(0, d * (d - 3) / 2));
  }
}

TEST_CASE("corner splits") {
  const RotationSystem rs = npod_surface(2);  // half-edges 0..7 at one vertex
  CHECK(split_at(rs, Corner{0, 4}).ccw_arc == 3);
  CHECK(split_at(rs, Corner{0, 4}).cw_arc == 3);
  CHECK(split_at(rs, Corner{2, 3}).ccw_arc == 0);
  CHECK(split_at(rs, Corner{2, 3}).cw_arc == 6);
}

TEST_CASE("intersection numbers: hand cases") {
  const RotationSystem rs = catalog(7);
  const auto orders = neighbor_orders(rs);
  const auto tri = enumerate_short_cycles(rs, 3);
  int one_vertex_pairs = 0;
  int crossing = 0;
  for (std::size_t i = 0; i < tri.size(); ++i) {
    CHECK(geometric_intersection_number(tri[i], tri[i], rs) == 0);
    for (std::size_t j = i + 1; j < tri.size(); ++j) {
      const auto a = tri[i].vertices();
      const auto b = tri[j].vertices();
      std::vector<Vertex> shared;
      for (Vertex v : a) {
        if (std::find(b.begin(), b.end(), v) != b.end()) shared.push_back(v);
      }
      const int x = geometric_intersection_number(tri[i], tri[j], rs);
      CHECK(x == geometric_intersection_number(tri[j], tri[i], rs));
      if (shared.empty()) CHECK(x == 0);
      if (shared.size() != 1) continue;
      // One common vertex: cross iff the neighbor pairs interleave.
      const Vertex s = shared[0];
      std::vector<Vertex> na, nb;
      for (Vertex v : a) if (v != s) na.push_back(v);
      for (Vertex v : b) if (v != s) nb.push_back(v);
      const auto &o = orders[s];
      const auto pos = [&](Vertex v) { return std::find(o.begin(), o.end(), v) - o.begin(); };
      const auto between = [&](Vertex v) {
        const auto lo = std::min(pos(na[0]), pos(na[1]));
        const auto hi = std::max(pos(na[0]), pos(na[1]));
        return pos(v) > lo && pos(v) < hi;
      };
      const int expected = between(nb[0]) != between(nb[1]) ? 1 : 0;
      CHECK(x == expected);
      ++one_vertex_pairs;
      crossing += expected;
    }
  }
  CHECK(one_vertex_pairs > 0);
  CHECK(crossing > 0);
}

TEST_CASE("mod-2 intersection rows depend only on the homology class") {
  for (int n = 5; n <= 8; ++n) {
    CAPTURE(n);
    const RotationSystem rs = catalog(n);
    const Z2Homology h(rs);
    const auto cycles = enumerate_short_cycles(rs, 4);
    const IntersectionMatrix m = intersection_matrix(cycles, rs);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (h.is_trivial(cycles[i])) CHECK(std::ranges::all_of(m.mod2_row(static_cast<int>(i)),
                                                             [](char c) { return c == 0; }));
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (h.homologous(cycles[i], cycles[j])) {
          CHECK(m.mod2_row(static_cast<int>(i)) == m.mod2_row(static_cast<int>(j)));
        }
      }
    }
  }
}

TEST_CASE("homology of embedded cycles") {
  const RotationSystem rs = catalog(7);
  const Z2Homology h(rs);
  for (const auto &f : trace_faces(rs)) {
    CHECK(h.is_trivial(GraphCycle(rs, std::vector<HalfEdge>(f.begin(), f.end()))));
  }
  // One-vertex torus: the two loops are independent.
  const RotationSystem torus = npod_surface(1);
  const Z2Homology ht(torus);
  const auto loops = enumerate_short_cycles(torus, 1);
  REQUIRE(loops.size() == 2);
  CHECK_FALSE(ht.is_trivial(loops[0]));
  CHECK_FALSE(ht.homologous(loops[0], loops[1]));
  CHECK(ht.distinct_classes(loops) == 2);
}

TEST_CASE("distinct mod-2 rows are bounded by the homology of the closed surface") {
  for (int n = 5; n <= 8; ++n) {
    const ConstructionReport r = analyze(catalog(n), {.equalize = false});
    const int bound = 1 << (2 * r.genus);
    CHECK(r.intersections.distinct_rows <= bound);
    CHECK(r.intersections.distinct_rows == r.intersections.homology_classes);
    CHECK(r.intersections.null_homologous == 0);
    CHECK(r.intersections.rows_distinct == (r.intersections.distinct_rows == r.qualifying_count()));
  }
}

TEST_CASE("intersection matrix: parallel agrees with serial") {
  for (int n = 6; n <= 8; ++n) {
    const RotationSystem rs = catalog(n);
    const auto cycles = enumerate_short_cycles(rs, 4);
    const IntersectionMatrix a = intersection_matrix(cycles, rs);
    const IntersectionMatrix b = serial::intersection_matrix(cycles, rs);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
      CHECK(a.at(i, i) == 0);
      for (int j = 0; j < a.size(); ++j) {
        CHECK(a.at(i, j) == b.at(i, j));
        CHECK(a.at(i, j) == a.at(j, i));
      }
    }
  }
}

TEST_CASE("negative controls") {
  const RotationSystem rs = catalog(7);
  const auto tri = enumerate_short_cycles(rs, 3);
  // 0-1-2 and 3-4-5 are vertex-disjoint.
  const auto find = [&](const std::string &label) {
    return *std::find_if(tri.begin(), tri.end(),
                         [&](const GraphCycle &c) { return c.label() == label; });
  };
  const std::vector<GraphCycle> pair{find("0-1-2"), find("3-4-5")};
  const Mod2Result r = mod2_matrix_and_distinctness(pair, rs);
  CHECK(r.matrix.at(0, 1) == 0);
  CHECK_FALSE(r.rows_distinct);
  CHECK_FALSE(intersection_graph_connected(r.matrix));
  CHECK(intersection_graph_connected(IntersectionMatrix(1)));
  CHECK(intersection_graph_connected(IntersectionMatrix(0)));
}

TEST_CASE("n-pod systoles") {
  for (int m = 1; m <= 3; ++m) {
    const NpodReport r = npod_systole_report(m);
    CHECK(r.loop_count == 2 * m);
    CHECK(r.all_pairs_cross_once);
    CHECK(r.all_loops_qualifying);
    CHECK(r.bordered_genus == m);
    CHECK(r.boundary_components == 1);
    CHECK(r.stated_systoles == 4 * m);
  }
}

TEST_CASE("equalization: worked examples") {
  IntersectionMatrix path(3);
  path.set(0, 1, 1);
  path.set(1, 2, 1);
  const EqualizationTrace t = equalize_lengths({2.9, 2.95, 3.0}, path, 0.05);
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].max_set == std::vector<int>{2});
  CHECK(t.steps[0].width == doctest::Approx(0.025).epsilon(1e-12));
  CHECK(t.steps[1].width == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(t.final_lengths == std::vector<double>{3.0, 3.0, 3.0});

  const EqualizationTrace flat = equalize_lengths({3.0, 3.0, 3.0}, path, 0.05);
  CHECK(flat.steps.empty());
  CHECK(flat.final_lengths == std::vector<double>{3.0, 3.0, 3.0});
}

TEST_CASE("equalization: argument checks") {
  IntersectionMatrix path(2);
  path.set(0, 1, 1);
  CHECK_THROWS_AS((void)equalize_lengths({3.0, 3.0}, path, 0.0), DomainError);
  CHECK_THROWS_AS((void)equalize_lengths({3.0, 3.0}, path, 0.2), DomainError);
  CHECK_THROWS_AS((void)equalize_lengths({3.0}, path, 0.05), DomainError);
  CHECK_THROWS_AS((void)equalize_lengths({2.5, 3.0}, path, 0.05), DomainError);
  CHECK_THROWS_AS((void)equalize_lengths({3.0, 3.1}, path, 0.05), DomainError);
  IntersectionMatrix apart(2);
  CHECK_THROWS_AS((void)equalize_lengths({2.8, 3.0}, apart, 0.05), PreconditionError);
}

TEST_CASE("equalization: randomized connected instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 60);
    IntersectionMatrix m(n);
    for (int i = 1; i < n; ++i) m.set(i, static_cast<int>(rng() % i), 1);
    for (int k = 0; k < n; ++k) {
      const int i = static_cast<int>(rng() % n);
      const int j = static_cast<int>(rng() % n);
      if (i != j && m.at(i, j) == 0) m.set(i, j, static_cast<int>(rng() % 3));
    }
    const auto initial = seeded_lengths(n, 0.05, rng());
    const EqualizationTrace t = equalize_lengths(initial, m, 0.05);
    const double top = *std::max_element(initial.begin(), initial.end());
    CHECK(t.steps.size() <= static_cast<std::size_t>(std::max(0, n - 1)));
    for (double x : t.final_lengths) CHECK(x == top);
    std::vector<double> prev = initial;
    for (const auto &s : t.steps) {
      CHECK(s.width > 0.0);
      for (int i = 0; i < n; ++i) CHECK(s.lengths[i] >= prev[i]);
      for (int i : s.max_set) CHECK(s.lengths[i] == prev[i]);
      prev = s.lengths;
    }
  }
}

TEST_CASE("seeded lengths") {
  const auto a = seeded_lengths(100, 0.05, 9);
  CHECK(a == seeded_lengths(100, 0.05, 9));
  CHECK(a != seeded_lengths(100, 0.05, 10));
  for (double x : a) {
    CHECK(x >= 2.7);
    CHECK(x <= 3.0);
  }
}

TEST_CASE("count floors") {
  CHECK(formula_floor(7) == 33);
  CHECK(formula_floor(5) == 9);
  CHECK(formula_floor(4) == 3);
  CHECK(degree_floor(7) == 21);
  CHECK(degree_floor(8) == 38);
}

TEST_CASE("K_n analysis on minimal embeddings") {
  for (int n = 5; n <= 8; ++n) {
    CAPTURE(n);
    const RotationSystem rs = catalog(n);
    const ConstructionReport r = analyze(rs);
    CHECK(r.complete_graph);
    CHECK(r.genus == ringel_youngs_genus(n));
    CHECK(r.minimal_genus == ringel_youngs_genus(n));
    CHECK(r.short_length == 3);
    CHECK(r.short_cycles.size() == static_cast<std::size_t>(binomial(n, 3)));
    CHECK(r.meets_degree_floor());
    CHECK(r.intersections.entries_in_0_1);
    CHECK(r.intersections.pairs_one > 0);
    CHECK(r.intersections.connected);
    REQUIRE(r.equalization.has_value());
    CHECK(r.equalization->steps.size() <= static_cast<std::size_t>(r.qualifying_count() - 1));
    CHECK(r.growth_ratio == doctest::Approx(r.qualifying_count() / std::pow(r.genus, 1.5)));
    if (n >= 7) CHECK(r.growth_ratio > 6.0);
  }
  const ConstructionReport k7 = analyze(catalog(7));
  CHECK(k7.qualifying_count() == 21);
  CHECK(k7.faces == 14);
  CHECK(k7.per_vertex_choices == std::vector<int>(7, 9));
}

TEST_CASE("analysis of other graphs") {
  CHECK_THROWS_AS((void)count_qualifying(npod_surface(2)), UnsupportedError);
  const ConstructionReport npod = analyze(npod_surface(2));
  CHECK_FALSE(npod.complete_graph);
  CHECK(npod.short_length == 1);
  CHECK(npod.qualifying_count() == 4);
  CHECK_FALSE(npod.formula_floor.has_value());
  CHECK(npod.intersections.connected);

  const ConstructionReport bowtie = analyze(double_bowtie());
  CHECK(bowtie.qualifying_count() == 4);
  CHECK(bowtie.intersections.pairs_one == 2);
  CHECK_FALSE(bowtie.intersections.connected);
  CHECK_FALSE(bowtie.equalization.has_value());
  CHECK_FALSE(bowtie.warnings.empty());
  CHECK_THROWS_AS((void)analyze(catalog(7), {.epsilon = 0.5}), DomainError);
}
