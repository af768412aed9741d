#include "systolic/construction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "systolic/error.hpp"
#include "systolic/homology.hpp"

namespace systolic {

long formula_floor(int n) {
  const long num = static_cast<long>(n) * n * (n - 3);
  return (num + 5) / 6;
}

long degree_floor(int n) {
  const long num = static_cast<long>(n) * (n - 1) * (n - 4);
  return num <= 0 ? 0 : (num + 5) / 6;
}

int girth(const RotationSystem &rs) {
  for (int bound = 1; bound <= rs.vertex_count(); ++bound) {
    // Cycles of length < bound were already ruled out.
    if (!enumerate_short_cycles(rs, bound).empty()) return bound;
  }
  return 0;
}

std::vector<double> seeded_lengths(int count, double epsilon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  const double lo = 3.0 - 6.0 * epsilon;
  for (double &l : out) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    l = std::min(3.0, lo + (3.0 - lo) * u);
  }
  return out;
}

namespace {

void fill_cycles(ConstructionReport &rep, const RotationSystem &rs) {
  const SurfaceSummary s = summarize(rs);
  rep.n = rs.vertex_count();
  rep.genus = s.genus;
  rep.faces = s.F;
  rep.complete_graph = is_complete_graph(rs);
  rep.short_length = rep.complete_graph ? 3 : girth(rs);
  if (rep.short_length > 0) {
    for (auto &c : enumerate_short_cycles(rs, rep.short_length)) {
      if (c.length() != rep.short_length) continue;
      if (is_qualifying(c, rs)) rep.qualifying.push_back(c);
      rep.short_cycles.push_back(std::move(c));
    }
  }
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    rep.per_vertex_choices.push_back(qualifying_transition_count(rs, v));
  }
  if (rep.complete_graph && rep.n >= 3) {
    rep.minimal_genus = ringel_youngs_genus(rep.n);
    rep.formula_floor = formula_floor(rep.n);
    rep.degree_floor = degree_floor(rep.n);
    if (rep.genus == 0) {
      rep.warnings.emplace_back(
          "planar embedding: short cycles bound faces or disks, nontriviality claims do not apply");
    }
    if (rep.genus != *rep.minimal_genus) {
      rep.warnings.emplace_back("embedding genus differs from the minimal genus of K_n");
    }
  }
  if (rep.genus > 0) {
    rep.growth_ratio = rep.qualifying_count() / std::pow(static_cast<double>(rep.genus), 1.5);
  }
}

} // namespace

ConstructionReport count_qualifying(const RotationSystem &rs) {
  if (!is_complete_graph(rs)) {
    throw UnsupportedError("count_qualifying: the count formula is specific to complete graphs");
  }
  ConstructionReport rep;
  fill_cycles(rep, rs);
  return rep;
}

ConstructionReport analyze(const RotationSystem &rs, const ConstructionOptions &opts) {
  if (!(opts.epsilon > 0.0 && opts.epsilon < 1.0 / 6.0)) {
    throw DomainError("epsilon must lie in (0, 1/6)");
  }
  ConstructionReport rep;
  fill_cycles(rep, rs);

  IntersectionMatrix m = intersection_matrix(rep.qualifying, rs);
  IntersectionSummary &sum = rep.intersections;
  sum.max_entry = m.max_entry();
  sum.pairs_zero = m.count_pairs(0);
  sum.pairs_one = m.count_pairs(1);
  const long pairs = static_cast<long>(m.size()) * (m.size() - 1) / 2;
  sum.pairs_above_one = pairs - sum.pairs_zero - sum.pairs_one;
  sum.entries_in_0_1 = sum.pairs_above_one == 0;
  sum.rows_distinct = rows_pairwise_distinct(m);
  sum.connected = intersection_graph_connected(m);
  sum.distinct_rows = distinct_row_count(m);
  const Z2Homology h(rs);
  sum.homology_classes = h.distinct_classes(rep.qualifying);
  sum.null_homologous = static_cast<int>(std::count_if(
      rep.qualifying.begin(), rep.qualifying.end(),
      [&](const GraphCycle &c) { return h.is_trivial(c); }));
  rep.matrix = std::move(m);

  if (opts.equalize) {
    if (!sum.connected) {
      rep.warnings.emplace_back(
          "equalization skipped: intersection graph of qualifying cycles is disconnected");
    } else {
      rep.equalization = equalize_lengths(
          seeded_lengths(rep.qualifying_count(), opts.epsilon, opts.seed), *rep.matrix,
          opts.epsilon);
    }
  }
  return rep;
}

NpodReport npod_systole_report(int m) {
  const RotationSystem rs = npod_surface(m);
  NpodReport rep;
  rep.m = m;
  rep.half_edges = 4 * m;
  rep.loops = enumerate_short_cycles(rs, 1);
  rep.loop_count = static_cast<int>(rep.loops.size());
  rep.matrix = intersection_matrix(rep.loops, rs);
  rep.all_pairs_cross_once = rep.matrix.count_pairs(1) ==
                             static_cast<long>(rep.loop_count) * (rep.loop_count - 1) / 2;
  rep.all_loops_qualifying = std::all_of(rep.loops.begin(), rep.loops.end(),
                                         [&](const GraphCycle &c) { return is_qualifying(c, rs); });
  const SurfaceSummary s = summarize(rs);
  rep.bordered_genus = s.bordered_genus;
  rep.boundary_components = s.boundary_components;
  rep.stated_genus = m;
  rep.stated_systoles = 4 * m;
  return rep;
}

} // namespace systolic
