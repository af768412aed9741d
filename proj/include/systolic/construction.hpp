#pragma once

// End-to-end analysis of an embedded graph: shortest cycles, which of them
// qualify (survive as nontrivial curves on the closed surface), their
// intersection data, and the length equalization over the qualifying family.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "systolic/cycles.hpp"
#include "systolic/equalize.hpp"
#include "systolic/intersection.hpp"
#include "systolic/rotation_system.hpp"

namespace systolic {

/// ceil(n^2 (n-3) / 6): the count floor obtained with n(n-3)/2 splitting
/// pairs per vertex.
[[nodiscard]] long formula_floor(int n);
/// ceil(n (n-1) (n-4) / 6): the same argument with the degree n-1 of K_n,
/// i.e. (n-1)(n-4)/2 splitting pairs per vertex.
[[nodiscard]] long degree_floor(int n);

struct IntersectionSummary {
  int max_entry = 0;
  long pairs_zero = 0;
  long pairs_one = 0;
  long pairs_above_one = 0;
  bool entries_in_0_1 = true;
  bool rows_distinct = false;
  bool connected = false;
  int distinct_rows = 0;
  int homology_classes = 0;    // distinct mod-2 classes on the closed surface
  int null_homologous = 0;     // qualifying cycles bounding on the closed surface
};

struct ConstructionReport {
  int n = 0;  // vertex count
  int genus = 0;
  int faces = 0;
  bool complete_graph = false;
  std::optional<int> minimal_genus;  // Ringel-Youngs value when complete
  int short_length = 0;              // girth; 3 for K_n
  std::vector<GraphCycle> short_cycles;
  std::vector<GraphCycle> qualifying;
  std::vector<int> per_vertex_choices;  // splitting pairs at each vertex
  std::optional<long> formula_floor;
  std::optional<long> degree_floor;
  /// N divided by genus^{3/2} (0 when genus is 0).
  double growth_ratio = 0.0;

  std::optional<IntersectionMatrix> matrix;
  IntersectionSummary intersections;

  std::optional<EqualizationTrace> equalization;
  std::vector<std::string> warnings;

  [[nodiscard]] int qualifying_count() const { return static_cast<int>(qualifying.size()); }
  [[nodiscard]] bool meets_formula_floor() const {
    return formula_floor && qualifying_count() >= *formula_floor;
  }
  [[nodiscard]] bool meets_degree_floor() const {
    return degree_floor && qualifying_count() >= *degree_floor;
  }
};

/// Length of a shortest cycle, 0 for forests.
[[nodiscard]] int girth(const RotationSystem &rs);

/// Triangles and qualifying count of an embedding of K_n, with the floors.
/// Throws UnsupportedError for any other graph.
[[nodiscard]] ConstructionReport count_qualifying(const RotationSystem &rs);

struct ConstructionOptions {
  double epsilon = 0.05;
  std::uint64_t seed = 0;
  bool equalize = true;
};

/// Full pipeline on any connected rotation system: shortest cycles,
/// qualifying subset, intersection matrix, distinctness, connectivity and,
/// when connected, equalization from seeded lengths in [3 - 6 eps, 3].
[[nodiscard]] ConstructionReport analyze(const RotationSystem &rs,
                                         const ConstructionOptions &opts = {});

/// Seeded initial lengths, uniform in [3 - 6 epsilon, 3].
[[nodiscard]] std::vector<double> seeded_lengths(int count, double epsilon, std::uint64_t seed);

struct NpodReport {
  int m = 0;
  int half_edges = 0;  // n = 4m
  int loop_count = 0;
  std::vector<GraphCycle> loops;
  IntersectionMatrix matrix{0};
  bool all_pairs_cross_once = false;
  bool all_loops_qualifying = false;
  int bordered_genus = 0;
  int boundary_components = 0;
  /// Counts as stated for this surface: genus m and n = 4m systoles.
  int stated_genus = 0;
  int stated_systoles = 0;
};

[[nodiscard]] NpodReport npod_systole_report(int m);

} // namespace systolic
