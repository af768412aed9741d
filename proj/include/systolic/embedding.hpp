#pragma once

// Minimal-genus embeddings of complete graphs: a verified catalog for small
// n, and a seeded simulated-annealing search over rotation systems as the
// fallback. Every returned embedding is face-traced against ceil((n-3)(n-4)/12).

#include <cstdint>
#include <optional>
#include <random>

#include "systolic/rotation_system.hpp"

namespace systolic::embedding {

inline constexpr int kMinN = 4;
/// Largest n the search is run for.
inline constexpr int kMaxSearchN = 9;

struct SearchOptions {
  std::uint64_t seed = 0;
  /// Annealing moves per restart.
  long iterations = 400'000;
  int restarts = 64;
};

/// Catalog entry for n in 4..8, verified by face tracing on every call.
[[nodiscard]] std::optional<RotationSystem> catalog_embedding(int n);

/// Seeded search for an embedding of K_n of genus `target_genus`. Restarts
/// may run in parallel; the lowest-indexed successful restart wins, so the
/// result depends only on the options. Throws SearchError when the budget
/// is exhausted.
[[nodiscard]] RotationSystem search_embedding(int n, int target_genus, const SearchOptions &opts);

/// Catalog first, then search. Throws DomainError outside 4..kMaxSearchN.
[[nodiscard]] RotationSystem complete_graph_embedding(int n, const SearchOptions &opts = {});

/// Uniformly random rotation of K_n.
[[nodiscard]] RotationSystem random_complete_rotation(int n, std::mt19937_64 &rng);

} // namespace systolic::embedding
