#include "systolic/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "systolic/error.hpp"

namespace systolic::embedding {
namespace {

using Orders = std::vector<std::vector<Vertex>>;

// Neighbor orders. K_5, K_6 and K_8 came from search_embedding with the
// default options; K_7 uses the cyclic rotation i -> i+1, i+3, i+2, i+6, i+4, i+5.
Orders catalog_orders(int n) {
  switch (n) {
  case 4:
    return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  case 5:
    return {{1, 3, 2, 4}, {3, 2, 4, 0}, {4, 1, 3, 0}, {4, 2, 1, 0}, {2, 0, 3, 1}};
  case 6:
    return {{5, 3, 2, 1, 4}, {3, 5, 0, 2, 4}, {1, 0, 3, 5, 4},
            {0, 1, 4, 5, 2}, {2, 5, 0, 3, 1}, {0, 4, 2, 3, 1}};
  case 7: {
    Orders orders(7);
    for (int i = 0; i < 7; ++i) {
      for (int k : {1, 3, 2, 6, 4, 5}) orders[static_cast<std::size_t>(i)].push_back((i + k) % 7);
    }
    return orders;
  }
  case 8:
    return {{2, 4, 7, 3, 6, 5, 1}, {5, 3, 4, 2, 7, 6, 0}, {6, 3, 5, 7, 1, 4, 0},
            {4, 1, 2, 6, 0, 7, 5}, {7, 0, 2, 1, 3, 5, 6}, {7, 2, 1, 0, 6, 4, 3},
            {4, 5, 0, 3, 2, 1, 7}, {2, 5, 3, 0, 4, 6, 1}};
  default:
    return {};
  }
}

// Half-edge layout of K_n shared by the search: edge (u, v), u < v, gets
// index e in lexicographic order; half-edge 2e at u, 2e+1 at v.
class CompleteGraphState {
public:
  explicit CompleteGraphState(int n) : n_(n), half_(static_cast<std::size_t>(n * n), -1) {
    int e = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        half_[idx(u, v)] = 2 * e;
        half_[idx(v, u)] = 2 * e + 1;
        ++e;
      }
    }
    succ_.assign(static_cast<std::size_t>(2 * e), -1);
    seen_.assign(static_cast<std::size_t>(2 * e), 0);
    orders_.resize(static_cast<std::size_t>(n));
  }

  void set_orders(Orders orders) {
    orders_ = std::move(orders);
    for (int v = 0; v < n_; ++v) refresh(v);
  }

  [[nodiscard]] const Orders &orders() const { return orders_; }
  Orders &mutable_orders() { return orders_; }

  void refresh(int v) {
    const auto &ord = orders_[static_cast<std::size_t>(v)];
    const std::size_t d = ord.size();
    for (std::size_t i = 0; i < d; ++i) {
      succ_[static_cast<std::size_t>(half(v, ord[i]))] = half(v, ord[(i + 1) % d]);
    }
  }

  int face_count() {
    const int nh = static_cast<int>(succ_.size());
    std::fill(seen_.begin(), seen_.end(), 0);
    int faces = 0;
    for (int s = 0; s < nh; ++s) {
      if (seen_[static_cast<std::size_t>(s)]) continue;
      ++faces;
      int h = s;
      do {
        seen_[static_cast<std::size_t>(h)] = 1;
        h = succ_[static_cast<std::size_t>(h ^ 1)];
      } while (h != s);
    }
    return faces;
  }

private:
  [[nodiscard]] std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u * n_ + v);
  }
  [[nodiscard]] int half(int u, int v) const { return half_[idx(u, v)]; }

  int n_;
  std::vector<int> half_;
  std::vector<int> succ_;
  std::vector<char> seen_;
  Orders orders_;
};

double unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Orders random_orders(int n, std::mt19937_64 &rng) {
  Orders orders(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto &ord = orders[static_cast<std::size_t>(v)];
    for (int w = 0; w < n; ++w) {
      if (w != v) ord.push_back(w);
    }
    // Fisher-Yates with explicit modulo draws; std::shuffle is not portable across libraries.
    for (std::size_t i = ord.size(); i > 1; --i) {
      std::swap(ord[i - 1], ord[rng() % i]);
    }
  }
  return orders;
}

std::optional<Orders> anneal(int n, int target_faces, long iterations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CompleteGraphState state(n);
  state.set_orders(random_orders(n, rng));
  int faces = state.face_count();
  const double t_hi = 1.5;
  const double t_lo = 0.05;
  for (long it = 0; it < iterations && faces < target_faces; ++it) {
    const double t = t_hi + (t_lo - t_hi) * static_cast<double>(it) / static_cast<double>(iterations);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    auto &ord = state.mutable_orders()[static_cast<std::size_t>(v)];
    const std::size_t d = ord.size();
    const std::size_t i = rng() % d;
    std::size_t j = rng() % (d - 1);
    if (j >= i) ++j;
    std::swap(ord[i], ord[j]);
    state.refresh(v);
    const int candidate = state.face_count();
    if (candidate >= faces || unit(rng) < std::exp((candidate - faces) / t)) {
      faces = candidate;
    } else {
      std::swap(ord[i], ord[j]);
      state.refresh(v);
    }
  }
  if (faces < target_faces) return std::nullopt;
  return state.orders();
}

RotationSystem verified(RotationSystem rs, int n, const char *source) {
  const int expected = ringel_youngs_genus(n);
  const int traced = summarize(rs).genus;
  if (!is_complete_graph(rs) || rs.vertex_count() != n || traced != expected) {
    throw ValidationError(std::string(source) + " embedding of K_" + std::to_string(n) +
                          " has genus " + std::to_string(traced) + ", expected " +
                          std::to_string(expected));
  }
  return rs;
}

} // namespace

std::optional<RotationSystem> catalog_embedding(int n) {
  Orders orders = catalog_orders(n);
  if (orders.empty()) return std::nullopt;
  return verified(from_neighbor_orders(orders), n, "catalog");
}

RotationSystem search_embedding(int n, int target_genus, const SearchOptions &opts) {
  if (n < kMinN) {
    throw DomainError("search_embedding: n must be at least " + std::to_string(kMinN));
  }
  const int edges = n * (n - 1) / 2;
  const int target_faces = 2 - 2 * target_genus - n + edges;
  if (opts.restarts < 1 || opts.iterations < 1) {
    throw DomainError("search_embedding: budget must be positive");
  }

  std::vector<std::optional<Orders>> found(static_cast<std::size_t>(opts.restarts));
  std::atomic<int> first_success{std::numeric_limits<int>::max()};
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < opts.restarts; ++r) {
    if (r > first_success.load()) continue;
    auto result = anneal(n, target_faces, opts.iterations, restart_seed(opts.seed, r));
    if (result) {
      found[static_cast<std::size_t>(r)] = std::move(result);
      int cur = first_success.load();
      while (r < cur && !first_success.compare_exchange_weak(cur, r)) {
      }
    }
  }
  const int winner = first_success.load();
  if (winner == std::numeric_limits<int>::max()) {
    throw SearchError("no embedding of K_" + std::to_string(n) + " with genus " +
                      std::to_string(target_genus) + " found in " +
                      std::to_string(opts.restarts) + " restarts x " +
                      std::to_string(opts.iterations) + " moves (seed " +
                      std::to_string(opts.seed) + ")");
  }
  return from_neighbor_orders(*found[static_cast<std::size_t>(winner)]);
}

RotationSystem complete_graph_embedding(int n, const SearchOptions &opts) {
  if (n < kMinN || n > kMaxSearchN) {
    throw DomainError("complete_graph_embedding: n must lie in " + std::to_string(kMinN) +
                      ".." + std::to_string(kMaxSearchN));
  }
  if (auto rs = catalog_embedding(n)) return *std::move(rs);
  return verified(search_embedding(n, ringel_youngs_genus(n), opts), n, "search");
}

RotationSystem random_complete_rotation(int n, std::mt19937_64 &rng) {
  if (n < 2) {
    throw DomainError("random_complete_rotation: n must be at least 2");
  }
  return from_neighbor_orders(random_orders(n, rng));
}

} // namespace systolic::embedding
