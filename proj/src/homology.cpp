#include "systolic/homology.hpp"

#include <algorithm>
#include <set>

#include "systolic/error.hpp"

namespace systolic {
namespace {

bool test_bit(const std::vector<std::uint64_t> &v, int bit) {
  return (v[static_cast<std::size_t>(bit) / 64] >> (bit % 64)) & 1U;
}

void flip_bit(std::vector<std::uint64_t> &v, int bit) {
  v[static_cast<std::size_t>(bit) / 64] ^= std::uint64_t{1} << (bit % 64);
}

void add_into(std::vector<std::uint64_t> &dst, const std::vector<std::uint64_t> &src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

int highest_bit(const std::vector<std::uint64_t> &v) {
  for (std::size_t w = v.size(); w-- > 0;) {
    if (v[w] != 0) return static_cast<int>(w * 64) + 63 - __builtin_clzll(v[w]);
  }
  return -1;
}

} // namespace

Z2Homology::Z2Homology(const RotationSystem &rs) : rs_(&rs) {
  edge_index_.assign(static_cast<std::size_t>(rs.half_edge_count()), -1);
  int e = 0;
  for (HalfEdge h = 0; h < rs.half_edge_count(); ++h) {
    if (h < rs.pair(h)) {
      edge_index_[static_cast<std::size_t>(h)] = e;
      edge_index_[static_cast<std::size_t>(rs.pair(h))] = e;
      ++e;
    }
  }
  words_ = (static_cast<std::size_t>(e) + 63) / 64;

  for (const auto &face : trace_faces(rs)) {
    std::vector<std::uint64_t> v(words_, 0);
    for (HalfEdge h : face) flip_bit(v, edge_index_[static_cast<std::size_t>(h)]);
    reduce_in_place(v);
    const int p = highest_bit(v);
    if (p < 0) continue;
    // Keep the basis fully reduced so reduce() yields a canonical form.
    for (auto &b : basis_) {
      if (test_bit(b, p)) add_into(b, v);
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
  }
}

std::vector<std::uint64_t> Z2Homology::indicator(const GraphCycle &c) const {
  if (!c.belongs_to(*rs_)) {
    throw ValidationError("cycle " + c.label() + " is not a cycle of this rotation system");
  }
  std::vector<std::uint64_t> v(words_, 0);
  for (HalfEdge h : c.darts()) flip_bit(v, edge_index_[static_cast<std::size_t>(h)]);
  return v;
}

void Z2Homology::reduce_in_place(std::vector<std::uint64_t> &v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (test_bit(v, pivots_[k])) add_into(v, basis_[k]);
  }
}

std::vector<std::uint64_t> Z2Homology::reduce(const GraphCycle &c) const {
  auto v = indicator(c);
  reduce_in_place(v);
  return v;
}

bool Z2Homology::is_trivial(const GraphCycle &c) const {
  const auto v = reduce(c);
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

bool Z2Homology::homologous(const GraphCycle &a, const GraphCycle &b) const {
  return reduce(a) == reduce(b);
}

int Z2Homology::distinct_classes(std::span<const GraphCycle> cycles) const {
  std::set<std::vector<std::uint64_t>> classes;
  for (const auto &c : cycles) classes.insert(reduce(c));
  return static_cast<int>(classes.size());
}

} // namespace systolic
