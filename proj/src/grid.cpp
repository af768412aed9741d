#include "systolic/grid.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace systolic::grid {
namespace {

double to_double(std::string_view s) {
  double v = 0.0;
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

int to_int(std::string_view s) {
  int v = 0;
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

template <typename Fn>
void for_each_item(std::string_view text, Fn &&fn) {
  if (text.empty()) {
    throw std::invalid_argument("empty grid");
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                          : comma - start);
    fn(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

struct RangeSpec {
  std::string_view lo, hi, suffix;
  bool is_range = false;
};

RangeSpec split_range(std::string_view item) {
  RangeSpec spec;
  const auto dots = item.find("..");
  if (dots == std::string_view::npos) {
    spec.lo = item;
    return spec;
  }
  spec.is_range = true;
  spec.lo = item.substr(0, dots);
  auto rest = item.substr(dots + 2);
  const auto colon = rest.find(':');
  if (colon != std::string_view::npos) {
    spec.suffix = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }
  spec.hi = rest;
  return spec;
}

} // namespace

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (n < 1 || !(lo > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("log_spaced: need n >= 1 and 0 < lo <= hi");
  }
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
  if (n < 1 || !(hi >= lo)) {
    throw std::invalid_argument("lin_spaced: need n >= 1 and lo <= hi");
  }
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> stepped(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("stepped: need step > 0 and lo <= hi");
  }
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = lo + step * static_cast<double>(i);
    if (v > hi + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_grid(std::string_view text) {
  std::vector<double> out;
  for_each_item(text, [&](std::string_view item) {
    const auto spec = split_range(item);
    if (!spec.is_range) {
      out.push_back(to_double(spec.lo));
      return;
    }
    const double lo = to_double(spec.lo);
    const double hi = to_double(spec.hi);
    std::vector<double> part;
    if (spec.suffix.empty()) {
      part = stepped(lo, hi, 1.0);
    } else if (spec.suffix.starts_with("log")) {
      part = log_spaced(lo, hi, to_int(spec.suffix.substr(3)));
    } else if (spec.suffix.starts_with("lin")) {
      part = lin_spaced(lo, hi, to_int(spec.suffix.substr(3)));
    } else {
      part = stepped(lo, hi, to_double(spec.suffix));
    }
    out.insert(out.end(), part.begin(), part.end());
  });
  return out;
}

std::vector<int> parse_int_grid(std::string_view text) {
  std::vector<int> out;
  for_each_item(text, [&](std::string_view item) {
    const auto spec = split_range(item);
    if (!spec.is_range) {
      out.push_back(to_int(spec.lo));
      return;
    }
    const int lo = to_int(spec.lo);
    const int hi = to_int(spec.hi);
    const int step = spec.suffix.empty() ? 1 : to_int(spec.suffix);
    if (step < 1 || hi < lo) {
      throw std::invalid_argument("integer grid needs lo <= hi and step >= 1");
    }
    for (int g = lo; g <= hi; g += step) out.push_back(g);
  });
  return out;
}

} // namespace systolic::grid
