#pragma once

// JSON and CSV emission. Reals are rounded to 12 significant digits so
// that emitted reports are stable across runs and platforms.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "systolic/bounds.hpp"
#include "systolic/construction.hpp"
#include "systolic/identities.hpp"

namespace systolic::report {

[[nodiscard]] double round12(double x);
/// "%.12g"
[[nodiscard]] std::string format12(double x);

[[nodiscard]] nlohmann::ordered_json to_json(const bounds::BoundReport &r);
[[nodiscard]] nlohmann::ordered_json to_json(const std::vector<bounds::BoundReport> &rows);
[[nodiscard]] std::string to_csv(const std::vector<bounds::BoundReport> &rows);

[[nodiscard]] nlohmann::ordered_json to_json(const bounds::CorollaryBounds &c);
[[nodiscard]] std::string to_csv(const std::vector<bounds::CorollaryBounds> &rows);

struct RunInfo {
  std::string source;  // "catalog K_7", "file x.rot", ...
  double epsilon = 0.05;
  std::uint64_t seed = 0;
};

[[nodiscard]] nlohmann::ordered_json to_json(const ConstructionReport &r, const RunInfo &info);
/// Intersection matrix of the qualifying cycles, labelled by vertex sequence.
[[nodiscard]] std::string matrix_csv(const std::vector<GraphCycle> &cycles,
                                     const IntersectionMatrix &m);

[[nodiscard]] nlohmann::ordered_json to_json(const NpodReport &r);

[[nodiscard]] nlohmann::ordered_json to_json(const identities::SuiteResult &r);

} // namespace systolic::report
