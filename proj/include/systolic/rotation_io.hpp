#pragma once

// Text format for rotation systems:
//
//   vertices <V> halfedges <2E>
//   rot <v>: h1 h2 ... hk      (one line per vertex, cyclic order)
//   pair hA hB                 (one line per edge)
//
// '#' starts a comment. The writer emits the canonical form: vertices
// ascending, each rotation starting from its smallest half-edge, pairs as
// hA < hB sorted by hA.

#include <iosfwd>
#include <string>
#include <string_view>

#include "systolic/rotation_system.hpp"

namespace systolic::rotation_io {

/// Throws ValidationError with a line number on malformed input.
[[nodiscard]] RotationSystem parse(std::string_view text);
[[nodiscard]] RotationSystem read(std::istream &in);
[[nodiscard]] RotationSystem load(const std::string &path);

void write(std::ostream &out, const RotationSystem &rs);
[[nodiscard]] std::string to_string(const RotationSystem &rs);
void save(const std::string &path, const RotationSystem &rs);

} // namespace systolic::rotation_io
