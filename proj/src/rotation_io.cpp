#include "systolic/rotation_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "systolic/error.hpp"

namespace systolic::rotation_io {
namespace {

[[noreturn]] void fail(int line, const std::string &msg) {
  throw ValidationError("rotation file line " + std::to_string(line) + ": " + msg);
}

int read_int(std::istringstream &ss, int line, const char *what) {
  long long v = 0;
  if (!(ss >> v)) fail(line, std::string("expected ") + what);
  if (v < 0 || v > 100'000'000) fail(line, std::string(what) + " out of range");
  return static_cast<int>(v);
}

} // namespace

RotationSystem parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int nv = 0;
  int nh = 0;
  std::vector<std::vector<HalfEdge>> rotations;
  std::vector<char> rot_seen;
  std::vector<HalfEdge> pairing;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::string keyword;
    if (!(ss >> keyword)) continue;

    if (keyword == "vertices") {
      if (have_header) fail(line_no, "duplicate header");
      nv = read_int(ss, line_no, "vertex count");
      std::string word;
      if (!(ss >> word) || word != "halfedges") fail(line_no, "expected 'halfedges'");
      nh = read_int(ss, line_no, "half-edge count");
      if (nh % 2 != 0) fail(line_no, "half-edge count must be even");
      rotations.assign(static_cast<std::size_t>(nv), {});
      rot_seen.assign(static_cast<std::size_t>(nv), 0);
      pairing.assign(static_cast<std::size_t>(nh), -1);
      have_header = true;
    } else if (!have_header) {
      fail(line_no, "header 'vertices <V> halfedges <2E>' must come first");
    } else if (keyword == "rot") {
      std::string vtok;
      if (!(ss >> vtok)) fail(line_no, "expected vertex id");
      const bool colon_attached = !vtok.empty() && vtok.back() == ':';
      if (colon_attached) vtok.pop_back();
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(vtok, &used);
        if (used != vtok.size()) throw std::invalid_argument(vtok);
      } catch (const std::exception &) {
        fail(line_no, "bad vertex id '" + vtok + "'");
      }
      if (!colon_attached) {
        std::string colon;
        if (!(ss >> colon) || colon != ":") fail(line_no, "expected ':' after vertex id");
      }
      if (v < 0 || v >= nv) fail(line_no, "vertex id out of range");
      if (rot_seen[static_cast<std::size_t>(v)]) fail(line_no, "duplicate rotation for vertex");
      rot_seen[static_cast<std::size_t>(v)] = 1;
      long long h = 0;
      while (ss >> h) {
        if (h < 0 || h >= nh) fail(line_no, "half-edge id out of range");
        rotations[static_cast<std::size_t>(v)].push_back(static_cast<HalfEdge>(h));
      }
      if (!ss.eof()) fail(line_no, "unexpected token in rotation");
    } else if (keyword == "pair") {
      const int a = read_int(ss, line_no, "half-edge id");
      const int b = read_int(ss, line_no, "half-edge id");
      std::string extra;
      if (ss >> extra) fail(line_no, "trailing token '" + extra + "'");
      if (a >= nh || b >= nh) fail(line_no, "half-edge id out of range");
      if (a == b) fail(line_no, "half-edge paired with itself");
      if (pairing[static_cast<std::size_t>(a)] != -1 || pairing[static_cast<std::size_t>(b)] != -1) {
        fail(line_no, "half-edge paired twice");
      }
      pairing[static_cast<std::size_t>(a)] = b;
      pairing[static_cast<std::size_t>(b)] = a;
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_header) fail(line_no, "missing header");
  for (int v = 0; v < nv; ++v) {
    if (!rot_seen[static_cast<std::size_t>(v)]) {
      fail(line_no, "no rotation given for vertex " + std::to_string(v));
    }
  }
  for (int h = 0; h < nh; ++h) {
    if (pairing[static_cast<std::size_t>(h)] == -1) {
      fail(line_no, "half-edge " + std::to_string(h) + " is unpaired");
    }
  }
  return RotationSystem(std::move(rotations), std::move(pairing));
}

RotationSystem read(std::istream &in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse(text);
}

RotationSystem load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open rotation file '" + path + "'");
  }
  return read(in);
}

void write(std::ostream &out, const RotationSystem &rs) {
  out << "vertices " << rs.vertex_count() << " halfedges " << rs.half_edge_count() << '\n';
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    const auto rot = rs.rotation(v);
    out << "rot " << v << ':';
    if (!rot.empty()) {
      const auto start = std::min_element(rot.begin(), rot.end()) - rot.begin();
      for (std::size_t i = 0; i < rot.size(); ++i) {
        out << ' ' << rot[(static_cast<std::size_t>(start) + i) % rot.size()];
      }
    }
    out << '\n';
  }
  for (HalfEdge h = 0; h < rs.half_edge_count(); ++h) {
    if (h < rs.pair(h)) out << "pair " << h << ' ' << rs.pair(h) << '\n';
  }
}

std::string to_string(const RotationSystem &rs) {
  std::ostringstream ss;
  write(ss, rs);
  return ss.str();
}

void save(const std::string &path, const RotationSystem &rs) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write rotation file '" + path + "'");
  }
  write(out, rs);
}

} // namespace systolic::rotation_io
