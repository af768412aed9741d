#include "systolic/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace systolic::report {

using nlohmann::ordered_json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format12(x));
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

ordered_json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

const char *regime_name(bounds::Regime r) {
  return r == bounds::Regime::kShort ? "short" : "covering";
}

ordered_json cycle_json(const GraphCycle &c) {
  return ordered_json{{"vertices", std::vector<int>(c.vertices().begin(), c.vertices().end())},
                      {"darts", std::vector<int>(c.darts().begin(), c.darts().end())}};
}

ordered_json matrix_json(const IntersectionMatrix &m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    std::vector<int> row(static_cast<std::size_t>(m.size()));
    for (int j = 0; j < m.size(); ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> rounded(const std::vector<double> &v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) out.push_back(round12(x));
  return out;
}

template <typename T>
ordered_json optional_json(const std::optional<T> &v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

} // namespace

ordered_json to_json(const bounds::BoundReport &r) {
  return ordered_json{
      {"genus", r.genus},
      {"length", real(r.sys_length)},
      {"regime", regime_name(r.regime)},
      {"exceeds_area_bound", r.exceeds_area_bound},
      {"collar_w", real(r.collar_w)},
      {"systolic_r", real(r.systolic_r)},
      {"theta_min", real(r.theta_min)},
      {"intersection_R", real(r.intersection_R)},
      {"cover_F", real(r.cover_F)},
      {"per_ball_G", real(r.per_ball_G)},
      {"per_ball_G_simplified", real(r.per_ball_G_simplified)},
      {"balls_per_systole_H", real(r.balls_per_systole_H)},
      {"composite", real(r.composite_bound)},
      {"effective", real(r.effective_bound)},
      {"kiss_upper", real(r.kiss_upper)},
  };
}

ordered_json to_json(const std::vector<bounds::BoundReport> &rows) {
  ordered_json out = ordered_json::array();
  for (const auto &r : rows) out.push_back(to_json(r));
  return out;
}

std::string to_csv(const std::vector<bounds::BoundReport> &rows) {
  std::ostringstream ss;
  ss << "genus,length,regime,exceeds_area_bound,collar_w,systolic_r,theta_min,intersection_R,"
        "cover_F,per_ball_G,per_ball_G_simplified,balls_per_systole_H,composite,effective,"
        "kiss_upper\n";
  for (const auto &r : rows) {
    ss << r.genus << ',' << format12(r.sys_length) << ',' << regime_name(r.regime) << ','
       << (r.exceeds_area_bound ? "true" : "false");
    for (double x : {r.collar_w, r.systolic_r, r.theta_min, r.intersection_R, r.cover_F,
                     r.per_ball_G, r.per_ball_G_simplified, r.balls_per_systole_H,
                     r.composite_bound, r.effective_bound, r.kiss_upper}) {
      ss << ',' << format12(x);
    }
    ss << '\n';
  }
  return ss.str();
}

ordered_json to_json(const bounds::CorollaryBounds &c) {
  return ordered_json{{"genus", c.genus},
                      {"subquadratic", real(c.subquadratic)},
                      {"conj_size", real(c.conj_size)},
                      {"conj_number", real(c.conj_number)},
                      {"strong_lower", real(c.strong_lower)}};
}

std::string to_csv(const std::vector<bounds::CorollaryBounds> &rows) {
  std::ostringstream ss;
  ss << "genus,subquadratic,conj_size,conj_number,strong_lower\n";
  for (const auto &c : rows) {
    ss << c.genus << ',' << format12(c.subquadratic) << ',' << format12(c.conj_size) << ','
       << format12(c.conj_number) << ',' << format12(c.strong_lower) << '\n';
  }
  return ss.str();
}

ordered_json to_json(const ConstructionReport &r, const RunInfo &info) {
  ordered_json j;
  j["source"] = info.source;
  j["n"] = r.n;
  j["genus"] = r.genus;
  j["faces"] = r.faces;
  j["complete_graph"] = r.complete_graph;
  j["minimal_genus"] = optional_json(r.minimal_genus);
  j["short_length"] = r.short_length;
  j["short_cycle_count"] = r.short_cycles.size();
  j["qualifying_count"] = r.qualifying_count();
  j["formula_floor"] = optional_json(r.formula_floor);
  j["meets_formula_floor"] = r.meets_formula_floor();
  j["degree_floor"] = optional_json(r.degree_floor);
  j["meets_degree_floor"] = r.meets_degree_floor();
  j["per_vertex_choices"] = r.per_vertex_choices;
  j["growth_ratio"] = real(r.growth_ratio);

  const IntersectionSummary &s = r.intersections;
  j["intersections"] = ordered_json{{"max_entry", s.max_entry},
                                    {"pairs_zero", s.pairs_zero},
                                    {"pairs_one", s.pairs_one},
                                    {"pairs_above_one", s.pairs_above_one},
                                    {"entries_in_0_1", s.entries_in_0_1}};
  j["homology_distinct"] = s.rows_distinct;
  j["distinct_mod2_rows"] = s.distinct_rows;
  j["homology_classes"] = s.homology_classes;
  j["null_homologous"] = s.null_homologous;
  j["connected"] = s.connected;

  ordered_json cycles = ordered_json::array();
  for (const auto &c : r.qualifying) cycles.push_back(cycle_json(c));
  j["qualifying_cycles"] = cycles;
  j["matrix"] = r.matrix ? matrix_json(*r.matrix) : ordered_json(nullptr);

  if (r.equalization) {
    const EqualizationTrace &t = *r.equalization;
    ordered_json steps = ordered_json::array();
    for (const auto &st : t.steps) {
      steps.push_back(ordered_json{{"max_set", st.max_set},
                                   {"width", real(st.width)},
                                   {"lengths", rounded(st.lengths)}});
    }
    j["equalization"] = ordered_json{{"epsilon", real(info.epsilon)},
                                     {"seed", info.seed},
                                     {"initial", rounded(t.initial)},
                                     {"step_count", t.steps.size()},
                                     {"steps", steps},
                                     {"final", rounded(t.final_lengths)}};
  } else {
    j["equalization"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string matrix_csv(const std::vector<GraphCycle> &cycles, const IntersectionMatrix &m) {
  std::ostringstream ss;
  ss << "cycle";
  for (const auto &c : cycles) ss << ',' << c.label();
  ss << '\n';
  for (int i = 0; i < m.size(); ++i) {
    ss << cycles[static_cast<std::size_t>(i)].label();
    for (int j = 0; j < m.size(); ++j) ss << ',' << m.at(i, j);
    ss << '\n';
  }
  return ss.str();
}

ordered_json to_json(const NpodReport &r) {
  ordered_json loops = ordered_json::array();
  for (const auto &c : r.loops) loops.push_back(cycle_json(c));
  return ordered_json{{"m", r.m},
                      {"half_edges", r.half_edges},
                      {"loop_count", r.loop_count},
                      {"bordered_genus", r.bordered_genus},
                      {"boundary_components", r.boundary_components},
                      {"all_pairs_cross_once", r.all_pairs_cross_once},
                      {"all_loops_qualifying", r.all_loops_qualifying},
                      {"stated_genus", r.stated_genus},
                      {"stated_systoles", r.stated_systoles},
                      {"loops", loops},
                      {"matrix", matrix_json(r.matrix)}};
}

ordered_json to_json(const identities::SuiteResult &r) {
  ordered_json checks = ordered_json::array();
  for (const auto &c : r.checks) {
    const char *kind = c.kind == identities::CheckKind::kIdentity     ? "identity"
                       : c.kind == identities::CheckKind::kInequality ? "inequality"
                                                                      : "monotone";
    checks.push_back(ordered_json{{"name", c.name},
                                  {"kind", kind},
                                  {"points", c.points},
                                  {"worst", real(c.worst)},
                                  {"tolerance", real(c.tolerance)},
                                  {"worst_length", real(c.worst_length)},
                                  {"first_failure", real(c.first_failure)},
                                  {"passed", c.passed},
                                  {"gating", c.gating}});
  }
  return ordered_json{{"passed", r.passed()}, {"checks", checks}};
}

} // namespace systolic::report
