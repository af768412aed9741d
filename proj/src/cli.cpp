#include "systolic/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "systolic/bounds.hpp"
#include "systolic/construction.hpp"
#include "systolic/embedding.hpp"
#include "systolic/error.hpp"
#include "systolic/grid.hpp"
#include "systolic/identities.hpp"
#include "systolic/report.hpp"
#include "systolic/rotation_io.hpp"

namespace systolic::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsConfig {
  std::string genus = "2";
  std::string length = "4";
  double r_prime = std::asinh(1.0);
  double slack = bounds::default_area_slack();
  std::string format = "csv";
  std::string out;
  bool corollaries = false;
  bounds::CorollaryParams params;
};

struct VerifyConfig {
  std::string grid = "0.1..30:log50";
  std::string ineq_grid;
  std::string genus = "2..100";
  bool inject_fault = false;
  bool strict = false;
  std::string format = "text";
  std::string out;
};

struct ConstructConfig {
  std::optional<int> n;
  std::optional<int> npod;
  std::optional<std::string> rotation;
  double epsilon = 0.05;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string emit_rotation;
  long search_iterations = embedding::SearchOptions{}.iterations;
  int search_restarts = embedding::SearchOptions{}.restarts;
};

void emit(const std::string &text, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << text;
}

template <typename Fn>
auto as_usage(Fn &&fn) {
  try {
    return fn();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  } catch (const RangeError &e) {
    throw UsageError(e.what());
  }
}

int cmd_bounds(const BoundsConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto genera = as_usage([&] { return grid::parse_int_grid(cfg.genus); });
  std::string text;
  if (cfg.corollaries) {
    std::vector<bounds::CorollaryBounds> rows;
    as_usage([&] {
      for (int g : genera) rows.push_back(bounds::corollary_bounds(g, cfg.params));
      return 0;
    });
    if (cfg.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto &r : rows) j.push_back(report::to_json(r));
      text = j.dump(2) + "\n";
    } else {
      text = report::to_csv(rows);
    }
  } else {
    const auto lengths = as_usage([&] { return grid::parse_real_grid(cfg.length); });
    const auto rows = as_usage(
        [&] { return bounds::sweep(genera, lengths, Length(cfg.r_prime), cfg.slack); });
    for (const auto &r : rows) {
      if (r.exceeds_area_bound) {
        err << "warning: length " << report::format12(r.sys_length) << " exceeds 2 log g + "
            << report::format12(cfg.slack) << " for genus " << r.genus << "\n";
      }
    }
    text = cfg.format == "json" ? report::to_json(rows).dump(2) + "\n" : report::to_csv(rows);
  }
  emit(text, cfg.out, out);
  return kSuccess;
}

int cmd_verify(const VerifyConfig &cfg, std::ostream &out) {
  identities::SuiteConfig suite = identities::default_config();
  as_usage([&] {
    suite.identity_grid = grid::parse_real_grid(cfg.grid);
    if (!cfg.ineq_grid.empty()) suite.inequality_grid = grid::parse_real_grid(cfg.ineq_grid);
    suite.genera = grid::parse_int_grid(cfg.genus);
    return 0;
  });
  suite.perturbation = cfg.inject_fault ? 1.0 + 1e-6 : 1.0;
  suite.strict = cfg.strict;
  const auto result = as_usage([&] { return identities::run_suite(suite); });

  std::ostringstream ss;
  if (cfg.format == "json") {
    ss << report::to_json(result).dump(2) << "\n";
  } else {
    for (const auto &c : result.checks) {
      ss << (c.passed ? "PASS " : (c.gating ? "FAIL " : "WARN ")) << c.name << "  points="
         << c.points;
      switch (c.kind) {
      case identities::CheckKind::kIdentity:
        ss << "  max_rel_error=" << report::format12(c.worst)
           << "  tol=" << report::format12(c.tolerance);
        break;
      case identities::CheckKind::kInequality:
        ss << "  max_ratio=" << report::format12(c.worst);
        break;
      case identities::CheckKind::kMonotone:
        ss << "  violations=" << report::format12(c.worst);
        break;
      }
      if (!c.passed) ss << "  first_failing_length=" << report::format12(c.first_failure);
      ss << "\n";
    }
    ss << (result.passed() ? "verify: all gating checks passed\n"
                           : "verify: FAILED\n");
  }
  emit(ss.str(), cfg.out, out);
  return result.passed() ? kSuccess : kVerificationFailure;
}

int cmd_construct(const ConstructConfig &cfg, std::ostream &out, std::ostream &err) {
  const int sources = (cfg.n ? 1 : 0) + (cfg.npod ? 1 : 0) + (cfg.rotation ? 1 : 0);
  if (sources != 1) {
    throw UsageError("construct needs exactly one of --n, --npod, --rotation");
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0 / 6.0)) {
    throw UsageError("--epsilon must lie in (0, 1/6)");
  }

  if (cfg.npod) {
    const auto rep = as_usage([&] { return npod_systole_report(*cfg.npod); });
    if (cfg.format == "csv") {
      emit(report::matrix_csv(rep.loops, rep.matrix), cfg.out, out);
    } else {
      emit(report::to_json(rep).dump(2) + "\n", cfg.out, out);
    }
    if (!cfg.emit_rotation.empty()) rotation_io::save(cfg.emit_rotation, npod_surface(*cfg.npod));
    return kSuccess;
  }

  std::optional<RotationSystem> rs;
  report::RunInfo info{"", cfg.epsilon, cfg.seed};
  if (cfg.n) {
    embedding::SearchOptions opts;
    opts.seed = cfg.seed;
    opts.iterations = cfg.search_iterations;
    opts.restarts = cfg.search_restarts;
    rs = as_usage([&] { return embedding::complete_graph_embedding(*cfg.n, opts); });
    info.source = (embedding::catalog_embedding(*cfg.n) ? "catalog K_" : "search K_") +
                  std::to_string(*cfg.n);
  } else {
    try {
      rs = rotation_io::load(*cfg.rotation);
    } catch (const ValidationError &e) {
      throw UsageError(e.what());
    }
    info.source = "file " + *cfg.rotation;
  }
  if (!cfg.emit_rotation.empty()) rotation_io::save(cfg.emit_rotation, *rs);

  ConstructionOptions opts{cfg.epsilon, cfg.seed, true};
  ConstructionReport rep;
  try {
    rep = analyze(*rs, opts);
  } catch (const ValidationError &e) {
    throw UsageError(e.what());
  }
  for (const auto &w : rep.warnings) err << "warning: " << w << "\n";
  if (cfg.format == "csv") {
    emit(report::matrix_csv(rep.qualifying, *rep.matrix), cfg.out, out);
  } else {
    emit(report::to_json(rep, info).dump(2) + "\n", cfg.out, out);
  }
  return rep.intersections.connected ? kSuccess : kPreconditionFailure;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Systole bounds and complete-graph systole constructions", "systolic"};
  app.require_subcommand(1);

  BoundsConfig bcfg;
  auto *bounds_cmd = app.add_subcommand("bounds", "Upper-bound quantities per (genus, length)");
  bounds_cmd->add_option("--genus", bcfg.genus, "Genus grid: g, a..b, a..b:step, lists")
      ->capture_default_str();
  bounds_cmd->add_option("--length", bcfg.length, "Systole length grid: x, a..b:step, a..b:logN")
      ->capture_default_str();
  bounds_cmd->add_option("--rprime", bcfg.r_prime, "R' of the per-ball estimate")
      ->capture_default_str();
  bounds_cmd->add_option("--slack", bcfg.slack, "Warning slack C in 2 log g + C")
      ->capture_default_str();
  bounds_cmd->add_option("--format", bcfg.format)->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bounds_cmd->add_option("--out", bcfg.out, "Output file (default stdout)");
  bounds_cmd->add_flag("--corollaries", bcfg.corollaries,
                       "Per-genus corollary and conjecture comparison table");
  bounds_cmd->add_option("--A", bcfg.params.A, "Constant A of the systole-length conjecture")
      ->capture_default_str();
  bounds_cmd->add_option("--B", bcfg.params.B, "Constant B of the systole-count conjecture")
      ->capture_default_str();
  bounds_cmd->add_option("--U", bcfg.params.U, "Constant U of the sub-quadratic bound")
      ->capture_default_str();

  VerifyConfig vcfg;
  auto *verify_cmd = app.add_subcommand("verify", "Run the identity and inequality suite");
  verify_cmd->add_option("--grid", vcfg.grid, "Length grid for identities")->capture_default_str();
  verify_cmd->add_option("--ineq-grid", vcfg.ineq_grid,
                         "Length grid for inequalities (default 200 points on [2 asinh 1, 30])");
  verify_cmd->add_option("--genus", vcfg.genus, "Genus grid for inequalities")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-fault", vcfg.inject_fault,
                       "Perturb every checked quantity by a factor 1 + 1e-6");
  verify_cmd->add_flag("--strict", vcfg.strict,
                       "Treat the composite-vs-effective comparison as gating");
  verify_cmd->add_option("--format", vcfg.format)->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", vcfg.out, "Output file (default stdout)");

  ConstructConfig ccfg;
  auto *construct_cmd = app.add_subcommand("construct", "Qualifying-cycle construction report");
  construct_cmd->add_option("--n", ccfg.n, "Complete graph K_n (catalog or search)");
  construct_cmd->add_option("--npod", ccfg.npod, "Single ribbon 4m-pod with opposite pairing");
  construct_cmd->add_option("--rotation", ccfg.rotation, "Rotation-system file");
  construct_cmd->add_option("--epsilon", ccfg.epsilon, "Ribbon width, in (0, 1/6)")
      ->capture_default_str();
  construct_cmd->add_option("--seed", ccfg.seed, "Seed for search and initial lengths")
      ->capture_default_str();
  construct_cmd->add_option("--format", ccfg.format)->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  construct_cmd->add_option("--out", ccfg.out, "Output file (default stdout)");
  construct_cmd->add_option("--emit-rotation", ccfg.emit_rotation,
                            "Also write the embedding in rotation-system format");
  construct_cmd->add_option("--search-iterations", ccfg.search_iterations)->capture_default_str();
  construct_cmd->add_option("--search-restarts", ccfg.search_restarts)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(bcfg, out, err);
    if (*verify_cmd) return cmd_verify(vcfg, out);
    return cmd_construct(ccfg, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SearchError &e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const UnsupportedError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

} // namespace systolic::cli
