#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ortho/ensemble.hpp"
#include "ortho/exact.hpp"
#include "ortho/motion.hpp"
#include "ortho/report.hpp"
#include "ortho/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  double at(int i) const {
    return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
};

GridAxis parse_grid(const std::string& text) {
  GridAxis g;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw CLI::ValidationError("grid", "expected a:b:n");
  }
  g.lo = std::stod(text.substr(0, c1));
  g.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  g.steps = std::stoi(text.substr(c2 + 1));
  if (g.steps < 2 || !(g.hi > g.lo)) {
    throw CLI::ValidationError("grid", "need a < b and n >= 2");
  }
  return g;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ORTHOMOTION_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 42;
}

// Output sink: file or stdout ("-").
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") {
      os_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) {
      throw std::runtime_error("cannot open output file: " + path);
    }
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (file_ && !*file_) {
      throw std::runtime_error("write failure on output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

struct CommonParams {
  double lambda = 1.0;
  double p = 0.5;
  double c = 1.0;
  double t = 1.0;
  std::uint64_t seed = default_seed();
  std::string out = "-";

  ortho::ModelParams model() const { return {lambda, p, c}; }
};

void add_common(CLI::App* cmd, CommonParams& cp) {
  cmd->add_option("--lambda", cp.lambda, "Poisson switch intensity");
  cmd->add_option("--p", cp.p, "counterclockwise probability from horizontal");
  cmd->add_option("--c", cp.c, "speed");
  cmd->add_option("--t", cp.t, "time horizon");
  cmd->add_option("--seed", cp.seed,
                  "rng seed (default from ORTHOMOTION_SEED or 42)");
  cmd->add_option("--out", cp.out, "output path, - for stdout");
}

int cmd_simulate(const CommonParams& cp, std::uint64_t n_paths) {
  const ortho::ModelParams m = cp.model();
  ortho::validate(m);
  if (!(cp.t > 0.0) || n_paths == 0) {
    throw std::domain_error("simulate: need t > 0 and n-paths >= 1");
  }
  Sink sink(cp.out);
  ortho::write_path_csv_header(sink.stream());

  std::array<std::int64_t, 4> side_counts{};
  std::array<std::int64_t, 4> vertex_counts{};
  double occ_sum = 0.0, occ_sq = 0.0;
  ortho::PathSample path;
  for (std::uint64_t i = 0; i < n_paths; ++i) {
    ortho::RngStream rng(cp.seed, i);
    ortho::sample_path_into(m, cp.t, rng, path);
    ortho::append_path_csv(sink.stream(), path, i);
    const auto cls = ortho::classify_boundary(path);
    if (cls.kind == ortho::BoundaryClass::side) ++side_counts[cls.index];
    if (cls.kind == ortho::BoundaryClass::vertex) ++vertex_counts[cls.index];
    const double T = ortho::occupation_vertical(path);
    occ_sum += T;
    occ_sq += T * T;
  }
  sink.finish();

  const double n = static_cast<double>(n_paths);
  const double occ_mean = occ_sum / n;
  json summary;
  summary["command"] = "simulate";
  summary["lambda"] = cp.lambda;
  summary["p"] = cp.p;
  summary["c"] = cp.c;
  summary["t"] = cp.t;
  summary["n_paths"] = n_paths;
  summary["seed"] = cp.seed;
  json sides = json::array(), vertices = json::array();
  for (int k = 0; k < 4; ++k) {
    sides.push_back(static_cast<double>(side_counts[k]) / n);
    vertices.push_back(static_cast<double>(vertex_counts[k]) / n);
  }
  summary["side_fractions"] = sides;
  summary["vertex_fractions"] = vertices;
  summary["occupation_mean"] = occ_mean;
  summary["occupation_variance"] = occ_sq / n - occ_mean * occ_mean;
  std::cout << summary.dump() << "\n";
  return 0;
}

struct DensityConfig {
  std::string law;
  std::string variant = "paper";
  int side = 0;
  std::string format = "csv";
  std::optional<GridAxis> gx, gy;
};

int cmd_density(const CommonParams& cp, const DensityConfig& dc) {
  const ortho::ModelParams m = cp.model();
  const double ct = cp.c * cp.t;
  struct Point {
    double a;
    double b;
    std::optional<double> value;
    std::optional<double> im;  // cf only
  };
  std::vector<Point> points;
  json atoms;
  bool two_axis = false;
  bool is_cf = false;
  std::size_t in_support = 0;

  if (dc.law == "interior" || dc.law == "hydro" || dc.law == "cf") {
    if (!dc.gx || !dc.gy) {
      throw CLI::ValidationError("density", dc.law + " needs --grid-x and --grid-y");
    }
    two_axis = true;
  } else if (dc.law == "boundary" || dc.law == "occupation") {
    if (!dc.gx) {
      throw CLI::ValidationError("density", dc.law + " needs --grid-x");
    }
  } else {
    throw CLI::ValidationError("density", "unknown law " + dc.law);
  }

  const ortho::OccupationVariant variant =
      dc.variant == "symmetrized" ? ortho::OccupationVariant::symmetrized
                                  : ortho::OccupationVariant::paper;
  if (dc.variant != "paper" && dc.variant != "symmetrized") {
    throw CLI::ValidationError("density", "unknown variant " + dc.variant);
  }

  if (dc.law == "interior") {
    ortho::validate(m);
    for (int i = 0; i < dc.gx->steps; ++i) {
      for (int j = 0; j < dc.gy->steps; ++j) {
        const double x = dc.gx->at(i), y = dc.gy->at(j);
        Point pt{x, y, std::nullopt, std::nullopt};
        if (std::abs(x + y) < ct && std::abs(x - y) < ct) {
          pt.value = ortho::interior_density(m, x, y, cp.t);
          ++in_support;
        }
        points.push_back(pt);
      }
    }
  } else if (dc.law == "hydro") {
    for (int i = 0; i < dc.gx->steps; ++i) {
      for (int j = 0; j < dc.gy->steps; ++j) {
        const double x = dc.gx->at(i), y = dc.gy->at(j);
        points.push_back(
            {x, y, ortho::hydro_density(cp.p, x, y, cp.t), std::nullopt});
        ++in_support;
      }
    }
  } else if (dc.law == "cf") {
    ortho::validate(m);
    is_cf = true;
    for (int i = 0; i < dc.gx->steps; ++i) {
      for (int j = 0; j < dc.gy->steps; ++j) {
        const double a = dc.gx->at(i), b = dc.gy->at(j);
        const auto v = ortho::joint_cf(m, a, b, cp.t);
        points.push_back({a, b, v.real(), v.imag()});
        ++in_support;
      }
    }
  } else if (dc.law == "boundary") {
    ortho::validate(m);
    if (dc.side < 0 || dc.side > 3) {
      throw CLI::ValidationError("density", "--side must be in 0..3");
    }
    for (int i = 0; i < dc.gx->steps; ++i) {
      const double eta = dc.gx->at(i);
      Point pt{eta, 0.0, std::nullopt, std::nullopt};
      if (std::abs(eta) < ct) {
        pt.value = ortho::boundary_density(m, eta, cp.t, dc.side);
        ++in_support;
      }
      points.push_back(pt);
    }
    atoms["vertex_plus"] = ortho::vertex_mass(m, cp.t);
    atoms["vertex_minus"] = ortho::vertex_mass(m, cp.t);
    atoms["vertex_locations"] = {ct, -ct};
  } else {  // occupation
    const auto law = ortho::occupation_law(cp.lambda, cp.t, variant);
    for (int i = 0; i < dc.gx->steps; ++i) {
      const double s = dc.gx->at(i);
      Point pt{s, 0.0, std::nullopt, std::nullopt};
      if (s > 0.0 && s < cp.t) {
        pt.value = law.density(s);
        ++in_support;
      }
      points.push_back(pt);
    }
    atoms["at_zero"] = law.atom_at_zero();
    atoms["at_t"] = law.atom_at_t();
  }

  if (in_support == 0) {
    throw CLI::ValidationError("density", "grid entirely outside the support");
  }

  Sink sink(cp.out);
  if (dc.format == "json") {
    json doc;
    doc["law"] = dc.law;
    doc["lambda"] = cp.lambda;
    doc["p"] = cp.p;
    doc["c"] = cp.c;
    doc["t"] = cp.t;
    if (dc.law == "occupation") doc["variant"] = dc.variant;
    if (dc.law == "boundary") doc["side"] = dc.side;
    json rows = json::array();
    for (const auto& pt : points) {
      json row;
      if (two_axis) {
        row[is_cf ? "alpha" : "x"] = pt.a;
        row[is_cf ? "beta" : "y"] = pt.b;
      } else {
        row["s"] = pt.a;
      }
      if (is_cf) {
        row["re"] = *pt.value;
        row["im"] = *pt.im;
      } else if (pt.value) {
        row[two_axis ? "f" : "h"] = *pt.value;
      } else {
        row[two_axis ? "f" : "h"] = nullptr;
      }
      rows.push_back(row);
    }
    doc["points"] = rows;
    if (!atoms.is_null()) doc["atoms"] = atoms;
    sink.stream() << doc.dump() << "\n";
  } else if (dc.format == "csv") {
    auto& os = sink.stream();
    if (is_cf) {
      os << "alpha,beta,re,im\n";
      for (const auto& pt : points) {
        os << ortho::format_g17(pt.a) << ',' << ortho::format_g17(pt.b) << ','
           << ortho::format_g17(*pt.value) << ',' << ortho::format_g17(*pt.im)
           << "\n";
      }
    } else if (two_axis) {
      os << "x,y,f\n";
      for (const auto& pt : points) {
        os << ortho::format_g17(pt.a) << ',' << ortho::format_g17(pt.b) << ',';
        if (pt.value) os << ortho::format_g17(*pt.value);
        os << "\n";
      }
    } else {
      os << "s,h\n";
      for (const auto& pt : points) {
        os << ortho::format_g17(pt.a) << ',';
        if (pt.value) os << ortho::format_g17(*pt.value);
        os << "\n";
      }
    }
  } else {
    throw CLI::ValidationError("density", "unknown format " + dc.format);
  }
  sink.finish();
  return 0;
}

int cmd_verify(const CommonParams& cp, std::uint64_t n_paths, bool quick) {
  ortho::VerifyConfig cfg;
  cfg.m = cp.model();
  ortho::validate(cfg.m);
  cfg.t = cp.t;
  cfg.n_paths = n_paths;
  cfg.seed = cp.seed;
  cfg.quick = quick;

  const ortho::VerifySuiteResult result = ortho::run_verify_suite(cfg);

  Sink sink(cp.out);
  for (const auto& r : result.checks) {
    sink.stream() << ortho::to_json_line(r) << "\n";
  }
  for (const auto& r : result.adjudication) {
    sink.stream() << ortho::to_json_line(r) << "\n";
  }
  const int failed = ortho::count_failures(result.checks);
  json summary;
  summary["summary"] = "verify";
  summary["checks"] = result.checks.size();
  summary["failed"] = failed;
  summary["adjudication_records"] = result.adjudication.size();
  summary["passed_all"] = (failed == 0);
  sink.stream() << summary.dump() << "\n";
  sink.finish();
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "planar random motion with orthogonal directions: exact laws, "
      "event-driven simulation, and cross-verification"};
  app.require_subcommand(1);

  CommonParams cp;
  std::uint64_t n_paths = 100;
  bool quick = false;
  DensityConfig dc;
  std::string grid_x_text, grid_y_text;

  CLI::App* sim = app.add_subcommand("simulate", "sample paths to CSV");
  add_common(sim, cp);
  sim->add_option("--n-paths", n_paths, "number of paths");

  CLI::App* den =
      app.add_subcommand("density", "evaluate a closed-form law on a grid");
  add_common(den, cp);
  den->add_option("--law", dc.law,
                  "interior | boundary | occupation | hydro | cf")
      ->required();
  den->add_option("--grid-x", grid_x_text, "a:b:n grid for the first axis");
  den->add_option("--grid-y", grid_y_text, "a:b:n grid for the second axis");
  den->add_option("--variant", dc.variant,
                  "occupation density variant: paper | symmetrized");
  den->add_option("--side", dc.side, "boundary side index 0..3");
  den->add_option("--format", dc.format, "csv | json");

  CLI::App* ver = app.add_subcommand(
      "verify", "run the verification suite, JSON lines per check");
  add_common(ver, cp);
  ver->add_option("--n-paths", n_paths, "Monte Carlo paths per check")
      ->default_val(std::uint64_t{1000000});
  ver->add_flag("--quick", quick, "cap ensembles at 1e5 paths");

  try {
    app.parse(argc, argv);
    if (sim->parsed()) return cmd_simulate(cp, n_paths);
    if (den->parsed()) {
      if (!grid_x_text.empty()) dc.gx = parse_grid(grid_x_text);
      if (!grid_y_text.empty()) dc.gy = parse_grid(grid_y_text);
      return cmd_density(cp, dc);
    }
    if (ver->parsed()) return cmd_verify(cp, n_paths, quick);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
