#include "fracstab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fracstab/complex.hpp"
#include "fracstab/errors.hpp"
#include "fracstab/order.hpp"
#include "fracstab/solver.hpp"
#include "fracstab/stability.hpp"
#include "fracstab/systems.hpp"

namespace fracstab::cli {
namespace {

using nlohmann::json;

/// Invalid user input; `field` names the flag or config key at fault.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Raw command parameters as strings (flags) or JSON (config file); validated
// per command after the config file has been merged in.
struct RunConfig {
  std::optional<json> alpha;
  std::optional<json> lambda;
  std::optional<json> matrix;  // path string or inline array
  std::optional<std::string> system;
  std::map<std::string, json> params;
  std::optional<json> x0;
  std::optional<long long> steps;
  std::optional<long long> samples;
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::optional<std::string> summary;
  std::optional<double> cutoff;
  std::optional<double> radius;
  bool roots = false;
};

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) {
    const auto z = parse_complex(j.get<std::string>());
    if (!z) throw UsageError(field, "cannot parse complex literal '" + j.get<std::string>() + "'");
    return *z;
  }
  if (j.is_object() && j.contains("re")) {
    const json& re = j.at("re");
    const json im = j.contains("im") ? j.at("im") : json(0.0);
    if (!re.is_number() || !im.is_number()) throw UsageError(field, "re/im must be numbers");
    return {re.get<double>(), im.get<double>()};
  }
  throw UsageError(field, "expected a complex value (number, \"a+bi\" or {\"re\":..,\"im\":..})");
}

ComplexOrder order_from(const RunConfig& cfg) {
  if (!cfg.alpha) throw UsageError("alpha", "missing required order --alpha");
  const Complex a = complex_from_json(*cfg.alpha, "alpha");
  const auto order = ComplexOrder::try_make(a.real(), a.imag());
  if (!order) throw UsageError("alpha", "Re(alpha) = " + format_real(a.real()) + " must lie in (0, 1]");
  return *order;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  const json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) throw UsageError(field, "matrix must be a non-empty array of rows");
  const std::size_t n = rows.size();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw UsageError(field, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_from_json(rows[r][c], field);
  }
  return m;
}

ComplexMatrix matrix_from(const RunConfig& cfg) {
  const json& spec = *cfg.matrix;
  if (!spec.is_string()) return matrix_from_json(spec, "matrix");
  const std::string path = spec.get<std::string>();
  std::ifstream in(path);
  if (!in) throw UsageError("matrix", "cannot open matrix file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError("matrix", std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc, "matrix");
}

ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    const auto v = parse_complex_list(j.get<std::string>());
    if (!v) throw UsageError(field, "cannot parse complex list '" + j.get<std::string>() + "'");
    return *v;
  }
  if (j.is_array()) {
    ComplexVector v;
    for (const auto& e : j) v.push_back(complex_from_json(e, field));
    if (v.empty()) throw UsageError(field, "empty vector");
    return v;
  }
  return {complex_from_json(j, field)};
}

std::size_t positive_count(const std::optional<long long>& value, const std::string& field, long long minimum) {
  if (!value) throw UsageError(field, "missing required value");
  if (*value < minimum) throw UsageError(field, "must be >= " + std::to_string(minimum));
  return static_cast<std::size_t>(*value);
}

json evidence_json(const Evidence& evidence) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, WindingEvidence>) {
          return {{"kind", "winding"}, {"value", e.winding}};
        } else if constexpr (std::is_same_v<T, RootCountEvidence>) {
          return {{"kind", "roots_outside"}, {"value", e.outside}};
        } else if constexpr (std::is_same_v<T, NonSimpleCurveEvidence>) {
          return {{"kind", "non_simple_curve"}};
        } else {
          return {{"kind", "on_curve"}, {"distance", e.distance}};
        }
      },
      evidence);
}

std::string reason_text(const StabilityVerdict& v) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, WindingEvidence>) {
          return "winding number " + std::to_string(e.winding) + " around the boundary curve";
        } else if constexpr (std::is_same_v<T, RootCountEvidence>) {
          return std::to_string(e.outside) + " characteristic roots outside the unit circle";
        } else if constexpr (std::is_same_v<T, NonSimpleCurveEvidence>) {
          return "non-simple curve";
        } else {
          return "on the boundary curve";
        }
      },
      v.evidence);
}

json verdict_json(const StabilityVerdict& v) {
  return {{"verdict", std::string(to_string(v.status))},
          {"evidence", evidence_json(v.evidence)},
          {"reason", reason_text(v)},
          {"tolerance_used", v.tolerance_used}};
}

int exit_code_for(Status status) {
  switch (status) {
    case Status::Stable:
      return kStable;
    case Status::Unstable:
      return kUnstable;
    case Status::Boundary:
      return kIndeterminate;
  }
  return kIndeterminate;
}

// Writes to the configured output file, or `out` when none is configured.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.output || *cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output, std::ios::binary);
  if (!file) throw UsageError("output", "cannot write '" + *cfg.output + "'");
  file << text;
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  const ComplexOrder order = order_from(cfg);
  const std::size_t n = cfg.samples ? positive_count(cfg.samples, "samples", 64) : 4096;
  const std::string format = cfg.format.value_or("csv");
  if (format != "csv" && format != "json") throw UsageError("format", "must be 'csv' or 'json'");

  const BoundaryCurve curve = boundary_curve(order, n);
  std::ostringstream text;
  if (format == "csv") {
    text << "t,re,im\n";
    for (const auto& s : curve.samples) {
      text << format_real(s.t) << ',' << format_real(s.point.real()) << ',' << format_real(s.point.imag()) << '\n';
    }
  } else {
    json doc;
    doc["order"] = complex_json(order.value());
    doc["is_simple"] = curve.is_simple;
    doc["is_simple_criterion"] = is_simple_order(order);
    doc["signed_area"] = signed_area(curve);
    const auto crossing = curve.samples.size() >= 512 ? detect_self_intersection(curve) : std::nullopt;
    doc["self_intersection"] = crossing ? json{{"t1", crossing->first}, {"t2", crossing->second}} : json(nullptr);
    json samples = json::array();
    for (const auto& s : curve.samples) samples.push_back({s.t, s.point.real(), s.point.imag()});
    doc["samples"] = std::move(samples);
    text << doc.dump(2) << '\n';
  }
  emit(cfg, out, text.str());
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const ComplexOrder order = order_from(cfg);
  if (cfg.lambda.has_value() == cfg.matrix.has_value()) {
    throw UsageError(cfg.lambda ? "matrix" : "lambda", "exactly one of --lambda or --matrix is required");
  }
  json doc;
  doc["order"] = complex_json(order.value());
  StabilityVerdict verdict{Status::Boundary, OnCurveEvidence{0.0}, 0.0};
  try {
    if (cfg.lambda) {
      const Complex lambda = complex_from_json(*cfg.lambda, "lambda");
      verdict = classify_lambda(order, lambda);
      doc["lambda"] = complex_json(lambda);
      if (cfg.roots) {
        const double radius = cfg.radius.value_or(1.0 + 1e-6);
        doc["roots_outside"] = count_roots_outside(order, lambda, radius);
      }
    } else {
      const ComplexMatrix a = matrix_from(cfg);
      const MatrixVerdict mv = classify_matrix_detailed(order, a);
      verdict = mv.overall;
      json eig = json::array();
      for (const auto& ev : mv.per_eigenvalue) {
        json e = verdict_json(ev.verdict);
        e["eigenvalue"] = complex_json(ev.eigenvalue);
        eig.push_back(std::move(e));
      }
      doc["eigenvalues"] = std::move(eig);
    }
  } catch (const IndeterminateError& e) {
    doc["verdict"] = "indeterminate";
    doc["reason"] = e.what();
    emit(cfg, out, doc.dump(2) + "\n");
    return kIndeterminate;
  }
  doc.update(verdict_json(verdict));
  emit(cfg, out, doc.dump(2) + "\n");
  return exit_code_for(verdict.status);
}

SystemParams params_from(const RunConfig& cfg) {
  SystemParams params;
  for (const auto& [key, value] : cfg.params) params[key] = complex_from_json(value, "param." + key);
  return params;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const ComplexOrder order = order_from(cfg);
  if (!cfg.system) throw UsageError("system", "missing required --system");
  if (!cfg.x0) throw UsageError("x0", "missing required --x0");
  const std::size_t steps = positive_count(cfg.steps, "steps", 0);
  SolverOptions options;
  if (cfg.cutoff) {
    if (!(*cfg.cutoff > 0.0)) throw UsageError("cutoff", "must be positive");
    options.divergence_cutoff = *cfg.cutoff;
  }

  std::optional<SystemEntry> system;
  try {
    system = make_system(*cfg.system, params_from(cfg));
  } catch (const std::invalid_argument& e) {
    throw UsageError("param", e.what());
  }
  if (!system) throw UsageError("system", "unknown system '" + *cfg.system + "'");
  const ComplexVector x0 = vector_from_json(*cfg.x0, "x0");
  if (x0.size() != system->map.dimension) {
    throw UsageError("x0", "expected " + std::to_string(system->map.dimension) + " components");
  }

  const Trajectory traj = simulate_nonlinear(order, system->map, x0, steps, options);

  std::ostringstream csv;
  csv << 't';
  for (std::size_t c = 1; c <= x0.size(); ++c) csv << ",re_x" << c << ",im_x" << c << ",abs_x" << c;
  csv << '\n';
  for (std::size_t t = 0; t < traj.states.size(); ++t) {
    csv << t;
    for (const Complex& z : traj.states[t]) {
      csv << ',' << format_real(z.real()) << ',' << format_real(z.imag()) << ',' << format_real(std::abs(z));
    }
    csv << '\n';
  }
  emit(cfg, out, csv.str());

  std::optional<std::string> summary_path = cfg.summary;
  if (!summary_path && cfg.output && *cfg.output != "-") summary_path = *cfg.output + ".summary.json";
  if (summary_path) {
    json doc;
    doc["order"] = complex_json(order.value());
    doc["system"] = system->name;
    json params = json::object();
    for (const auto& [key, value] : params_from(cfg)) params[key] = complex_json(value);
    doc["params"] = std::move(params);
    json jx0 = json::array();
    for (const Complex& z : x0) jx0.push_back(complex_json(z));
    doc["x0"] = std::move(jx0);
    doc["steps"] = steps;
    doc["diverged_at"] = traj.diverged_at ? json(*traj.diverged_at) : json(nullptr);
    doc["final_norm"] = norm2(traj.states.back());
    json equilibria = json::array();
    for (const auto& eq : system->equilibria) {
      json e;
      json point = json::array();
      for (const Complex& z : eq) point.push_back(complex_json(z));
      e["point"] = std::move(point);
      try {
        e.update(verdict_json(equilibrium_verdict(order, system->map, eq)));
      } catch (const std::exception& ex) {
        e["verdict"] = "indeterminate";
        e["reason"] = ex.what();
      }
      equilibria.push_back(std::move(e));
    }
    doc["equilibria"] = std::move(equilibria);
    std::ofstream file(*summary_path, std::ios::binary);
    if (!file) throw UsageError("summary", "cannot write '" + *summary_path + "'");
    file << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_logistic_intervals(const RunConfig& cfg, std::ostream& out) {
  const ComplexOrder order = order_from(cfg);
  json doc;
  doc["order"] = complex_json(order.value());
  json x1 = json::array();
  json x2 = json::array();
  const BoundaryCurve curve = boundary_curve(order);
  if (!curve.is_simple) {
    doc["status"] = "unstable for all eigenvalues";
  } else {
    doc["status"] = "ok";
    const auto intervals = real_axis_intervals(curve);
    for (const auto& iv : intervals) x1.push_back({iv.lo, iv.hi});
    // f'(x2*) = 2 - lambda, so x2* is stable for lambda in 2 - (x1* set).
    for (auto it = intervals.rbegin(); it != intervals.rend(); ++it) x2.push_back({2.0 - it->hi, 2.0 - it->lo});
  }
  doc["intervals"] = {{"x1_star", std::move(x1)}, {"x2_star", std::move(x2)}};
  emit(cfg, out, doc.dump(2) + "\n");
  return kOk;
}

void merge_config(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config", "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config", "top level must be an object");

  auto integer = [](const json& j, const std::string& key) {
    if (!j.is_number_integer()) throw UsageError(key, "must be an integer");
    return j.get<long long>();
  };
  auto real = [](const json& j, const std::string& key) {
    if (!j.is_number()) throw UsageError(key, "must be a number");
    return j.get<double>();
  };
  auto text = [](const json& j, const std::string& key) {
    if (!j.is_string()) throw UsageError(key, "must be a string");
    return j.get<std::string>();
  };

  for (const auto& [key, value] : doc.items()) {
    if (key == "alpha") {
      cfg.alpha = value;
    } else if (key == "lambda") {
      cfg.lambda = value;
    } else if (key == "matrix") {
      cfg.matrix = value;
    } else if (key == "system") {
      cfg.system = text(value, key);
    } else if (key == "params") {
      if (!value.is_object()) throw UsageError(key, "must be an object");
      for (const auto& [pk, pv] : value.items()) cfg.params[pk] = pv;
    } else if (key == "x0") {
      cfg.x0 = value;
    } else if (key == "steps") {
      cfg.steps = integer(value, key);
    } else if (key == "samples") {
      cfg.samples = integer(value, key);
    } else if (key == "format") {
      cfg.format = text(value, key);
    } else if (key == "output") {
      cfg.output = text(value, key);
    } else if (key == "summary") {
      cfg.summary = text(value, key);
    } else if (key == "cutoff") {
      cfg.cutoff = real(value, key);
    } else if (key == "radius") {
      cfg.radius = real(value, key);
    } else if (key == "roots") {
      if (!value.is_boolean()) throw UsageError(key, "must be a boolean");
      cfg.roots = value.get<bool>();
    } else {
      throw UsageError(key, "unknown config key");
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability analysis and simulation of complex-order fractional difference equations", "fracstab"};
  app.require_subcommand(1);

  std::string alpha, lambda, matrix, system, x0, format, output, summary, config;
  std::vector<std::string> params;
  long long steps = 0, samples = 0;
  double cutoff = 0.0, radius = 0.0;
  bool roots = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Order alpha = u+vi, Re(alpha) in (0, 1]");
    cmd->add_option("--config", config, "JSON file whose keys override the flags");
    cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  };

  CLI::App* boundary = app.add_subcommand("boundary", "Sample the stability boundary curve");
  add_common(boundary);
  boundary->add_option("--samples", samples, "Uniform samples over [0, 2pi] (>= 64)");
  boundary->add_option("--format", format, "csv or json");

  CLI::App* check = app.add_subcommand("check", "Classify an eigenvalue or a matrix");
  add_common(check);
  check->add_option("--lambda", lambda, "Eigenvalue a+bi");
  check->add_option("--matrix", matrix, "JSON file with a square complex matrix");
  check->add_flag("--roots", roots, "Also count characteristic roots outside |z| = radius");
  check->add_option("--radius", radius, "Inner contour radius for --roots (default 1+1e-6)");

  CLI::App* simulate = app.add_subcommand("simulate", "Simulate a built-in system");
  add_common(simulate);
  simulate->add_option("--system", system, "linear | logistic | coupled2d");
  simulate->add_option("--param", params, "Parameter key=value (repeatable)");
  simulate->add_option("--x0", x0, "Initial state, comma separated complex literals");
  simulate->add_option("--steps", steps, "Number of time steps");
  simulate->add_option("--cutoff", cutoff, "Divergence cutoff on ||x|| (default 1e10)");
  simulate->add_option("--summary", summary, "JSON summary path (default: <output>.summary.json)");

  CLI::App* intervals = app.add_subcommand("logistic-intervals", "Stable lambda intervals of the logistic map");
  add_common(intervals);

  std::vector<const char*> argv{"fracstab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig cfg;
    auto given = [](CLI::App* cmd, const char* name) { return cmd->count(name) > 0; };
    CLI::App* cmd = app.get_subcommands().front();
    if (given(cmd, "--alpha")) cfg.alpha = alpha;
    if (given(cmd, "--output")) cfg.output = output;
    if (cmd == boundary) {
      if (given(cmd, "--samples")) cfg.samples = samples;
      if (given(cmd, "--format")) cfg.format = format;
    } else if (cmd == check) {
      if (given(cmd, "--lambda")) cfg.lambda = lambda;
      if (given(cmd, "--matrix")) cfg.matrix = matrix;
      if (given(cmd, "--radius")) cfg.radius = radius;
      cfg.roots = roots;
    } else if (cmd == simulate) {
      if (given(cmd, "--system")) cfg.system = system;
      if (given(cmd, "--x0")) cfg.x0 = x0;
      if (given(cmd, "--steps")) cfg.steps = steps;
      if (given(cmd, "--cutoff")) cfg.cutoff = cutoff;
      if (given(cmd, "--summary")) cfg.summary = summary;
      for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("param", "expected key=value, got '" + p + "'");
        cfg.params[p.substr(0, eq)] = p.substr(eq + 1);
      }
    }
    if (given(cmd, "--config")) merge_config(cfg, config);

    if (cmd == boundary) return cmd_boundary(cfg, out);
    if (cmd == check) return cmd_check(cfg, out);
    if (cmd == simulate) return cmd_simulate(cfg, out);
    return cmd_logistic_intervals(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.field() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIndeterminate;
  }
}

}  // namespace fracstab::cli
