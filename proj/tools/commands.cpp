#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minlen/minlen.h"

namespace minlen::cli {
namespace {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  Table table;
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  std::string verdict = "ok";
};

// Thrown by command bodies; carries the exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

}  // namespace

int exit_code_for(minlen_status status) {
  switch (status) {
    case MINLEN_ERR_EVALUATION:
    case MINLEN_ERR_CONVERGENCE:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

namespace {

void check(minlen_status status) {
  if (status != MINLEN_OK) {
    throw CommandError(exit_code_for(status),
                       std::string(minlen_status_string(status)) + ": " + minlen_last_error());
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw CommandError(kExitValidation, message);
}

struct ParamsDeleter {
  void operator()(minlen_params* p) const { minlen_params_destroy(p); }
};
struct ExpansionDeleter {
  void operator()(minlen_expansion* e) const { minlen_expansion_destroy(e); }
};
using ParamsHandle = std::unique_ptr<minlen_params, ParamsDeleter>;
using ExpansionHandle = std::unique_ptr<minlen_expansion, ExpansionDeleter>;

double to_bohr(const RunConfig& config, double delta_x) {
  if (config.atomic_units) {
    require(delta_x >= 0.0, "--delta-x-min must be non-negative");
    return delta_x;
  }
  double bohr = 0.0;
  check(minlen_length_to_atomic(delta_x, &bohr));
  return bohr;
}

double to_meters(const RunConfig& config, double delta_x) {
  if (!config.atomic_units) return delta_x;
  double meters = 0.0;
  check(minlen_length_from_atomic(delta_x, &meters));
  return meters;
}

ParamsHandle make_params(const RunConfig& config, double delta_x, double eta) {
  minlen_params* raw = nullptr;
  check(minlen_params_from_minimal_length(to_bohr(config, delta_x), eta, &raw));
  return ParamsHandle(raw);
}

double bohr_magneton_au() {
  minlen_constants c{};
  minlen_get_constants(&c);
  return c.bohr_magneton_au;
}

// ---- validation -----------------------------------------------------------

void validate_common(const RunConfig& config) {
  require(config.format == "csv" || config.format == "json", "--format must be csv or json");
  require(!config.delta_x_min.empty(), "--delta-x-min needs at least one value");
  for (double dx : config.delta_x_min) {
    require(std::isfinite(dx) && dx >= 0.0, "--delta-x-min must be a non-negative length");
  }
  require(!config.eta.empty(), "--eta needs at least one value");
  for (double eta : config.eta) {
    require(eta >= 1.0 / 3.0 && eta <= 1.0, "--eta must lie in [1/3, 1] (use 1/3 for the lower endpoint)");
  }
  require(config.grid_nodes == 0 || (config.grid_nodes >= 16 && config.grid_nodes <= 4096),
          "--grid-nodes must be between 16 and 4096");
  require(std::isfinite(config.epsilon_bohr) && config.epsilon_bohr > 0.0, "--epsilon-bohr must be positive");
}

int single_n(const RunConfig& config) {
  if (config.n.empty()) return 2;
  require(config.n.size() == 1, "this command takes a single --n value");
  return config.n.front();
}

double single(const std::vector<double>& values, const char* flag) {
  require(values.size() == 1, std::string("this command takes a single ") + flag + " value");
  return values.front();
}

void validate_state(int n, int l, int m) {
  require(n >= 1, "--n must be >= 1");
  require(l >= 0 && l <= n - 1, "--l must satisfy 0 <= l <= n-1");
  require(std::abs(m) <= l, "--m must satisfy |m| <= l");
}

// ---- output ---------------------------------------------------------------

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return csv_escape(v);
        }
      },
      cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void emit(const RunConfig& config, const std::string& command, const Report& report, std::ostream& out) {
  if (config.format == "csv") {
    if (config.header_timestamp) out << "# generated " << timestamp() << '\n';
    for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
      out << (i ? "," : "") << csv_escape(report.table.columns[i]);
    }
    out << '\n';
    for (const auto& row : report.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render_cell(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["command"] = command;
  if (config.header_timestamp) doc["generated"] = timestamp();
  doc["inputs"] = report.inputs;
  auto results = nlohmann::ordered_json::array();
  for (const auto& row : report.table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.table.columns[i]] = json_cell(row[i]);
    results.push_back(std::move(obj));
  }
  doc["results"] = std::move(results);
  doc["tolerances"] = report.tolerances;
  doc["verdict"] = report.verdict;
  out << doc.dump(2) << '\n';
}

template <typename Body>
int run(const RunConfig& config, const std::string& command, std::ostream& out, std::ostream& err, Body&& body) {
  try {
    validate_common(config);
    int status = kExitOk;
    Report report = body(status);
    if (config.out.empty()) {
      emit(config, command, report, out);
      return status;
    }
    std::ofstream file(config.out);
    if (!file) throw CommandError(kExitValidation, "cannot open output file " + config.out);
    emit(config, command, report, file);
    file.close();
    if (!file) throw CommandError(kExitValidation, "failed writing " + config.out);
    return status;
  } catch (const CommandError& e) {
    err << "minlen " << command << ": " << e.what() << '\n';
    return e.code;
  }
}

void add_row(Table& table, std::vector<Cell> row) { table.rows.push_back(std::move(row)); }

}  // namespace

double parse_number(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters in number: " + text);
    return value;
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  const double a = std::stod(num, &used);
  if (used != num.size()) throw std::invalid_argument("malformed fraction: " + text);
  const double b = std::stod(den, &used);
  if (used != den.size() || b == 0.0) throw std::invalid_argument("malformed fraction: " + text);
  return a / b;
}

int cmd_varsigma(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run(config, "varsigma", out, err, [&](int&) {
    const std::vector<int> ns = config.n.empty() ? std::vector<int>{2} : config.n;
    Report report;
    report.inputs["delta_x_min"] = config.delta_x_min;
    report.inputs["units"] = config.atomic_units ? "bohr" : "m";
    report.inputs["eta"] = config.eta;
    report.inputs["n"] = ns;
    report.table.columns = {"delta_x_min_m", "delta_x_min_bohr", "eta", "n", "varsigma"};
    for (double dx : config.delta_x_min) {
      for (double eta : config.eta) {
        for (int n : ns) {
          require(n >= 2, "--n must be >= 2 (the orbital moment vanishes for n = 1)");
          const double bohr = to_bohr(config, dx);
          double value = 0.0;
          check(minlen_varsigma(bohr, eta, n, &value));
          add_row(report.table, {to_meters(config, dx), bohr, eta, static_cast<long long>(n), value});
        }
      }
    }
    return report;
  });
}

int cmd_figure1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run(config, "figure1", out, err, [&](int&) {
    const std::vector<int> ns = config.n.empty() ? std::vector<int>{2, 3, 4} : config.n;
    const double dx = single(config.delta_x_min, "--delta-x-min");
    require(config.samples >= 2, "--samples must be >= 2");
    const double bohr = to_bohr(config, dx);
    Report report;
    report.inputs["delta_x_min"] = dx;
    report.inputs["units"] = config.atomic_units ? "bohr" : "m";
    report.inputs["n"] = ns;
    report.inputs["samples"] = config.samples;
    report.table.columns = {"eta"};
    for (int n : ns) {
      require(n >= 2, "--n must be >= 2 (the orbital moment vanishes for n = 1)");
      report.table.columns.push_back("varsigma_n" + std::to_string(n));
    }
    for (int i = 0; i < config.samples; ++i) {
      // Endpoints exactly 1/3 and 1.
      const double eta = i == 0                       ? 1.0 / 3.0
                         : i == config.samples - 1    ? 1.0
                                                      : 1.0 / 3.0 + (2.0 / 3.0) * i / (config.samples - 1);
      std::vector<Cell> row{eta};
      for (int n : ns) {
        double value = 0.0;
        check(minlen_varsigma(bohr, eta, n, &value));
        row.emplace_back(value);
      }
      add_row(report.table, std::move(row));
    }
    return report;
  });
}

int cmd_flux_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run(config, "flux-check", out, err, [&](int& status) {
    const int n = single_n(config);
    const int l = config.l;
    const int m = config.m;
    validate_state(n, l, m);
    require(m != 0, "flux-check needs m != 0 (the orbital moment of m = 0 states vanishes)");
    require(config.n_max > n, "--n-max must exceed --n");
    const double dx = single(config.delta_x_min, "--delta-x-min");
    const double eta = single(config.eta, "--eta");
    auto params = make_params(config, dx, eta);

    const double mu_b = bohr_magneton_au();
    double closed = 0.0;
    check(minlen_magnetic_moment_closed(n, m, params.get(), &closed));

    minlen_tube_spec spec{};
    minlen_tube_spec_default(&spec);
    if (config.grid_nodes > 0) spec.radial_nodes = config.grid_nodes;
    minlen_moment_result closed_report{};
    check(minlen_comparison_report(n, m, params.get(), config.epsilon_bohr, &closed_report));
    double numeric = 0.0;
    check(minlen_magnetic_moment_numeric(n, l, m, params.get(), nullptr, &spec, &numeric));

    minlen_expansion* raw = nullptr;
    check(minlen_expansion_create(n, l, m, params.get(), config.n_max, config.grid_nodes, &raw));
    ExpansionHandle expansion(raw);
    double cross = 0.0;
    check(minlen_cross_term_moment(n, l, m, params.get(), expansion.get(), &spec, &cross));

    // Deterministic sample of interior points.
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> radius(0.2, 3.0 * n * n);
    std::uniform_real_distribution<double> polar(0.05, std::numbers::pi - 0.05);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
    double divergence_max = 0.0;
    for (int i = 0; i < 64; ++i) {
      double div = 0.0;
      check(minlen_divergence_check(n, l, m, params.get(), radius(rng), polar(rng), azimuth(rng), 1e-5, &div));
      divergence_max = std::max(divergence_max, std::abs(div));
    }

    const double discrepancy = std::abs(numeric - closed) / std::abs(closed);
    const double cross_bohr = std::abs(cross) / mu_b;
    const bool pass = discrepancy < kMomentRelativeTolerance && cross_bohr < kCrossTermTolerance &&
                      divergence_max < kDivergenceTolerance;
    if (!pass) status = kExitNumerical;

    const double undeformed = -mu_b * m;
    Report report;
    report.inputs = {{"n", n}, {"l", l}, {"m", m}, {"delta_x_min", dx},
                     {"units", config.atomic_units ? "bohr" : "m"}, {"eta", eta}, {"n_max", config.n_max},
                     {"radial_nodes", spec.radial_nodes}, {"angular_nodes", spec.angular_nodes}};
    report.tolerances = {{"moment_relative", kMomentRelativeTolerance},
                         {"cross_term_bohr", kCrossTermTolerance},
                         {"divergence", kDivergenceTolerance}};
    report.verdict = pass ? "pass" : "fail";
    report.table.columns = {"quantity", "value"};
    add_row(report.table, {std::string("mu_closed_au"), closed});
    add_row(report.table, {std::string("mu_numeric_au"), numeric});
    add_row(report.table, {std::string("mu_closed_bohr"), closed / mu_b});
    add_row(report.table, {std::string("mu_numeric_bohr"), numeric / mu_b});
    add_row(report.table, {std::string("closed_correction"), closed_report.varsigma});
    add_row(report.table, {std::string("numeric_correction"), (numeric - undeformed) / undeformed});
    add_row(report.table, {std::string("relative_discrepancy"), discrepancy});
    add_row(report.table, {std::string("cross_term_bohr"), cross_bohr});
    add_row(report.table, {std::string("divergence_max"), divergence_max});
    add_row(report.table, {std::string("verdict"), report.verdict});
    return report;
  });
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run(config, "compare", out, err, [&](int&) {
    const int n = single_n(config);
    const int m = config.m;
    require(n >= 2, "--n must be >= 2 (the orbital moment vanishes for n = 1)");
    require(m != 0 && std::abs(m) <= n - 1, "--m must satisfy 1 <= |m| <= n-1");
    const double dx = single(config.delta_x_min, "--delta-x-min");
    const double eta = single(config.eta, "--eta");
    auto params = make_params(config, dx, eta);
    minlen_moment_result r{};
    check(minlen_comparison_report(n, m, params.get(), config.epsilon_bohr, &r));

    const auto sign = [](int s) { return s > 0 ? std::string("+") : s < 0 ? std::string("-") : std::string("0"); };
    const std::string verdict = r.below_precision ? "below measurement precision" : "within measurement reach";
    Report report;
    report.inputs = {{"n", n}, {"m", m}, {"delta_x_min", dx}, {"units", config.atomic_units ? "bohr" : "m"},
                     {"eta", eta}, {"epsilon_bohr", config.epsilon_bohr}};
    report.tolerances = {{"epsilon_bohr", config.epsilon_bohr}};
    report.verdict = verdict;
    report.table.columns = {"quantity", "value"};
    add_row(report.table, {std::string("mu_z_bohr"), r.mu_z_bohr});
    add_row(report.table, {std::string("undeformed_bohr"), r.undeformed / bohr_magneton_au()});
    add_row(report.table, {std::string("deformation_correction"), r.varsigma});
    add_row(report.table, {std::string("relativistic_correction"), -r.relativistic_fraction});
    add_row(report.table, {std::string("relativistic_magnitude"), r.relativistic_fraction});
    add_row(report.table, {std::string("signs"), "deformation:" + sign(r.deformation_sign) +
                                                     " relativistic:" + sign(r.relativistic_sign)});
    add_row(report.table, {std::string("epsilon_bohr"), r.epsilon_bohr});
    add_row(report.table, {std::string("precision_ratio"), r.precision_ratio});
    add_row(report.table, {std::string("verdict"), verdict});
    return report;
  });
}

int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run(config, "matrix", out, err, [&](int&) {
    const int n = single_n(config);
    const int l = config.l;
    validate_state(n, l, 0);
    require(l >= 1, "--l must be >= 1: the perturbation operator diverges for s-states (l = 0)");
    require(config.n_max > n, "--n-max must exceed --n");
    require(config.n_max <= 60, "--n-max must not exceed 60");
    const double dx = single(config.delta_x_min, "--delta-x-min");
    const double eta = single(config.eta, "--eta");
    auto params = make_params(config, dx, eta);

    minlen_expansion* raw = nullptr;
    check(minlen_expansion_create(n, l, l, params.get(), config.n_max, config.grid_nodes, &raw));
    ExpansionHandle expansion(raw);
    int count = 0;
    check(minlen_expansion_size(expansion.get(), &count));
    std::vector<std::optional<double>> coefficient(config.n_max + 1);
    for (int i = 0; i < count; ++i) {
      int n_prime = 0;
      double c = 0.0;
      check(minlen_expansion_term(expansion.get(), i, &n_prime, &c));
      coefficient[n_prime] = c;
    }

    Report report;
    report.inputs = {{"n", n}, {"l", l}, {"delta_x_min", dx}, {"units", config.atomic_units ? "bohr" : "m"},
                     {"eta", eta}, {"n_max", config.n_max}};
    report.tolerances = {{"symmetry", 1e-10}};
    report.table.columns = {"n_prime", "V_n_nprime", "V_nprime_n", "asymmetry", "coefficient"};
    double worst = 0.0;
    for (int n_prime = l + 1; n_prime <= config.n_max; ++n_prime) {
      double forward = 0.0;
      double backward = 0.0;
      check(minlen_matrix_element(n, n_prime, l, params.get(), config.grid_nodes, &forward));
      check(minlen_matrix_element(n_prime, n, l, params.get(), config.grid_nodes, &backward));
      worst = std::max(worst, std::abs(forward - backward));
      Cell c = coefficient[n_prime] ? Cell{*coefficient[n_prime]} : Cell{};
      add_row(report.table, {static_cast<long long>(n_prime), forward, backward, forward - backward, c});
    }
    report.verdict = worst <= 1e-10 ? "symmetric" : "asymmetric";
    return report;
  });
}

}  // namespace minlen::cli
