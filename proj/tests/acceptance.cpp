// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "minlen/errors.hpp"
#include "minlen/flux.hpp"
#include "minlen/moment.hpp"
#include "minlen/perturbation.hpp"
#include "minlen/units.hpp"

using namespace minlen;

namespace {

const double kMuB = units::kBohrMagnetonAu;
const double kDx = units::length_to_atomic(1e-16);
constexpr int kNodes = 200;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

double rel(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

// n <= 5, 1 <= l <= n-1, 1 <= m <= l
std::vector<QuantumNumbers> sweep_states() {
  std::vector<QuantumNumbers> out;
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; l < n; ++l) {
      for (int m = 1; m <= l; ++m) out.push_back({n, l, m});
    }
  }
  return out;
}

std::vector<DeformationParameters> sweep_params() {
  std::vector<DeformationParameters> out;
  for (double eta : {1.0 / 3.0, 0.5, 1.0}) {
    for (double dx : {0.0, kDx}) out.push_back(DeformationParameters::from_minimal_length(dx, eta));
  }
  return out;
}

Outcome headline() {
  const double value = moment::varsigma(kDx, 1.0, 2);
  const double error = rel(value, 3.57e-12);
  return {error <= 5e-3, fmt("varsigma(1e-16 m, eta=1, n=2) = %.6e, rel. deviation from 3.57e-12 = %.2e (tol 5e-3)",
                             value, error)};
}

Outcome figure1() {
  cli::RunConfig config;
  config.header_timestamp = false;
  config.n = {2, 3, 4};
  std::ostringstream out;
  std::ostringstream err;
  if (cli::cmd_figure1(config, out, err) != cli::kExitOk) return {false, "figure1 command failed: " + err.str()};

  std::vector<std::vector<double>> rows;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  if (rows.size() < 2 || rows.front()[0] != 1.0 / 3.0 || rows.back()[0] != 1.0) {
    return {false, "eta samples do not span [1/3, 1]"};
  }
  double linearity = 0.0;
  double slope_ratio = 0.0;
  bool monotone = true;
  const double expected_ratio[3] = {1.0, 4.0 / 9.0, 0.25};
  const double slope2 = rows.back()[1];  // through the origin: slope = value at eta = 1
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double eta = rows[i][0];
    for (int c = 1; c <= 3; ++c) {
      const double slope = rows.back()[c];
      linearity = std::max(linearity, rel(rows[i][c], slope * eta));
      slope_ratio = std::max(slope_ratio, rel(slope / slope2, expected_ratio[c - 1]));
      if (c > 1 && !(rows[i][c] < rows[i][c - 1])) monotone = false;
      if (i > 0 && !(rows[i][c] > rows[i - 1][c])) monotone = false;
    }
  }
  const double endpoint = rel(rows.back()[1], 3.57e-12);
  const double headline = moment::varsigma(kDx, 1.0, 2);
  const double endpoint_scaling =
      std::max(rel(rows.back()[2], headline * 4.0 / 9.0), rel(rows.back()[3], headline / 4.0));
  const bool pass = linearity <= 1e-12 && slope_ratio <= 1e-12 && monotone && endpoint <= 5e-3 &&
                    endpoint_scaling <= 1e-12;
  return {pass, fmt("%zu samples; linearity %.1e, slope ratio 1:4/9:1/4 dev %.1e, endpoint dev %.1e, "
                    "monotone %s",
                    rows.size(), linearity, slope_ratio, std::max(endpoint, endpoint_scaling),
                    monotone ? "yes" : "no")};
}

Outcome oracle_equivalence() {
  const auto spec = flux::default_tube_spec();
  double worst = 0.0;
  double worst_undeformed = 0.0;
  bool exact_undeformed = true;
  int runs = 0;
  for (const auto& q : sweep_states()) {
    for (const auto& p : sweep_params()) {
      const double numeric = flux::magnetic_moment_numeric(q, p, nullptr, spec);
      const double closed = moment::magnetic_moment_closed(q.n, q.m, p);
      worst = std::max(worst, rel(numeric, closed));
      if (p.undeformed()) {
        if (closed != -q.m * kMuB) exact_undeformed = false;
        worst_undeformed = std::max(worst_undeformed, rel(numeric, -q.m * kMuB));
      }
      ++runs;
    }
  }
  return {worst <= 1e-8 && worst_undeformed <= 1e-8 && exact_undeformed,
          fmt("%d runs; max rel. |numeric - closed| = %.2e, undeformed vs -m muB = %.2e (tol 1e-8)", runs, worst,
              worst_undeformed)};
}

Outcome cross_terms() {
  const auto spec = flux::default_tube_spec();
  double worst = 0.0;
  double worst_single = 0.0;
  int runs = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l < n; ++l) {
      for (int m = 1; m <= l; ++m) {
        for (double eta : {1.0 / 3.0, 0.5, 1.0}) {
          const auto p = DeformationParameters::from_minimal_length(kDx, eta);
          const auto e = perturbation::correction_expansion({n, l, m}, p, 8, kNodes);
          worst = std::max(worst, std::abs(flux::cross_term_moment({n, l, m}, p, e, spec)) / kMuB);
          for (const auto& [n_prime, c] : e.coefficients) {
            const perturbation::CorrectionExpansion single{e.base, {{n_prime, c}}, e.n_max};
            worst_single = std::max(worst_single, std::abs(flux::cross_term_moment({n, l, m}, p, single, spec)) / kMuB);
          }
          ++runs;
        }
      }
    }
  }
  return {worst < 1e-9 && worst_single < 1e-9,
          fmt("%d expansions (n_max = 8); max |total| = %.2e muB, max |single n'| = %.2e muB (tol 1e-9)", runs, worst,
              worst_single)};
}

Outcome flux_structure() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_div = 0.0;
  bool nonzero_component = false;
  long points = 0;
  constexpr double kStep = 1e-5;
  for (const auto& q : sweep_states()) {
    for (const auto& p : sweep_params()) {
      for (int i = 0; i < 1000; ++i) {
        // interior points where the central-difference stencil stays valid
        const double r = 0.05 + unit(rng) * 4.0 * q.n * q.n;
        const double theta = 0.01 + unit(rng) * (std::numbers::pi - 0.02);
        const double phi = unit(rng) * 2.0 * std::numbers::pi;
        const auto j = flux::probability_flux(q, p, nullptr, {r, theta, phi});
        if (j.j_r != 0.0 || j.j_theta != 0.0) nonzero_component = true;
        worst_div = std::max(worst_div, std::abs(flux::divergence_check(q, p, {r, theta, phi}, kStep)));
        ++points;
      }
    }
  }
  return {!nonzero_component && worst_div < 1e-12,
          fmt("%ld points; j_r = j_theta = 0 %s; max |div j| = %.2e (tol 1e-12)", points,
              nonzero_component ? "violated" : "everywhere", worst_div)};
}

Outcome commutative_case() {
  // beta' a power of two keeps 2 beta - beta' exactly zero
  const double beta_prime = std::ldexp(1.0, -30);
  const auto p = DeformationParameters::from_betas(beta_prime / 2.0, beta_prime);
  const auto p_eta = DeformationParameters::from_minimal_length(kDx, 1.0 / 3.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool flux_ok = true;
  for (const auto& q : sweep_states()) {
    for (const auto& params : {p, p_eta}) {
      for (int i = 0; i < 200; ++i) {
        const SphericalPoint pt{0.05 + unit(rng) * 40.0, 0.01 + unit(rng) * 3.12, unit(rng) * 6.28};
        const auto t = flux::flux_terms(q, params, nullptr, pt);
        if (t.coulomb != 0.0 || flux::probability_flux(q, params, nullptr, pt).j_phi != t.ordinary + t.kinetic) {
          flux_ok = false;
        }
      }
    }
  }
  bool operator_ok = b_parameter(p) == 0.0 && b_parameter(p_eta) == 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int l = 1; l < n; ++l) {
      const double e = hydrogen::energy_level(n);
      const double kinetic =
          2.0 * beta_prime *
          (e * e + 2.0 * e * hydrogen::expectation_inv_r_power(n, l, 1) + hydrogen::expectation_inv_r_power(n, l, 2));
      if (perturbation::first_order_energy_shift(n, l, p) != kinetic) operator_ok = false;
      for (int n_prime = l + 1; n_prime <= 8; ++n_prime) {
        const double e_prime = hydrogen::energy_level(n_prime);
        const double inv_r = perturbation::inv_r_power_element(n, n_prime, l, 1, kNodes);
        const double inv_r2 = perturbation::inv_r_power_element(n, n_prime, l, 2, kNodes);
        const double pure = 2.0 * beta_prime * ((e + e_prime) * inv_r + inv_r2);
        if (perturbation::matrix_element_V({n, n_prime, l, p, kNodes}) != pure) operator_ok = false;
      }
    }
  }
  return {flux_ok && operator_ok, fmt("Coulomb flux term identically zero: %s; V purely kinetic: %s (exact)",
                                      flux_ok ? "yes" : "no", operator_ok ? "yes" : "no")};
}

Outcome relativistic() {
  const double alpha = units::kConstants.fine_structure;
  const auto p = DeformationParameters::from_minimal_length(kDx, 1.0);
  bool opposite = true;
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m < n; ++m) {
      const auto r = moment::comparison_report(n, m, p);
      if (!(r.deformation_sign * r.relativistic_sign < 0)) opposite = false;
    }
  }
  const double magnitude = rel(moment::relativistic_fraction(2), alpha * alpha / 8.0);
  const auto report = moment::comparison_report(2, 1, p, moment::kDefaultEpsilonBohr);
  const double ratio = rel(report.precision_ratio, 1.43e-4);
  return {opposite && magnitude <= 1e-10 && ratio <= 5e-3 && report.below_precision,
          fmt("signs opposite for n = 2..12: %s; |rel - alpha^2/8| = %.1e (tol 1e-10); varsigma/epsilon = %.4e "
              "(%s)",
              opposite ? "yes" : "no", magnitude, report.precision_ratio,
              report.below_precision ? "below measurement precision" : "measurable")};
}

Outcome hydrogen_suite() {
  double norm = 0.0;
  double orth = 0.0;
  double virial = 0.0;
  double moments = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto grid = hydrogen::product_grid(n, n, kNodes);
      const auto one = [](double) { return 1.0; };
      norm = std::max(norm, std::abs(hydrogen::radial_matrix_element(n, n, l, one, grid).value - 1.0));
      for (int n_prime = l + 1; n_prime <= 8; ++n_prime) {
        if (n_prime == n) continue;
        orth = std::max(orth, std::abs(hydrogen::radial_matrix_element(
                                           n, n_prime, l, one, hydrogen::product_grid(n, n_prime, kNodes))
                                           .value));
      }
      // <V> = -<1/r> = 2 E_n
      const double potential =
          -hydrogen::radial_matrix_element(n, n, l, [](double r) { return 1.0 / r; }, grid).value;
      virial = std::max(virial, rel(potential, 2.0 * hydrogen::energy_level(n)));
      for (int k = 1; k <= 3; ++k) {
        if (k == 3 && l == 0) continue;
        const double q =
            hydrogen::radial_matrix_element(n, n, l, [k](double r) { return std::pow(r, -k); }, grid).value;
        moments = std::max(moments, rel(q, hydrogen::expectation_inv_r_power(n, l, k)));
      }
    }
  }
  const bool pass = norm <= 1e-9 && orth <= 1e-9 && virial <= 1e-9 && moments <= 1e-9;
  return {pass, fmt("n <= 8: norm %.1e, orthogonality %.1e, virial %.1e, <r^-k> %.1e (tol 1e-9)", norm, orth, virial,
                    moments)};
}

Outcome perturbation_consistency() {
  double symmetry = 0.0;
  double linearity = 0.0;
  double routes = 0.0;
  for (double eta : {1.0 / 3.0, 0.5, 1.0}) {
    const auto p = DeformationParameters::from_minimal_length(kDx, eta);
    const auto p2 = p.scaled(2.0);
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l < n; ++l) {
        for (int n_prime = n + 1; n_prime <= 8; ++n_prime) {
          symmetry = std::max(symmetry, std::abs(perturbation::matrix_element_V({n, n_prime, l, p, kNodes}) -
                                                 perturbation::matrix_element_V({n_prime, n, l, p, kNodes})));
        }
        if (l == 0) continue;
        const double shift = perturbation::first_order_energy_shift(n, l, p);
        linearity = std::max(linearity, rel(perturbation::first_order_energy_shift(n, l, p2), 2.0 * shift));
        for (int n_prime = l + 1; n_prime <= 8; ++n_prime) {
          const double v = perturbation::linear_matrix_element(n, n_prime, l, p, kNodes);
          linearity = std::max(linearity, rel(perturbation::linear_matrix_element(n, n_prime, l, p2, kNodes), 2.0 * v));
        }
        routes = std::max(routes, rel(perturbation::full_matrix_element({n, n, l, p, kNodes}), shift));
      }
    }
  }
  return {symmetry <= 1e-10 && linearity <= 1e-10 && routes <= 1e-6,
          fmt("max |V_nn' - V_n'n| = %.1e (tol 1e-10); linearity %.1e (tol 1e-10); two-route diagonal %.1e (tol 1e-6)",
              symmetry, linearity, routes)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds; 0 means unbounded
  };
  const std::vector<Criterion> criteria = {
      {"headline bound", headline, 1.0},
      {"figure 1 reproduction", figure1, 1.0},
      {"oracle equivalence", oracle_equivalence, 60.0},
      {"cross-term vanishing", cross_terms, 60.0},
      {"flux structure", flux_structure, 0.0},
      {"commutative special case", commutative_case, 0.0},
      {"relativistic comparison", relativistic, 0.0},
      {"hydrogen foundation", hydrogen_suite, 0.0},
      {"perturbation consistency", perturbation_consistency, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    std::string timing = fmt("%.2f s", seconds);
    if (criteria[i].time_limit > 0.0) {
      timing += fmt(" (limit %.0f s)", criteria[i].time_limit);
      if (seconds > criteria[i].time_limit) pass = false;
    }
    if (!pass) ++failures;
    std::printf("[%s] %zu. %s: %s; %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail.c_str(),
                timing.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
