#include "minlen/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "minlen/errors.hpp"

namespace minlen::perturbation {
namespace {

void validate_pair(int n, int n_prime, int l) {
  validate({n, l, 0});
  validate({n_prime, l, 0});
}

double element(int n, int n_prime, int l, const std::function<double(double)>& g, int grid_nodes,
               const char* what) {
  // Double the grid until the refinement difference meets the tolerance.
  for (int nodes = grid_nodes;; nodes *= 2) {
    const auto grid = hydrogen::product_grid(n, n_prime, nodes);
    const auto result = hydrogen::radial_matrix_element(n, n_prime, l, g, grid);
    if (result.error <= kElementTolerance) return result.value;
    if (2 * nodes > kMaxElementNodes) {
      throw EvaluationError(std::string(what) + ": quadrature error estimate " + std::to_string(result.error) +
                                " exceeds tolerance",
                            result.error);
    }
  }
}

}  // namespace

double regularized_coulomb_element(int n, int n_prime, int l, double b, int grid_nodes) {
  validate_pair(n, n_prime, l);
  if (!(b >= 0.0)) throw DomainError("b must be non-negative");
  return inv_r_power_element(n, n_prime, l, 1, grid_nodes) - coulomb_regularization_element(n, n_prime, l, b);
}

double coulomb_regularization_element(int n, int n_prime, int l, double b) {
  validate_pair(n, n_prime, l);
  if (!(b >= 0.0) || !std::isfinite(b)) throw DomainError("b must be non-negative");
  if (b == 0.0) return 0.0;
  const double b2 = b * b;
  // Panels graded from b resolve the branch points at r = +-ib; the
  // exponential envelope exp(-r / scale) is negligible beyond 200 scales.
  const double scale = 1.0 / (1.0 / n + 1.0 / n_prime);
  const auto result = integrate_graded(
      [&](double r) {
        // 1/r - 1/s = b^2 / (r s (r + s)), s = sqrt(r^2 + b^2)
        const double s = std::sqrt(r * r + b2);
        return hydrogen::radial_wavefunction(n, l, r) * hydrogen::radial_wavefunction(n_prime, l, r) * r * b2 /
               (s * (r + s));
      },
      b, 0.5 * scale, 200.0 * scale);
  if (result.error > kElementTolerance) {
    throw EvaluationError("Coulomb regularization element: quadrature error estimate " +
                              std::to_string(result.error) + " exceeds tolerance",
                          result.error);
  }
  return result.value;
}

double inv_r_power_element(int n, int n_prime, int l, int k, int grid_nodes) {
  validate_pair(n, n_prime, l);
  if (k < 1 || k > 3) throw DomainError("inverse power must be 1, 2 or 3");
  if (k == 3 && l == 0) throw DivergenceError("<r^-3> diverges for s-states (l = 0)");
  return element(
      n, n_prime, l, [k](double r) { return std::pow(r, -k); }, grid_nodes, "inverse power element");
}

double matrix_element_V(const MatrixElementRequest& req) {
  validate_pair(req.n, req.n_prime, req.l);
  const auto& p = req.params;
  if (p.undeformed()) return 0.0;
  const double e_sum = hydrogen::energy_level(req.n) + hydrogen::energy_level(req.n_prime);
  const double inv_r = inv_r_power_element(req.n, req.n_prime, req.l, 1, req.grid_nodes);
  const double inv_r2 = inv_r_power_element(req.n, req.n_prime, req.l, 2, req.grid_nodes);
  const double regularization =
      coulomb_regularization_element(req.n, req.n_prime, req.l, b_parameter(p));
  return regularization + 0.5 * (2.0 * p.beta() + 3.0 * p.beta_prime()) * e_sum * inv_r +
         (2.0 * p.beta() + p.beta_prime()) * inv_r2;
}

double full_matrix_element(const MatrixElementRequest& req) {
  double value = matrix_element_V(req);
  if (req.n == req.n_prime) {
    const double e = hydrogen::energy_level(req.n);
    value += 2.0 * req.params.beta_prime() * e * e;
  }
  return value;
}

double linear_matrix_element(int n, int n_prime, int l, const DeformationParameters& params, int grid_nodes) {
  validate_pair(n, n_prime, l);
  if (l == 0) throw DivergenceError("the linear perturbation operator diverges for s-states (l = 0)");
  if (params.undeformed()) return 0.0;
  const double e = hydrogen::energy_level(n);
  const double e_prime = hydrogen::energy_level(n_prime);
  const double inv_r = inv_r_power_element(n, n_prime, l, 1, grid_nodes);
  const double inv_r2 = inv_r_power_element(n, n_prime, l, 2, grid_nodes);
  const double inv_r3 = inv_r_power_element(n, n_prime, l, 3, grid_nodes);
  const double kinetic = 2.0 * params.beta_prime() * ((n == n_prime ? e * e_prime : 0.0) + (e + e_prime) * inv_r + inv_r2);
  const double coulomb = 0.25 * params.coulomb_weight() * (2.0 * (e + e_prime) * inv_r + 4.0 * inv_r2 + 2.0 * inv_r3);
  return kinetic + coulomb;
}

double first_order_energy_shift(int n, int l, const DeformationParameters& params) {
  validate({n, l, 0});
  if (l == 0) throw DivergenceError("the linear perturbation operator diverges for s-states (l = 0)");
  const double e = hydrogen::energy_level(n);
  const double inv_r = hydrogen::expectation_inv_r_power(n, l, 1);
  const double inv_r2 = hydrogen::expectation_inv_r_power(n, l, 2);
  const double inv_r3 = hydrogen::expectation_inv_r_power(n, l, 3);
  // beta' <p^4> / 2M with p^2 |n> = 2M (E_n + e^2/r) |n>
  const double kinetic = 2.0 * params.beta_prime() * (e * e + 2.0 * e * inv_r + inv_r2);
  const double coulomb = 0.25 * params.coulomb_weight() * (4.0 * e * inv_r + 4.0 * inv_r2 + 2.0 * inv_r3);
  return kinetic + coulomb;
}

CorrectionExpansion correction_expansion(const QuantumNumbers& base, const DeformationParameters& params,
                                         int n_max, int grid_nodes) {
  validate(base);
  if (base.l == 0) throw DivergenceError("wave-function corrections require l >= 1");
  if (n_max <= base.n) throw DomainError("n_max must exceed n");
  CorrectionExpansion expansion{base, {}, n_max};
  const double e = hydrogen::energy_level(base.n);
  for (int n_prime = base.l + 1; n_prime <= n_max; ++n_prime) {
    if (n_prime == base.n) continue;
    const double v = matrix_element_V({base.n, n_prime, base.l, params, grid_nodes});
    expansion.coefficients.emplace(n_prime, v / (e - hydrogen::energy_level(n_prime)));
  }
  return expansion;
}

std::complex<double> corrected_wavefunction(const CorrectionExpansion& exp, const SphericalPoint& p) {
  std::complex<double> psi = hydrogen::wavefunction(exp.base, p);
  for (const auto& [n_prime, c] : exp.coefficients) {
    psi += c * hydrogen::wavefunction({n_prime, exp.base.l, exp.base.m}, p);
  }
  return psi;
}

}  // namespace minlen::perturbation
