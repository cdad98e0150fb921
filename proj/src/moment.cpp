#include "minlen/moment.hpp"

#include <cmath>
#include <cstdlib>

#include "minlen/errors.hpp"
#include "minlen/hydrogen.hpp"
#include "minlen/units.hpp"

namespace minlen::moment {
namespace {

// Nonzero m needs l >= 1, hence n >= 2 and |m| <= n - 1.
void validate_n_m(int n, int m) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  if (std::abs(m) > n - 1) throw DomainError("|m| must not exceed n - 1");
}

}  // namespace

double magnetic_moment_closed(int n, int m, const DeformationParameters& params) {
  validate_n_m(n, m);
  const double n2 = static_cast<double>(n) * n;
  return -units::kBohrMagnetonAu * m * (1.0 + 4.0 * params.beta() / n2);
}

double magnetic_moment_general(int n, int l, int m, const DeformationParameters& params) {
  validate({n, l, m});
  const double kinetic = hydrogen::mean_kinetic(n);
  const double inv_r = hydrogen::expectation_inv_r_power(n, l, 1);
  return -units::kBohrMagnetonAu * m *
         (1.0 + 4.0 * params.beta_prime() * kinetic + 2.0 * params.coulomb_weight() * inv_r);
}

double varsigma(double delta_x_min, double eta, int n) {
  if (!(delta_x_min >= 0.0) || !std::isfinite(delta_x_min)) throw DomainError("minimal length must be non-negative");
  if (!(eta >= kEtaMin && eta <= kEtaMax)) throw DomainError("eta must lie in [1/3, 1]");
  if (n < 2) throw DomainError("varsigma requires n >= 2 (orbital moment vanishes for n = 1)");
  return eta * 4.0 * delta_x_min * delta_x_min / (static_cast<double>(n) * n);
}

double varsigma_of(const DeformationParameters& params, int n) {
  if (n < 2) throw DomainError("varsigma requires n >= 2 (orbital moment vanishes for n = 1)");
  return 4.0 * params.beta() / (static_cast<double>(n) * n);
}

double relativistic_fraction(int n) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  return hydrogen::mean_kinetic(n) / (units::kSpeedOfLightAu * units::kSpeedOfLightAu);
}

double relativistic_moment(int n, int m) {
  validate_n_m(n, m);
  return -units::kBohrMagnetonAu * m * (1.0 - relativistic_fraction(n));
}

MomentResult comparison_report(int n, int m, const DeformationParameters& params, double epsilon_bohr) {
  validate_n_m(n, m);
  if (n < 2) throw DomainError("comparison requires n >= 2");
  if (!(epsilon_bohr > 0.0) || !std::isfinite(epsilon_bohr)) throw DomainError("epsilon must be positive");
  MomentResult result;
  result.n = n;
  result.m = m;
  result.undeformed = -units::kBohrMagnetonAu * m;
  result.varsigma = varsigma_of(params, n);
  result.mu_z = result.undeformed * (1.0 + result.varsigma);
  result.mu_z_bohr = units::moment_au_to_bohr_magnetons(result.mu_z);
  result.relativistic_fraction = relativistic_fraction(n);
  result.relativistic_moment = relativistic_moment(n, m);
  result.epsilon_bohr = epsilon_bohr;
  result.precision_ratio = result.varsigma / epsilon_bohr;
  result.below_precision = result.precision_ratio < 1.0;
  result.deformation_sign = result.varsigma > 0.0 ? +1 : 0;
  result.relativistic_sign = -1;
  return result;
}

}  // namespace minlen::moment
