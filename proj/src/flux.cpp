#include "minlen/flux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "minlen/errors.hpp"
#include "minlen/units.hpp"

namespace minlen::flux {

void check_point(const SphericalPoint& p) {
  if (!(p.r >= kSingularityGuard)) throw SingularityError("flux is singular at r = 0");
  if (!(std::sin(p.theta) >= kSingularityGuard) || !(p.theta < std::numbers::pi)) {
    throw SingularityError("flux is singular on the polar axis (sin theta = 0)");
  }
  if (!std::isfinite(p.phi)) throw DomainError("azimuth must be finite");
}

namespace {

void check_correction(const QuantumNumbers& q, const perturbation::CorrectionExpansion& c) {
  if (c.base.n != q.n || c.base.l != q.l || c.base.m != q.m) {
    throw DomainError("correction expansion belongs to a different state");
  }
}

// Real factors of psi*_{a} psi_{b} for states sharing (l, m); the phase
// e^{i m phi} cancels identically, so the flux does not depend on phi.
struct StateFactors {
  double radial;   // R_nl(r)
  double angular;  // Theta_lm(theta)^2
};

StateFactors factors(const QuantumNumbers& q, const SphericalPoint& p) {
  const double theta = hydrogen::polar_factor(q.l, q.m, p.theta);
  return {hydrogen::radial_wavefunction(q.n, q.l, p.r), theta * theta};
}

}  // namespace

FluxTerms flux_terms(const QuantumNumbers& q, const DeformationParameters& params,
                     const perturbation::CorrectionExpansion* correction, const SphericalPoint& p) {
  validate(q);
  check_point(p);
  if (correction) check_correction(q, *correction);
  FluxTerms terms;
  if (q.m == 0) return terms;

  const auto f = factors(q, p);
  const double density = f.radial * f.radial * f.angular;
  const double prefactor = q.m / (p.r * std::sin(p.theta));
  // psi* K psi = (E_n + 1/r) |psi|^2
  const double kinetic_density = (hydrogen::energy_level(q.n) + 1.0 / p.r) * density;

  terms.ordinary = prefactor * density;
  terms.kinetic = prefactor * 4.0 * params.beta_prime() * kinetic_density;
  terms.coulomb = prefactor * 2.0 * params.coulomb_weight() * density / p.r;
  if (correction) {
    double sum = 0.0;
    for (const auto& [n_prime, c] : correction->coefficients) {
      sum += c * hydrogen::radial_wavefunction(n_prime, q.l, p.r);
    }
    terms.cross = prefactor * 2.0 * sum * f.radial * f.angular;
  }
  return terms;
}

FluxVector probability_flux(const QuantumNumbers& q, const DeformationParameters& params,
                            const perturbation::CorrectionExpansion* correction, const SphericalPoint& p) {
  // j_r and j_theta vanish: R_nl and P_l^m are real.
  return {0.0, 0.0, flux_terms(q, params, correction, p).total()};
}

double divergence_check(const QuantumNumbers& q, const DeformationParameters& params, const SphericalPoint& p,
                        double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  check_point(p);
  if (!(p.r - step >= kSingularityGuard) || !(p.theta - step > 0.0) || !(p.theta + step < std::numbers::pi)) {
    throw DomainError("finite-difference stencil leaves the valid domain; reduce the step");
  }
  auto at = [&](double r, double theta, double phi) { return probability_flux(q, params, nullptr, {r, theta, phi}); };
  const double h2 = 2.0 * step;
  const double r = p.r;
  const double st = std::sin(p.theta);

  const auto rp = at(r + step, p.theta, p.phi);
  const auto rm = at(r - step, p.theta, p.phi);
  const double radial = ((r + step) * (r + step) * rp.j_r - (r - step) * (r - step) * rm.j_r) / (h2 * r * r);

  const auto tp = at(r, p.theta + step, p.phi);
  const auto tm = at(r, p.theta - step, p.phi);
  const double polar =
      (std::sin(p.theta + step) * tp.j_theta - std::sin(p.theta - step) * tm.j_theta) / (h2 * r * st);

  const auto pp = at(r, p.theta, p.phi + step);
  const auto pm = at(r, p.theta, p.phi - step);
  const double azimuthal = (pp.j_phi - pm.j_phi) / (h2 * r * st);

  return radial + polar + azimuthal;
}

TubeQuadratureSpec default_tube_spec() {
  TubeQuadratureSpec spec;
  spec.radial_nodes = default_radial_nodes();
  return spec;
}

namespace {

void check_spec(const TubeQuadratureSpec& spec) {
  if (spec.radial_nodes < kMinimumNodes || spec.angular_nodes < kMinimumNodes) {
    throw DomainError("tube quadrature needs at least 16 radial and 16 angular nodes");
  }
  if (spec.refinement_levels < 1 || spec.refinement_levels > 4) {
    throw DomainError("refinement levels must be between 1 and 4");
  }
  if (!(spec.relative_tolerance > 0.0)) throw DomainError("relative tolerance must be positive");
}

// (pi / c) (-e) j_phi r^2 sin^2 theta * r, integrated over r in [0, inf),
// theta in (0, pi), with j_phi supplied per node.
template <typename Flux>
double tube_sum(const RadialGrid& radial, const PolarGrid& polar, Flux&& j_phi) {
  const double prefactor = -std::numbers::pi / units::kSpeedOfLightAu;
  const auto r_nodes = radial.nodes();
  const auto r_weights = radial.weights();
  double total = 0.0;
  for (std::size_t i = 0; i < r_nodes.size(); ++i) {
    const double r = r_nodes[i];
    double ring = 0.0;
    for (std::size_t k = 0; k < polar.nodes.size(); ++k) {
      const double theta = polar.nodes[k];
      const double st = std::sin(theta);
      const double j = j_phi(r, theta);
      if (!std::isfinite(j)) throw EvaluationError("non-finite flux at r = " + std::to_string(r));
      ring += polar.weights[k] * j * st * st;
    }
    total += r_weights[i] * ring * r * r * r;
  }
  return prefactor * total;
}

template <typename Flux>
double converged_tube_integral(const TubeQuadratureSpec& spec, int n1, int n2, Flux&& j_phi) {
  double previous = 0.0;
  double current = 0.0;
  for (int level = 0; level <= spec.refinement_levels; ++level) {
    const int factor = 1 << level;
    const auto radial = hydrogen::product_grid(n1, n2, spec.radial_nodes * factor);
    const auto polar = make_polar_grid(spec.angular_nodes * factor);
    previous = current;
    current = tube_sum(radial, polar, j_phi);
  }
  const double difference = std::abs(current - previous);
  const double scale = std::max(std::abs(current), units::kBohrMagnetonAu);
  if (difference > spec.relative_tolerance * scale) {
    throw ConvergenceError("tube quadrature did not converge: refinement changed the moment by " +
                           std::to_string(difference / scale) + " (relative)");
  }
  return current;
}

}  // namespace

double magnetic_moment_numeric(const QuantumNumbers& q, const DeformationParameters& params,
                               const perturbation::CorrectionExpansion* correction,
                               const TubeQuadratureSpec& spec) {
  validate(q);
  check_spec(spec);
  if (correction) check_correction(q, *correction);
  if (q.m == 0) return 0.0;
  const double stationary = converged_tube_integral(spec, q.n, q.n, [&](double r, double theta) {
    const auto t = flux_terms(q, params, nullptr, {r, theta, 0.0});
    return t.ordinary + t.kinetic + t.coulomb;
  });
  if (!correction || correction->empty()) return stationary;
  return stationary + cross_term_moment(q, params, *correction, spec);
}

double cross_term_moment(const QuantumNumbers& q, const DeformationParameters& params,
                         const perturbation::CorrectionExpansion& correction, const TubeQuadratureSpec& spec) {
  validate(q);
  check_spec(spec);
  check_correction(q, correction);
  if (q.m == 0 || correction.empty()) return 0.0;
  double total = 0.0;
  // One integral per n' so that each radial grid matches the decay of R_n R_n'.
  for (const auto& [n_prime, c] : correction.coefficients) {
    perturbation::CorrectionExpansion single{correction.base, {{n_prime, c}}, correction.n_max};
    total += converged_tube_integral(spec, q.n, n_prime, [&](double r, double theta) {
      return flux_terms(q, params, &single, {r, theta, 0.0}).cross;
    });
  }
  return total;
}

}  // namespace minlen::flux
