#include "minlen/deformation.hpp"

#include <cmath>

#include "minlen/errors.hpp"

namespace minlen {

DeformationParameters DeformationParameters::from_betas(double beta, double beta_prime) {
  if (!(beta >= 0.0) || !(beta_prime >= 0.0) || !std::isfinite(beta) || !std::isfinite(beta_prime)) {
    throw DomainError("deformation parameters must be finite and non-negative");
  }
  const double weight = 2.0 * beta - beta_prime;
  if (weight < 0.0) throw DomainError("deformation requires 2 beta >= beta' (eta >= 1/3)");
  return {beta, beta_prime, weight};
}

DeformationParameters DeformationParameters::from_minimal_length(double delta_x_min, double eta) {
  if (!(delta_x_min >= 0.0) || !std::isfinite(delta_x_min)) {
    throw DomainError("minimal length must be finite and non-negative");
  }
  if (!(eta >= kEtaMin && eta <= kEtaMax)) throw DomainError("eta must lie in [1/3, 1]");
  const double dx2 = delta_x_min * delta_x_min;
  // (3 eta - 1) evaluates to exactly 0 for eta = 1.0 / 3.0.
  const double weight = (3.0 * eta - 1.0) * dx2;
  return {eta * dx2, (1.0 - eta) * dx2, weight < 0.0 ? 0.0 : weight};
}

DeformationParameters DeformationParameters::scaled(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("scale factor must be finite and non-negative");
  return {beta_ * s, beta_prime_ * s, coulomb_weight_ * s};
}

double minimal_length(const DeformationParameters& p) { return std::sqrt(p.beta() + p.beta_prime()); }

double eta_of(const DeformationParameters& p) {
  const double sum = p.beta() + p.beta_prime();
  if (!(sum > 0.0)) throw UndefinedParameterError("eta is undefined for beta + beta' = 0");
  return p.beta() / sum;
}

double b_parameter(const DeformationParameters& p) { return std::sqrt(p.coulomb_weight()); }

}  // namespace minlen
