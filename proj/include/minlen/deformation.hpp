#pragma once

namespace minlen {

/// First-order deformation parameters (beta, beta') in atomic units
/// (inverse squared momentum). Invariants: beta, beta' >= 0 and
/// 2 beta - beta' >= 0, i.e. eta >= 1/3 so that b is real.
///
/// The combination 2 beta - beta' weights every Coulomb-deformation term;
/// it is stored rather than recomputed so that the commutative case
/// (eta = 1/3) yields an exact zero.
class DeformationParameters {
 public:
  DeformationParameters() = default;

  // Throws DomainError when an invariant is violated.
  static DeformationParameters from_betas(double beta, double beta_prime);

  // beta = eta dx^2, beta' = (1 - eta) dx^2 (hbar = 1, dx in Bohr radii).
  static DeformationParameters from_minimal_length(double delta_x_min, double eta);

  double beta() const noexcept { return beta_; }
  double beta_prime() const noexcept { return beta_prime_; }
  double coulomb_weight() const noexcept { return coulomb_weight_; }  // 2 beta - beta'

  bool undeformed() const noexcept { return beta_ == 0.0 && beta_prime_ == 0.0; }

  // Multiplies both parameters by s >= 0.
  DeformationParameters scaled(double s) const;

 private:
  DeformationParameters(double beta, double beta_prime, double coulomb_weight)
      : beta_(beta), beta_prime_(beta_prime), coulomb_weight_(coulomb_weight) {}

  double beta_ = 0.0;
  double beta_prime_ = 0.0;
  double coulomb_weight_ = 0.0;
};

inline constexpr double kEtaMin = 1.0 / 3.0;
inline constexpr double kEtaMax = 1.0;

/// dx_min = hbar sqrt(beta + beta').
double minimal_length(const DeformationParameters& p);

/// eta = beta / (beta + beta'); throws UndefinedParameterError when both vanish.
double eta_of(const DeformationParameters& p);

/// b = hbar sqrt(2 beta - beta').
double b_parameter(const DeformationParameters& p);

}  // namespace minlen
