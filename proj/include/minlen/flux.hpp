#pragma once

#include "minlen/deformation.hpp"
#include "minlen/hydrogen.hpp"
#include "minlen/perturbation.hpp"

namespace minlen::flux {

// Spherical components of the probability current (a.u.).
struct FluxVector {
  double j_r = 0.0;
  double j_theta = 0.0;
  double j_phi = 0.0;
};

/// Azimuthal flux of a stationary state split by origin. Each field is
/// the full contribution to j_phi:
///   j_phi = m / (r sin theta) (|psi|^2 + 4 beta' M psi* K psi
///           + 2 e^2 (2 beta - beta') M |psi|^2 / r + 2 sum c psi*_{n'} psi)
struct FluxTerms {
  double ordinary = 0.0;
  double kinetic = 0.0;
  double coulomb = 0.0;
  double cross = 0.0;

  double total() const noexcept { return ordinary + kinetic + coulomb + cross; }
};

inline constexpr double kSingularityGuard = 1e-12;

// Throws SingularityError when r or sin(theta) is below kSingularityGuard.
void check_point(const SphericalPoint& p);

FluxTerms flux_terms(const QuantumNumbers& q, const DeformationParameters& params,
                     const perturbation::CorrectionExpansion* correction, const SphericalPoint& p);

FluxVector probability_flux(const QuantumNumbers& q, const DeformationParameters& params,
                            const perturbation::CorrectionExpansion* correction, const SphericalPoint& p);

/// Central-difference div j in spherical coordinates.
double divergence_check(const QuantumNumbers& q, const DeformationParameters& params, const SphericalPoint& p,
                        double step);

struct TubeQuadratureSpec {
  int radial_nodes = 200;
  int angular_nodes = 48;
  int refinement_levels = 1;       // each level doubles both node counts
  double relative_tolerance = 1e-10;  // between the last two levels
};

// Radial node count from default_radial_nodes().
TubeQuadratureSpec default_tube_spec();

/// mu_z = (pi / c) int j_e r^2 sin^2(theta) dsigma over the (r, theta)
/// half-plane, dsigma = r dr dtheta, j_e = -e j. Includes the cross term
/// when `correction` is non-null.
double magnetic_moment_numeric(const QuantumNumbers& q, const DeformationParameters& params,
                               const perturbation::CorrectionExpansion* correction,
                               const TubeQuadratureSpec& spec);

/// Contribution of the wave-function correction alone.
double cross_term_moment(const QuantumNumbers& q, const DeformationParameters& params,
                         const perturbation::CorrectionExpansion& correction, const TubeQuadratureSpec& spec);

}  // namespace minlen::flux
