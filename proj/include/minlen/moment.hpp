#pragma once

#include "minlen/deformation.hpp"

namespace minlen::moment {

// Relative error of the measured Bohr magneton used for the verdict.
inline constexpr double kDefaultEpsilonBohr = 2.5e-8;

/// -mu_B m (1 + 4 beta M e^2 / (a n^2)), atomic units.
double magnetic_moment_closed(int n, int m, const DeformationParameters& params);

/// -(e hbar m / 2Mc)(1 + 4 beta' M <K> + 2 (2 beta - beta') e^2 M <1/r>).
double magnetic_moment_general(int n, int l, int m, const DeformationParameters& params);

/// eta 4 dx^2 / (a^2 n^2); delta_x_min in Bohr radii.
double varsigma(double delta_x_min, double eta, int n);

/// Same correction from (beta, beta'): 4 beta / n^2.
double varsigma_of(const DeformationParameters& params, int n);

/// <K> / (M c^2) = alpha^2 / (2 n^2).
double relativistic_fraction(int n);

/// -mu_B m (1 - <K> / (M c^2)).
double relativistic_moment(int n, int m);

struct MomentResult {
  int n = 0;
  int m = 0;
  double mu_z = 0.0;               // a.u.
  double mu_z_bohr = 0.0;          // in Bohr magnetons
  double undeformed = 0.0;         // -m mu_B, a.u.
  double varsigma = 0.0;
  double relativistic_fraction = 0.0;
  double relativistic_moment = 0.0;  // a.u.
  double epsilon_bohr = kDefaultEpsilonBohr;
  double precision_ratio = 0.0;    // varsigma / epsilon
  bool below_precision = true;
  int deformation_sign = +1;       // sign of (mu - mu0) / mu0
  int relativistic_sign = -1;
};

MomentResult comparison_report(int n, int m, const DeformationParameters& params,
                               double epsilon_bohr = kDefaultEpsilonBohr);

}  // namespace minlen::moment
