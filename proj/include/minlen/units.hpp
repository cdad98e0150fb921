#pragma once

namespace minlen::units {

/// CGS-Gaussian constants (CODATA 2018). Internal computations use atomic
/// units (hbar = M = e = 1, lengths in Bohr radii, energies in Hartree);
/// these values are only needed at the I/O boundary.
struct Constants {
  double electron_charge_cgs;   // statC
  double electron_mass_cgs;     // g
  double hbar_cgs;              // erg s
  double speed_of_light_cgs;    // cm / s
  double bohr_radius_cm;        // cm
  double fine_structure;        // dimensionless
  double bohr_magneton_cgs;     // erg / G
};

inline constexpr Constants kConstants{
    4.803204712570263e-10,
    9.1093837015e-28,
    1.054571817e-27,
    2.99792458e10,
    5.29177210903e-9,
    7.2973525693e-3,
    9.2740100783e-21,
};

// Commonly misprinted electron charge (digits of 4.8032e-10 transposed).
// Kept for display next to the CODATA value; never used in computation.
inline constexpr double kQuotedElectronChargeCgs = 4.8203e-10;

inline constexpr double kBohrRadiusMeters = kConstants.bohr_radius_cm * 1e-2;
inline constexpr double kHartreeErg =
    kConstants.electron_charge_cgs * kConstants.electron_charge_cgs / kConstants.bohr_radius_cm;

// Speed of light in atomic units, c = 1 / alpha.
inline constexpr double kSpeedOfLightAu = 1.0 / kConstants.fine_structure;

// Bohr magneton e hbar / (2 M c) in atomic units.
inline constexpr double kBohrMagnetonAu = 0.5 / kSpeedOfLightAu;

// Atomic unit of magnetic moment, e hbar / M, equals two Bohr magnetons.
inline constexpr double kMomentAuCgs = 2.0 * kConstants.bohr_magneton_cgs;

double length_to_atomic(double meters);
double length_from_atomic(double bohr);

double energy_to_hartree(double erg);
double energy_from_hartree(double hartree);

double moment_to_atomic(double erg_per_gauss);
double moment_from_atomic(double moment_au);

double moment_to_bohr_magnetons(double erg_per_gauss);
double moment_au_to_bohr_magnetons(double moment_au);

}  // namespace minlen::units
