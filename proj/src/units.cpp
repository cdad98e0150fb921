#include "minlen/units.hpp"

#include <cmath>

#include "minlen/errors.hpp"

namespace minlen::units {

double length_to_atomic(double meters) {
  if (!(meters >= 0.0)) throw DomainError("length must be non-negative");
  return meters / kBohrRadiusMeters;
}

double length_from_atomic(double bohr) {
  if (!(bohr >= 0.0)) throw DomainError("length must be non-negative");
  return bohr * kBohrRadiusMeters;
}

double energy_to_hartree(double erg) { return erg / kHartreeErg; }
double energy_from_hartree(double hartree) { return hartree * kHartreeErg; }

double moment_to_atomic(double erg_per_gauss) { return erg_per_gauss / kMomentAuCgs; }
double moment_from_atomic(double moment_au) { return moment_au * kMomentAuCgs; }

double moment_to_bohr_magnetons(double erg_per_gauss) { return erg_per_gauss / kConstants.bohr_magneton_cgs; }
double moment_au_to_bohr_magnetons(double moment_au) { return moment_au / kBohrMagnetonAu; }

}  // namespace minlen::units
