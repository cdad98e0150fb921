#pragma once

#include <complex>

#include "minlen/quadrature.hpp"

namespace minlen {

struct QuantumNumbers {
  int n;
  int l;
  int m;
};

// Throws DomainError unless n >= 1, 0 <= l <= n-1, |m| <= l.
void validate(const QuantumNumbers& q);

struct SphericalPoint {
  double r;      // Bohr radii
  double theta;  // polar angle
  double phi;    // azimuth
};

namespace hydrogen {

/// Generalized Laguerre polynomial L_k^{(alpha)}(x) by forward recurrence.
double assoc_laguerre(int k, int alpha, double x);

/// Associated Legendre function P_l^m(u), 0 <= m <= l, with the
/// Condon-Shortley phase: P_1^1(u) = -sqrt(1 - u^2).
double assoc_legendre(int l, int m, double u);

/// Normalized spherical harmonic at phi = 0, i.e. the real polar factor
/// Theta_lm(theta) with Y_lm = Theta_lm(theta) e^{i m phi}. Y_{l,-m} follows
/// Y_{l,-m} = (-1)^m conj(Y_lm).
double polar_factor(int l, int m, double theta);

/// E_n = -1 / (2 n^2) Hartree.
double energy_level(int n);

/// <K> = 1 / (2 n^2) Hartree (virial theorem).
double mean_kinetic(int n);

/// Normalized R_nl(r), int_0^inf R^2 r^2 dr = 1.
double radial_wavefunction(int n, int l, double r);

/// psi_nlm = R_nl(r) Y_lm(theta, phi).
std::complex<double> wavefunction(const QuantumNumbers& q, const SphericalPoint& p);

/// Closed-form <nl| r^-k |nl> for k in {1, 2, 3}. k = 3 with l = 0 throws
/// DivergenceError.
double expectation_inv_r_power(int n, int l, int k);

/// (K psi)(p) = (E_n + 1/r) psi(p), from the Schroedinger equation.
std::complex<double> kinetic_action(const QuantumNumbers& q, const SphericalPoint& p);

/// Radial grid matched to the decay of R_{n1 l} R_{n2 l}.
RadialGrid product_grid(int n1, int n2, int node_count);

/// int_0^inf R_{n1 l} R_{n2 l} g(r) r^2 dr on `grid`.
QuadratureResult radial_matrix_element(int n1, int n2, int l, const std::function<double(double)>& g,
                                       const RadialGrid& grid);

}  // namespace hydrogen
}  // namespace minlen
