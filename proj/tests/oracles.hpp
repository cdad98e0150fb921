#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the quadrature engine under test.

#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace oracle {

inline long double factorial(int k) { return std::tgamma(static_cast<long double>(k) + 1.0L); }

inline long double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// L_k^{(alpha)}(x) = sum_i (-1)^i C(k+alpha, k-i) x^i / i!, summed in long
// double to tame the alternating-sign cancellation.
inline double laguerre_series(int k, int alpha, double x) {
  long double sum = 0.0L;
  for (int i = 0; i <= k; ++i) {
    sum += (i % 2 ? -1.0L : 1.0L) * binomial(k + alpha, k - i) * std::pow(static_cast<long double>(x), i) / factorial(i);
  }
  return static_cast<double>(sum);
}

// int_0^inf f(r) dr with double-exponential quadrature.
template <typename F>
double half_line(F f) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

// int_a^b f with tanh-sinh.
template <typename F>
double interval(F f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b);
}

// Textbook hydrogen radial functions (atomic units).
inline double r10(double r) { return 2.0 * std::exp(-r); }
inline double r21(double r) { return r * std::exp(-r / 2.0) / (2.0 * std::sqrt(6.0)); }
inline double r30(double r) { return 2.0 / (3.0 * std::sqrt(3.0)) * (1.0 - 2.0 * r / 3.0 + 2.0 * r * r / 27.0) * std::exp(-r / 3.0); }
inline double r31(double r) { return 8.0 / (27.0 * std::sqrt(6.0)) * r * (1.0 - r / 6.0) * std::exp(-r / 3.0); }

// R_nl from the explicit Laguerre series, normalized with factorials.
inline double radial(int n, int l, double r) {
  const long double rho = 2.0L * r / n;
  const long double norm =
      std::sqrt(std::pow(2.0L / n, 3) * factorial(n - l - 1) / (2.0L * n * factorial(n + l)));
  long double sum = 0.0L;
  const int k = n - l - 1;
  for (int j = 0; j <= k; ++j) {
    sum += ((j % 2) ? -1.0L : 1.0L) * binomial(k + 2 * l + 1, k - j) * std::pow(rho, j) / factorial(j);
  }
  return static_cast<double>(norm * std::exp(-rho / 2.0L) * std::pow(rho, l) * sum);
}

struct Cartesian {
  double x, y, z;
};

inline Cartesian to_cartesian(double r, double theta, double phi) {
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

struct Spherical {
  double r, theta, phi;
};

inline Spherical to_spherical(const Cartesian& c) {
  const double r = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
  return {r, std::acos(c.z / r), std::atan2(c.y, c.x)};
}

// Central-difference Laplacian of a complex field given on Cartesian points.
template <typename Psi>
std::complex<double> laplacian(Psi psi, const Cartesian& c, double h) {
  const auto center = psi(c);
  std::complex<double> sum = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    Cartesian plus = c;
    Cartesian minus = c;
    (axis == 0 ? plus.x : axis == 1 ? plus.y : plus.z) += h;
    (axis == 0 ? minus.x : axis == 1 ? minus.y : minus.z) -= h;
    sum += (psi(plus) - 2.0 * center + psi(minus)) / (h * h);
  }
  return sum;
}

template <typename Field>
auto gradient(Field f, const Cartesian& c, double h) {
  using T = decltype(f(c));
  T g[3];
  for (int axis = 0; axis < 3; ++axis) {
    Cartesian plus = c;
    Cartesian minus = c;
    (axis == 0 ? plus.x : axis == 1 ? plus.y : plus.z) += h;
    (axis == 0 ? minus.x : axis == 1 ? minus.y : minus.z) -= h;
    g[axis] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return std::array<T, 3>{g[0], g[1], g[2]};
}

// Radial Laplacian applied to u(r) Y_lm: (1/r^2) d/dr (r^2 u') - l(l+1) u / r^2.
template <typename U>
double radial_laplacian(U u, int l, double r, double h) {
  const double up = u(r + h);
  const double u0 = u(r);
  const double um = u(r - h);
  const double second = (up - 2.0 * u0 + um) / (h * h);
  const double first = (up - um) / (2.0 * h);
  return second + 2.0 * first / r - l * (l + 1.0) * u0 / (r * r);
}

}  // namespace oracle
