#include "minlen/hydrogen.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "minlen/errors.hpp"

namespace minlen {

void validate(const QuantumNumbers& q) {
  if (q.n < 1) throw DomainError("principal quantum number must be >= 1, got " + std::to_string(q.n));
  if (q.l < 0 || q.l > q.n - 1) {
    throw DomainError("orbital quantum number must satisfy 0 <= l <= n-1, got l = " + std::to_string(q.l));
  }
  if (std::abs(q.m) > q.l) {
    throw DomainError("magnetic quantum number must satisfy |m| <= l, got m = " + std::to_string(q.m));
  }
}

namespace hydrogen {

double assoc_laguerre(int k, int alpha, double x) {
  if (k < 0 || alpha < 0) throw DomainError("assoc_laguerre requires k >= 0 and alpha >= 0");
  if (!(x >= 0.0)) throw DomainError("assoc_laguerre requires x >= 0");
  double p0 = 1.0;
  if (k == 0) return p0;
  double p1 = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    const double p2 = ((2.0 * j + 1.0 + alpha - x) * p1 - (j + alpha) * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double assoc_legendre(int l, int m, double u) {
  if (l < 0 || m < 0 || m > l) throw DomainError("assoc_legendre requires 0 <= m <= l");
  if (!(std::abs(u) <= 1.0)) throw DomainError("assoc_legendre requires |u| <= 1");
  // P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - u) * (1.0 + u));
  double odd = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= -odd * s;
    odd += 2.0;
  }
  if (l == m) return pmm;
  double pmmp1 = u * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2.0 * ll - 1.0) * u * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double polar_factor(int l, int m, double theta) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw DomainError("polar_factor requires |m| <= l");
  // sqrt((2l+1)/(4 pi) (l-|m|)!/(l+|m|)!)
  const double log_ratio = std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0);
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * std::exp(log_ratio));
  double value = norm * assoc_legendre(l, am, std::cos(theta));
  if (m < 0 && (am % 2 == 1)) value = -value;
  return value;
}

double energy_level(int n) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  return -0.5 / (static_cast<double>(n) * n);
}

double mean_kinetic(int n) { return -energy_level(n); }

double radial_wavefunction(int n, int l, double r) {
  validate({n, l, 0});
  if (!(r >= 0.0)) throw DomainError("radius must be non-negative");
  const double rho = 2.0 * r / n;
  // sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!))
  const double log_norm =
      0.5 * (3.0 * std::log(2.0 / n) + std::lgamma(n - l + 0.0) - std::log(2.0 * n) - std::lgamma(n + l + 1.0));
  return std::exp(log_norm - 0.5 * rho) * std::pow(rho, l) * assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

std::complex<double> wavefunction(const QuantumNumbers& q, const SphericalPoint& p) {
  validate(q);
  const double amplitude = radial_wavefunction(q.n, q.l, p.r) * polar_factor(q.l, q.m, p.theta);
  return std::polar(1.0, q.m * p.phi) * amplitude;
}

double expectation_inv_r_power(int n, int l, int k) {
  validate({n, l, 0});
  const double n3 = static_cast<double>(n) * n * n;
  switch (k) {
    case 1:
      return 1.0 / (static_cast<double>(n) * n);
    case 2:
      return 1.0 / (n3 * (l + 0.5));
    case 3:
      if (l == 0) throw DivergenceError("<r^-3> diverges for s-states (l = 0)");
      return 1.0 / (n3 * l * (l + 0.5) * (l + 1.0));
    default:
      throw DomainError("expectation_inv_r_power supports k in {1, 2, 3}");
  }
}

std::complex<double> kinetic_action(const QuantumNumbers& q, const SphericalPoint& p) {
  if (!(p.r > 0.0)) throw SingularityError("kinetic action is singular at r = 0");
  return (energy_level(q.n) + 1.0 / p.r) * wavefunction(q, p);
}

RadialGrid product_grid(int n1, int n2, int node_count) {
  // R_{n1} R_{n2} r^2 ~ poly * exp(-r (1/n1 + 1/n2))
  return RadialGrid(node_count, 1.0 / (1.0 / n1 + 1.0 / n2));
}

QuadratureResult radial_matrix_element(int n1, int n2, int l, const std::function<double(double)>& g,
                                       const RadialGrid& grid) {
  validate({n1, l, 0});
  validate({n2, l, 0});
  return integrate_radial(
      [&](double r) { return radial_wavefunction(n1, l, r) * radial_wavefunction(n2, l, r) * g(r) * r * r; },
      grid);
}

}  // namespace hydrogen
}  // namespace minlen
