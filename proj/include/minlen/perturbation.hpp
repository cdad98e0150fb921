#pragma once

#include <map>

#include "minlen/deformation.hpp"
#include "minlen/hydrogen.hpp"

namespace minlen::perturbation {

struct MatrixElementRequest {
  int n;
  int n_prime;
  int l;
  DeformationParameters params;
  int grid_nodes;  // starting radial Gauss-Laguerre node count
};

// Absolute quadrature error (a.u.) above which element evaluation fails.
inline constexpr double kElementTolerance = 1e-10;

// Grids are doubled from the requested size up to this many nodes before
// giving up.
inline constexpr int kMaxElementNodes = 3200;

/// <n'l| (r^2 + b^2)^{-1/2} |nl>.
double regularized_coulomb_element(int n, int n_prime, int l, double b, int grid_nodes);

/// <n'l| 1/r - (r^2 + b^2)^{-1/2} |nl>, evaluated without cancellation on
/// panels graded from r = b (the Laguerre grid cannot resolve that scale).
double coulomb_regularization_element(int n, int n_prime, int l, double b);

/// <n'l| r^-k |nl> by quadrature. k = 3 with l = 0 throws DivergenceError.
double inv_r_power_element(int n, int n_prime, int l, int k, int grid_nodes);

/// V_{nn'} with the regularized Coulomb difference term and the
/// (M/2)(2b+3b')(E_n+E_n') <1/r> and M(2b+b') <1/r^2> blocks.
/// The full element of V between |nlm> and |n'lm> is
/// 2 M beta' E_n^2 delta_{nn'} + V_{nn'}.
double matrix_element_V(const MatrixElementRequest& req);

/// Full element <n'lm|V|nlm> including the diagonal 2 M beta' E_n^2.
double full_matrix_element(const MatrixElementRequest& req);

/// <n'lm|V|nlm> for the l >= 1 operator
///   V = beta' p^4 / 2M + (2b - b') e^2 / 4 (r^-1 p^2 + p^2 r^-1 + 2 hbar^2 r^-3),
/// linear in the parameters. Throws DivergenceError for l = 0.
double linear_matrix_element(int n, int n_prime, int l, const DeformationParameters& params,
                             int grid_nodes);

/// Diagonal <nlm|V|nlm> of the l >= 1 operator from closed-form <r^-k>.
double first_order_energy_shift(int n, int l, const DeformationParameters& params);

struct CorrectionExpansion {
  QuantumNumbers base{};
  std::map<int, double> coefficients;  // n' -> V_{nn'} / (E_n - E_n')
  int n_max = 0;

  bool empty() const noexcept { return coefficients.empty(); }
};

inline constexpr int kDefaultNMax = 12;

/// c_{n'} for n' = l+1 .. n_max, n' != n. Requires l >= 1 and n_max > n.
CorrectionExpansion correction_expansion(const QuantumNumbers& base, const DeformationParameters& params,
                                         int n_max, int grid_nodes);

/// psi_nlm + sum_{n'} c_{n'} psi_{n'lm}.
std::complex<double> corrected_wavefunction(const CorrectionExpansion& exp, const SphericalPoint& p);

}  // namespace minlen::perturbation
