#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace minlen {

struct QuadratureResult {
  double value;
  double error;  // |Q(2N) - Q(N)|
};

/// Gauss-Laguerre rule on [0, inf) mapped to r = scale * x, with the
/// exponential weight folded into the weights so that
///   sum_i weights[i] * f(nodes[i])  ~  int_0^inf f(r) dr.
/// The rule is exact for f(r) = poly(r) * exp(-r / scale) with degree < 2N;
/// choose scale to match the decay of the integrand.
class RadialGrid {
 public:
  RadialGrid(int node_count, double scale);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  double scale() const noexcept { return scale_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  // Same rule with twice the nodes.
  RadialGrid refined() const;

 private:
  double scale_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Default radial node count; the MINLEN_GRID_NODES environment variable
// overrides the built-in 200.
int default_radial_nodes();

inline constexpr int kMinimumNodes = 16;

/// Weighted sum on `grid` and on `grid.refined()`; returns the refined
/// value and the difference as error estimate. Throws EvaluationError if
/// the integrand is non-finite on any node.
QuadratureResult integrate_radial(const std::function<double(double)>& f, const RadialGrid& grid);

/// Gauss-Legendre rule on (0, pi); every node is strictly interior.
struct PolarGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

PolarGrid make_polar_grid(int node_count);

/// Composite Gauss-Legendre on [0, extent] for integrands with structure on
/// the length `feature` near the origin: the first panel is feature / 16
/// wide, later panels double until they reach max_width. The error estimate
/// compares kGradedPanelNodes and twice as many points per panel.
QuadratureResult integrate_graded(const std::function<double(double)>& f, double feature, double max_width,
                                  double extent);

inline constexpr int kGradedPanelNodes = 20;

// Unit Gauss-Laguerre (weight e^{-x}) nodes and log-weights log(w_i) + x_i,
// cached per node count. Exposed for testing.
struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> log_stripped_weights;
};
std::shared_ptr<const LaguerreRule> laguerre_rule(int node_count);

}  // namespace minlen
