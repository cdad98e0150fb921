#include "minlen/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <string>
#include <unordered_map>

#include "minlen/errors.hpp"

namespace minlen {
namespace {

// Evaluates L_N(x) and L_{N-1}(x) with a shared scale factor exp(log_scale)
// so that large arguments do not overflow.
struct ScaledLaguerre {
  double current;
  double previous;
  double log_scale;
};

ScaledLaguerre laguerre_pair(int n, double x) {
  double p0 = 1.0;
  double p1 = 1.0 - x;
  double log_scale = 0.0;
  if (n == 0) return {p0, 0.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if (std::abs(p1) > 1e150) {
      p0 *= 1e-150;
      p1 *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  return {p1, p0, log_scale};
}

LaguerreRule build_laguerre_rule(int n) {
  // Golub-Welsch: Jacobi matrix with diagonal 2k+1 and off-diagonal k.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub[k - 1] = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EvaluationError("Gauss-Laguerre eigenvalue solve failed");

  LaguerreRule rule;
  rule.nodes.resize(n);
  rule.log_stripped_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    // Newton polish: L_N' = N (L_N - L_{N-1}) / x.
    for (int it = 0; it < 8; ++it) {
      const auto p = laguerre_pair(n, x);
      const double derivative = n * (p.current - p.previous) / x;
      const double dx = p.current / derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * x) break;
    }
    const auto p = laguerre_pair(n, x);
    // w = x / (N^2 L_{N-1}(x)^2); stripped weight carries e^{x}.
    const double log_prev = std::log(std::abs(p.previous)) + p.log_scale;
    rule.nodes[i] = x;
    rule.log_stripped_weights[i] = std::log(x) - 2.0 * std::log(static_cast<double>(n)) - 2.0 * log_prev + x;
  }
  return rule;
}

}  // namespace

std::shared_ptr<const LaguerreRule> laguerre_rule(int node_count) {
  if (node_count < 1) throw DomainError("node count must be positive");
  static std::mutex mutex;
  static std::unordered_map<int, std::shared_ptr<const LaguerreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[node_count];
  if (!slot) slot = std::make_shared<const LaguerreRule>(build_laguerre_rule(node_count));
  return slot;
}

RadialGrid::RadialGrid(int node_count, double scale) : scale_(scale) {
  if (node_count < kMinimumNodes) throw DomainError("radial grid needs at least 16 nodes");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("radial grid scale must be positive");
  const auto rule = laguerre_rule(node_count);
  nodes_.resize(node_count);
  weights_.resize(node_count);
  for (int i = 0; i < node_count; ++i) {
    nodes_[i] = scale * rule->nodes[i];
    weights_[i] = scale * std::exp(rule->log_stripped_weights[i]);
  }
}

RadialGrid RadialGrid::refined() const { return RadialGrid(2 * size(), scale_); }

int default_radial_nodes() {
  constexpr int kBuiltIn = 200;
  if (const char* env = std::getenv("MINLEN_GRID_NODES")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= kMinimumNodes && value <= 4096) return static_cast<int>(value);
  }
  return kBuiltIn;
}

namespace {

double weighted_sum(const std::function<double(double)>& f, const RadialGrid& grid) {
  double sum = 0.0;
  const auto nodes = grid.nodes();
  const auto weights = grid.weights();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double value = f(nodes[i]);
    if (!std::isfinite(value)) {
      throw EvaluationError("non-finite integrand at r = " + std::to_string(nodes[i]));
    }
    if (value != 0.0) sum += weights[i] * value;
  }
  return sum;
}

}  // namespace

QuadratureResult integrate_radial(const std::function<double(double)>& f, const RadialGrid& grid) {
  const double coarse = weighted_sum(f, grid);
  const double fine = weighted_sum(f, grid.refined());
  return {fine, std::abs(fine - coarse)};
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct LegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

LegendreRule gauss_legendre(int n) {
  LegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double panel_sum(const std::function<double(double)>& f, const std::vector<double>& breaks, const LegendreRule& rule) {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double half = 0.5 * (breaks[k + 1] - breaks[k]);
    const double mid = 0.5 * (breaks[k + 1] + breaks[k]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = mid + half * rule.nodes[i];
      const double value = f(r);
      if (!std::isfinite(value)) throw EvaluationError("non-finite integrand at r = " + std::to_string(r));
      sum += half * rule.weights[i] * value;
    }
  }
  return sum;
}

}  // namespace

PolarGrid make_polar_grid(int node_count) {
  if (node_count < kMinimumNodes) throw DomainError("polar grid needs at least 16 nodes");
  const auto rule = gauss_legendre(node_count);
  const double half = 0.5 * std::numbers::pi;
  PolarGrid grid;
  for (int i = 0; i < node_count; ++i) {
    grid.nodes.push_back(half * (1.0 + rule.nodes[i]));
    grid.weights.push_back(half * rule.weights[i]);
  }
  return grid;
}

QuadratureResult integrate_graded(const std::function<double(double)>& f, double feature, double max_width,
                                  double extent) {
  if (!(feature > 0.0) || !(max_width > 0.0) || !(extent > 0.0)) {
    throw DomainError("graded quadrature needs positive feature, width and extent");
  }
  std::vector<double> breaks{0.0};
  double width = std::min(feature / 16.0, max_width);
  while (breaks.back() < extent) {
    breaks.push_back(std::min(breaks.back() + width, extent));
    width = std::min(breaks.back(), max_width);
  }
  static const LegendreRule coarse_rule = gauss_legendre(kGradedPanelNodes);
  static const LegendreRule fine_rule = gauss_legendre(2 * kGradedPanelNodes);
  const double coarse = panel_sum(f, breaks, coarse_rule);
  const double fine = panel_sum(f, breaks, fine_rule);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace minlen
