#include "helmdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace helmdg {

void gauss_legendre(int n_points, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n_points < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  nodes.assign(n_points, 0.0);
  weights.assign(n_points, 0.0);
  const int n = n_points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureRule element_quadrature(int degree_exactness) {
  if (degree_exactness < 0 || degree_exactness > 6) {
    throw std::invalid_argument("element_quadrature: unsupported degree " +
                                std::to_string(degree_exactness));
  }
  // Collapsed map x = u, y = v (1 - u), Jacobian (1 - u). A degree-d
  // integrand becomes degree d + 1 in u and d in v.
  const int m = (degree_exactness + 1) / 2 + 1;
  std::vector<double> t, w;
  gauss_legendre(m, t, w);

  QuadratureRule rule;
  rule.exactness = degree_exactness;
  for (int a = 0; a < m; ++a) {
    const double u = 0.5 * (t[a] + 1.0);
    for (int b = 0; b < m; ++b) {
      const double v = 0.5 * (t[b] + 1.0);
      rule.points.push_back({u, v * (1.0 - u)});
      rule.weights.push_back(0.25 * w[a] * w[b] * (1.0 - u));
    }
  }
  return rule;
}

QuadratureRule edge_quadrature(int degree_exactness) {
  if (degree_exactness < 0 || degree_exactness > 9) {
    throw std::invalid_argument("edge_quadrature: unsupported degree " +
                                std::to_string(degree_exactness));
  }
  const int m = degree_exactness / 2 + 1;
  std::vector<double> t, w;
  gauss_legendre(m, t, w);

  QuadratureRule rule;
  rule.exactness = degree_exactness;
  for (int a = 0; a < m; ++a) {
    rule.points.push_back({0.5 * (t[a] + 1.0), 0.0});
    rule.weights.push_back(0.5 * w[a]);
  }
  return rule;
}

}  // namespace helmdg
