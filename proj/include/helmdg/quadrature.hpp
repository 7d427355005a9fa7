#pragma once

#include <vector>

#include "helmdg/mesh.hpp"

namespace helmdg {

/// Quadrature on a reference domain. Triangle rules live on the unit
/// triangle {x, y >= 0, x + y <= 1} (weights sum to 1/2); segment rules on
/// [0, 1] store the point in `points[i].x` (weights sum to 1).
struct QuadratureRule {
  std::vector<Point2> points;
  std::vector<double> weights;
  int exactness = 0;

  std::size_t size() const { return weights.size(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n_points, std::vector<double>& nodes, std::vector<double>& weights);

/// Conical-product (collapsed Gauss) rule exact for polynomials of total
/// degree <= degree_exactness. Supported: 0..6.
QuadratureRule element_quadrature(int degree_exactness);

/// Gauss-Legendre rule on [0, 1] exact to degree_exactness. Supported: 0..9.
QuadratureRule edge_quadrature(int degree_exactness);

}  // namespace helmdg
