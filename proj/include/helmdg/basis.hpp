#pragma once

#include <array>

#include "helmdg/mesh.hpp"

namespace helmdg {

inline constexpr int kMaxBasis = 6;

/// Values and reference gradients of all basis functions at one point.
struct BasisSample {
  std::array<double, kMaxBasis> value{};
  std::array<Point2, kMaxBasis> gradient{};
};

/// Lagrange P1 or P2 element on the unit reference triangle.
///
/// Node order: the three vertices (0,0), (1,0), (0,1), then for p = 2 the
/// midpoints of edges 0-1, 1-2, 2-0.
class ReferenceElement {
 public:
  explicit ReferenceElement(int degree);

  int degree() const { return degree_; }
  int n_basis() const { return n_basis_; }

  BasisSample evaluate(Point2 reference_point) const;

  /// Reference coordinates of node `i`.
  Point2 node(int i) const;

 private:
  int degree_;
  int n_basis_;
};

/// Affine map from the reference triangle onto a mesh triangle.
class AffineMap {
 public:
  AffineMap(Point2 v0, Point2 v1, Point2 v2);

  Point2 to_physical(Point2 ref) const;
  Point2 to_reference(Point2 x) const;

  /// J^{-T} applied to a reference gradient.
  Point2 push_gradient(Point2 ref_gradient) const;

  double det() const { return det_; }
  double area() const { return 0.5 * det_; }

 private:
  Point2 origin_;
  // Columns of J.
  Point2 e1_, e2_;
  double det_;
};

}  // namespace helmdg
