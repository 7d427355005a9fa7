#include "helmdg/basis.hpp"

#include <stdexcept>
#include <string>

namespace helmdg {

ReferenceElement::ReferenceElement(int degree) : degree_(degree), n_basis_((degree + 1) * (degree + 2) / 2) {
  if (degree != 1 && degree != 2) {
    throw std::invalid_argument("unsupported polynomial degree " + std::to_string(degree) +
                                " (expected 1 or 2)");
  }
}

Point2 ReferenceElement::node(int i) const {
  static constexpr std::array<Point2, 6> nodes{
      Point2{0.0, 0.0}, Point2{1.0, 0.0}, Point2{0.0, 1.0},
      Point2{0.5, 0.0}, Point2{0.5, 0.5}, Point2{0.0, 0.5}};
  if (i < 0 || i >= n_basis_) throw std::out_of_range("reference node index");
  return nodes[i];
}

BasisSample ReferenceElement::evaluate(Point2 p) const {
  // Barycentric coordinates and their (constant) gradients.
  const double l0 = 1.0 - p.x - p.y, l1 = p.x, l2 = p.y;
  const Point2 g0{-1.0, -1.0}, g1{1.0, 0.0}, g2{0.0, 1.0};

  BasisSample s;
  if (degree_ == 1) {
    s.value[0] = l0;
    s.value[1] = l1;
    s.value[2] = l2;
    s.gradient[0] = g0;
    s.gradient[1] = g1;
    s.gradient[2] = g2;
    return s;
  }

  s.value[0] = l0 * (2.0 * l0 - 1.0);
  s.value[1] = l1 * (2.0 * l1 - 1.0);
  s.value[2] = l2 * (2.0 * l2 - 1.0);
  s.value[3] = 4.0 * l0 * l1;
  s.value[4] = 4.0 * l1 * l2;
  s.value[5] = 4.0 * l2 * l0;

  s.gradient[0] = (4.0 * l0 - 1.0) * g0;
  s.gradient[1] = (4.0 * l1 - 1.0) * g1;
  s.gradient[2] = (4.0 * l2 - 1.0) * g2;
  s.gradient[3] = 4.0 * (l1 * g0 + l0 * g1);
  s.gradient[4] = 4.0 * (l2 * g1 + l1 * g2);
  s.gradient[5] = 4.0 * (l0 * g2 + l2 * g0);
  return s;
}

AffineMap::AffineMap(Point2 v0, Point2 v1, Point2 v2)
    : origin_(v0), e1_(v1 - v0), e2_(v2 - v0), det_(cross(e1_, e2_)) {}

Point2 AffineMap::to_physical(Point2 ref) const {
  return origin_ + ref.x * e1_ + ref.y * e2_;
}

Point2 AffineMap::to_reference(Point2 x) const {
  const Point2 d = x - origin_;
  return {cross(d, e2_) / det_, cross(e1_, d) / det_};
}

Point2 AffineMap::push_gradient(Point2 g) const {
  // J^{-T} = (1/det) [e2.y  -e1.y; -e2.x  e1.x]
  return {(e2_.y * g.x - e1_.y * g.y) / det_, (-e2_.x * g.x + e1_.x * g.y) / det_};
}

}  // namespace helmdg
