#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "helmdg/types.hpp"

namespace helmdg {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);

/// A cell of the partition. The label is the triangle's position in the
/// element enumeration; it orients jumps on interior edges.
struct Triangle {
  std::array<Index, 3> vertices{};
  Index label = 0;
};

enum class EdgeKind { Interior, Robin, Dirichlet };

char edge_kind_code(EdgeKind kind);
EdgeKind edge_kind_from_code(char code);

/// Classified mesh edge.
///
/// `cells[0]` is the triangle the normal points out of: the larger label for
/// interior edges, the only neighbour for boundary edges (where the normal is
/// then the outward normal of the domain). `cells[1]` is the smaller-label
/// neighbour, or -1 on the boundary. The tangent is the normal rotated +90°.
struct Edge {
  std::array<Index, 2> vertices{};
  EdgeKind kind = EdgeKind::Interior;
  std::array<Index, 2> cells{-1, -1};
  Point2 normal;
  Point2 tangent;
  double length = 0.0;

  bool is_boundary() const { return kind != EdgeKind::Interior; }
};

/// Triangular partition with classified edges. Immutable once built.
class Mesh {
 public:
  Mesh() = default;

  std::span<const Point2> vertices() const { return vertices_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Maximum triangle diameter.
  double h() const { return h_; }

  std::size_t count(EdgeKind kind) const;

  /// Edges in E^I ∪ E^D (interior and Dirichlet), in edge-list order.
  std::vector<Index> interior_and_dirichlet_edges() const;

  double signed_area(Index triangle) const;
  Point2 centroid(Index triangle) const;

  /// Builds a mesh from vertices and counter-clockwise triangles (labels are
  /// assigned by position). Boundary edges are classified by `boundary_kind`,
  /// which receives the two endpoint vertex ids.
  static Mesh from_triangles(std::vector<Point2> vertices,
                             std::vector<std::array<Index, 3>> triangles,
                             const std::function<EdgeKind(Index, Index)>& boundary_kind);

  /// Rebuilds a mesh whose edge kinds are already known (used by the reader).
  static Mesh from_classified(std::vector<Point2> vertices,
                              std::vector<std::array<Index, 3>> triangles,
                              std::span<const std::pair<std::array<Index, 2>, EdgeKind>> edge_kinds);

 private:
  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  double h_ = 0.0;

  void set_geometry();
};

/// Finds every distinct triangle edge, classifies it and fills in its
/// orientation data. Edges shared by two triangles are Interior; boundary
/// edges are classified by `boundary_kind` (endpoint vertex ids in, Robin or
/// Dirichlet out). Edges are listed in order of first appearance while
/// walking the triangles. Throws std::runtime_error on an edge with three or
/// more neighbours or on inconsistent classification.
std::vector<Edge> classify_edges(std::span<const Point2> vertices,
                                 std::span<const Triangle> triangles,
                                 const std::function<EdgeKind(Index, Index)>& boundary_kind);

/// n×n squares on [-0.5,0.5]², each split along its lower-left→upper-right
/// diagonal. Squares are enumerated row-major from the bottom row; within a
/// square the lower-right triangle precedes the upper-left one. All boundary
/// edges are Robin.
Mesh build_uniform_square(int n);

/// Same conventions as build_uniform_square with nx_factor·n columns and n
/// rows of squares.
Mesh build_graded_square(int n, int nx_factor);

/// Ring between the circle of radius 1/√5 (Dirichlet) and the boundary of
/// [-0.5,0.5]² (Robin), built by transfinite interpolation. `n_tangential`
/// must be a multiple of 4 so the square's corners are mesh vertices.
/// `grading` is the ratio of the outermost to the innermost radial layer
/// width; layers grow geometrically away from the circle.
Mesh build_annulus_square(int n_tangential, int n_radial, double grading);

/// Radius of the circular scatterer.
double scatterer_radius();

}  // namespace helmdg
