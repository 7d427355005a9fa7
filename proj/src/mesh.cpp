#include "helmdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace helmdg {

double norm(Point2 a) { return std::hypot(a.x, a.y); }

char edge_kind_code(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Interior: return 'I';
    case EdgeKind::Robin: return 'R';
    case EdgeKind::Dirichlet: return 'D';
  }
  return '?';
}

EdgeKind edge_kind_from_code(char code) {
  switch (code) {
    case 'I': return EdgeKind::Interior;
    case 'R': return EdgeKind::Robin;
    case 'D': return EdgeKind::Dirichlet;
    default: throw std::invalid_argument(std::string("unknown edge kind code '") + code + "'");
  }
}

namespace {

std::uint64_t edge_key(Index a, Index b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

Point2 triangle_centroid(std::span<const Point2> v, const Triangle& t) {
  const Point2 s = v[t.vertices[0]] + v[t.vertices[1]] + v[t.vertices[2]];
  return (1.0 / 3.0) * s;
}

double triangle_signed_area(std::span<const Point2> v, const Triangle& t) {
  const Point2 a = v[t.vertices[0]];
  return 0.5 * cross(v[t.vertices[1]] - a, v[t.vertices[2]] - a);
}

}  // namespace

std::vector<Edge> classify_edges(std::span<const Point2> vertices,
                                 std::span<const Triangle> triangles,
                                 const std::function<EdgeKind(Index, Index)>& boundary_kind) {
  std::vector<Edge> edges;
  std::vector<int> neighbour_count;
  std::unordered_map<std::uint64_t, Index> lookup;
  lookup.reserve(triangles.size() * 2);

  for (const Triangle& t : triangles) {
    for (int local = 0; local < 3; ++local) {
      const Index a = t.vertices[local];
      const Index b = t.vertices[(local + 1) % 3];
      auto [it, inserted] = lookup.try_emplace(edge_key(a, b), static_cast<Index>(edges.size()));
      if (inserted) {
        Edge e;
        e.vertices = {std::min(a, b), std::max(a, b)};
        e.cells = {t.label, -1};
        edges.push_back(e);
        neighbour_count.push_back(1);
        continue;
      }
      Edge& e = edges[it->second];
      if (++neighbour_count[it->second] > 2) {
        throw std::runtime_error("non-manifold edge (" + std::to_string(e.vertices[0]) + ", " +
                                 std::to_string(e.vertices[1]) + ") has three or more triangles");
      }
      e.cells[1] = t.label;
    }
  }

  for (Edge& e : edges) {
    if (e.cells[1] >= 0) {
      e.kind = EdgeKind::Interior;
      if (e.cells[1] > e.cells[0]) std::swap(e.cells[0], e.cells[1]);
    } else {
      e.kind = boundary_kind(e.vertices[0], e.vertices[1]);
      if (e.kind == EdgeKind::Interior) {
        throw std::runtime_error("boundary edge classified as interior");
      }
    }

    const Point2 a = vertices[e.vertices[0]];
    const Point2 b = vertices[e.vertices[1]];
    const Point2 d = b - a;
    e.length = norm(d);
    if (!(e.length > 0.0)) throw std::runtime_error("zero-length edge");

    // Outward normal of cells[0].
    Point2 n{d.y / e.length, -d.x / e.length};
    const Point2 mid = 0.5 * (a + b);
    if (dot(n, mid - triangle_centroid(vertices, triangles[e.cells[0]])) < 0.0) {
      n = -1.0 * n;
    }
    e.normal = n;
    e.tangent = {-n.y, n.x};
  }
  return edges;
}

std::size_t Mesh::count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; }));
}

std::vector<Index> Mesh::interior_and_dirichlet_edges() const {
  std::vector<Index> ids;
  for (Index i = 0; i < static_cast<Index>(edges_.size()); ++i) {
    if (edges_[i].kind != EdgeKind::Robin) ids.push_back(i);
  }
  return ids;
}

double Mesh::signed_area(Index triangle) const {
  return triangle_signed_area(vertices_, triangles_[triangle]);
}

Point2 Mesh::centroid(Index triangle) const {
  return triangle_centroid(vertices_, triangles_[triangle]);
}

Mesh Mesh::from_triangles(std::vector<Point2> vertices, std::vector<std::array<Index, 3>> triangles,
                          const std::function<EdgeKind(Index, Index)>& boundary_kind) {
  Mesh mesh;
  mesh.vertices_ = std::move(vertices);
  const auto nv = static_cast<Index>(mesh.vertices_.size());
  for (const Point2& p : mesh.vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("mesh vertex has non-finite coordinates");
    }
  }

  mesh.triangles_.reserve(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (Index v : triangles[t]) {
      if (v < 0 || v >= nv) throw std::invalid_argument("triangle vertex index out of range");
    }
    mesh.triangles_.push_back({triangles[t], static_cast<Index>(t)});
    if (!(mesh.signed_area(static_cast<Index>(t)) > 0.0)) {
      throw std::invalid_argument("triangle " + std::to_string(t) +
                                  " is not counter-clockwise with positive area");
    }
  }

  mesh.edges_ = classify_edges(mesh.vertices_, mesh.triangles_, boundary_kind);
  mesh.set_geometry();
  return mesh;
}

Mesh Mesh::from_classified(std::vector<Point2> vertices, std::vector<std::array<Index, 3>> triangles,
                           std::span<const std::pair<std::array<Index, 2>, EdgeKind>> edge_kinds) {
  std::unordered_map<std::uint64_t, EdgeKind> kinds;
  for (const auto& [ends, kind] : edge_kinds) kinds[edge_key(ends[0], ends[1])] = kind;

  Mesh mesh = from_triangles(std::move(vertices), std::move(triangles), [&](Index a, Index b) {
    auto it = kinds.find(edge_key(a, b));
    if (it == kinds.end()) throw std::runtime_error("boundary edge missing from edge list");
    return it->second;
  });
  if (mesh.edges_.size() != edge_kinds.size()) {
    throw std::runtime_error("edge list does not match triangle edges");
  }
  for (const Edge& e : mesh.edges_) {
    auto it = kinds.find(edge_key(e.vertices[0], e.vertices[1]));
    if (it == kinds.end() || it->second != e.kind) {
      throw std::runtime_error("edge kind disagrees with triangle adjacency");
    }
  }
  return mesh;
}

void Mesh::set_geometry() {
  h_ = 0.0;
  for (const Triangle& t : triangles_) {
    for (int i = 0; i < 3; ++i) {
      h_ = std::max(h_, norm(vertices_[t.vertices[(i + 1) % 3]] - vertices_[t.vertices[i]]));
    }
  }
}

Mesh build_graded_square(int n, int nx_factor) {
  if (n < 1 || nx_factor < 1) {
    throw std::invalid_argument("build_graded_square: n and nx_factor must be positive");
  }
  const int ny = n;
  const int nx = nx_factor * n;

  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int i = 0; i <= ny; ++i) {
    for (int j = 0; j <= nx; ++j) {
      vertices.push_back({static_cast<double>(j) / nx - 0.5, static_cast<double>(i) / ny - 0.5});
    }
  }

  auto vid = [nx](int i, int j) { return static_cast<Index>(i * (nx + 1) + j); };
  std::vector<std::array<Index, 3>> triangles;
  triangles.reserve(2 * static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < ny; ++i) {
    for (int j = 0; j < nx; ++j) {
      const Index ll = vid(i, j), lr = vid(i, j + 1), ur = vid(i + 1, j + 1), ul = vid(i + 1, j);
      triangles.push_back({ll, lr, ur});
      triangles.push_back({ll, ur, ul});
    }
  }
  return Mesh::from_triangles(std::move(vertices), std::move(triangles),
                              [](Index, Index) { return EdgeKind::Robin; });
}

Mesh build_uniform_square(int n) {
  if (n < 1) throw std::invalid_argument("build_uniform_square: n must be positive");
  return build_graded_square(n, 1);
}

double scatterer_radius() { return 1.0 / std::sqrt(5.0); }

Mesh build_annulus_square(int n_tangential, int n_radial, double grading) {
  if (n_tangential < 8 || n_tangential % 4 != 0) {
    throw std::invalid_argument("build_annulus_square: n_tangential must be a multiple of 4, >= 8");
  }
  if (n_radial < 1) throw std::invalid_argument("build_annulus_square: n_radial must be >= 1");
  if (!std::isfinite(grading) || grading < 1.0) {
    throw std::invalid_argument("build_annulus_square: grading must be finite and >= 1");
  }

  // Radial stations s_0 = 0 < ... < s_{n_radial} = 1; widths grow by a
  // constant ratio whose (n_radial-1)th power is `grading`.
  std::vector<double> station(n_radial + 1, 0.0);
  {
    const double ratio = n_radial > 1 ? std::pow(grading, 1.0 / (n_radial - 1)) : 1.0;
    double width = 1.0, total = 0.0;
    for (int r = 0; r < n_radial; ++r) {
      total += width;
      station[r + 1] = total;
      width *= ratio;
    }
    for (double& s : station) s /= total;
    station[n_radial] = 1.0;
  }

  const int per_side = n_tangential / 4;
  const double radius = scatterer_radius();
  std::vector<Point2> inner(n_tangential), outer(n_tangential);
  for (int j = 0; j < n_tangential; ++j) {
    const double theta = std::numbers::pi / 4 + 2.0 * std::numbers::pi * j / n_tangential;
    inner[j] = {radius * std::cos(theta), radius * std::sin(theta)};
    // Walk the square counter-clockwise from the corner (0.5, 0.5).
    const int side = j / per_side;
    const double f = static_cast<double>(j % per_side) / per_side;
    switch (side) {
      case 0: outer[j] = {0.5 - f, 0.5}; break;
      case 1: outer[j] = {-0.5, 0.5 - f}; break;
      case 2: outer[j] = {-0.5 + f, -0.5}; break;
      default: outer[j] = {0.5, -0.5 + f}; break;
    }
  }

  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n_radial + 1) * n_tangential);
  for (int r = 0; r <= n_radial; ++r) {
    const double s = station[r];
    for (int j = 0; j < n_tangential; ++j) {
      vertices.push_back((1.0 - s) * inner[j] + s * outer[j]);
    }
  }

  auto vid = [n_tangential](int r, int j) {
    return static_cast<Index>(r * n_tangential + (j % n_tangential));
  };
  auto oriented = [&vertices](Index a, Index b, Index c) -> std::array<Index, 3> {
    if (cross(vertices[b] - vertices[a], vertices[c] - vertices[a]) < 0.0) return {a, c, b};
    return {a, b, c};
  };

  std::vector<std::array<Index, 3>> triangles;
  triangles.reserve(2 * static_cast<std::size_t>(n_tangential) * n_radial);
  for (int r = 0; r < n_radial; ++r) {
    for (int j = 0; j < n_tangential; ++j) {
      const Index a = vid(r, j), b = vid(r, j + 1), c = vid(r + 1, j + 1), d = vid(r + 1, j);
      triangles.push_back(oriented(a, b, c));
      triangles.push_back(oriented(a, c, d));
    }
  }

  const Index inner_count = n_tangential;
  return Mesh::from_triangles(std::move(vertices), std::move(triangles),
                              [inner_count](Index a, Index) {
                                return a < inner_count ? EdgeKind::Dirichlet : EdgeKind::Robin;
                              });
}

}  // namespace helmdg
