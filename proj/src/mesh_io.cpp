#include "helmdg/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace helmdg {

namespace {

void expect_token(std::istream& in, const std::string& expected) {
  std::string token;
  if (!(in >> token) || token != expected) {
    throw std::runtime_error("mesh file: expected '" + expected + "', got '" + token + "'");
  }
}

}  // namespace

void write_mesh(std::ostream& out, const Mesh& mesh) {
  out << "helmdg-mesh v1\n";
  out << mesh.vertices().size() << ' ' << mesh.triangles().size() << ' ' << mesh.edges().size()
      << '\n';
  out << "vertices\n" << std::setprecision(17);
  for (const Point2& p : mesh.vertices()) out << p.x << ' ' << p.y << '\n';
  out << "triangles\n";
  for (const Triangle& t : mesh.triangles()) {
    out << t.vertices[0] << ' ' << t.vertices[1] << ' ' << t.vertices[2] << '\n';
  }
  out << "edges\n";
  for (const Edge& e : mesh.edges()) {
    out << e.vertices[0] << ' ' << e.vertices[1] << ' ' << edge_kind_code(e.kind) << ' '
        << e.cells[0] << ' ' << e.cells[1] << '\n';
  }
}

void write_mesh(const std::filesystem::path& path, const Mesh& mesh) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_mesh(out, mesh);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Mesh read_mesh(std::istream& in) {
  expect_token(in, "helmdg-mesh");
  expect_token(in, "v1");
  std::size_t nv = 0, nt = 0, ne = 0;
  if (!(in >> nv >> nt >> ne)) throw std::runtime_error("mesh file: bad counts line");

  expect_token(in, "vertices");
  std::vector<Point2> vertices(nv);
  for (Point2& p : vertices) {
    if (!(in >> p.x >> p.y)) throw std::runtime_error("mesh file: truncated vertex section");
  }

  expect_token(in, "triangles");
  std::vector<std::array<Index, 3>> triangles(nt);
  for (auto& t : triangles) {
    if (!(in >> t[0] >> t[1] >> t[2])) throw std::runtime_error("mesh file: truncated triangle section");
  }

  expect_token(in, "edges");
  std::vector<std::pair<std::array<Index, 2>, EdgeKind>> kinds(ne);
  for (auto& [ends, kind] : kinds) {
    char code = 0;
    Index c0 = 0, c1 = 0;
    if (!(in >> ends[0] >> ends[1] >> code >> c0 >> c1)) {
      throw std::runtime_error("mesh file: truncated edge section");
    }
    kind = edge_kind_from_code(code);
  }
  return Mesh::from_classified(std::move(vertices), std::move(triangles), kinds);
}

Mesh read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_mesh(in);
}

}  // namespace helmdg
