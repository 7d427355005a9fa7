#pragma once

#include <filesystem>
#include <iosfwd>

#include "helmdg/mesh.hpp"

namespace helmdg {

// Plain-text mesh format, whitespace delimited, 0-based indices:
//
//   helmdg-mesh v1
//   <num_vertices> <num_triangles> <num_edges>
//   vertices
//   <x> <y>                      (num_vertices lines)
//   triangles
//   <v0> <v1> <v2>               (counter-clockwise; line number = label)
//   edges
//   <v0> <v1> <I|R|D> <cell0> <cell1>
//
// cell0 is the triangle the edge normal points out of; cell1 is -1 on the
// boundary. Normals, tangents and lengths are recomputed on read.

void write_mesh(std::ostream& out, const Mesh& mesh);
void write_mesh(const std::filesystem::path& path, const Mesh& mesh);

Mesh read_mesh(std::istream& in);
Mesh read_mesh(const std::filesystem::path& path);

}  // namespace helmdg
