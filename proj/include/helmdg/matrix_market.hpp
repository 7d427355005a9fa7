#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "helmdg/sparse.hpp"

namespace helmdg {

/// Writes `%%MatrixMarket matrix coordinate complex general`, 1-based,
/// values with 17 significant digits, in column-major order.
void write_matrix_market(std::ostream& out, const SparseComplexMatrix& a);
void write_matrix_market(const std::filesystem::path& path, const SparseComplexMatrix& a);

/// Reads a square coordinate matrix (complex, real or pattern; general or
/// symmetric). Throws std::runtime_error on malformed input.
SparseComplexMatrix read_matrix_market(std::istream& in);
SparseComplexMatrix read_matrix_market(const std::filesystem::path& path);

/// Dense complex vector as `%%MatrixMarket matrix array complex general`.
void write_vector_market(const std::filesystem::path& path, const std::vector<Complex>& v);

/// Permutation files hold N whitespace-separated 0-based indices (the
/// elimination order).
void write_permutation(const std::filesystem::path& path, const Permutation& p);
Permutation read_permutation(const std::filesystem::path& path);

}  // namespace helmdg
