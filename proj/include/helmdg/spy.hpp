#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "helmdg/sparse.hpp"

namespace helmdg {

/// Sparsity plot in the style of Matlab's spy: stored entries drawn on an
/// N×N grid (row 0 at the top, vertical runs merged into one rect), a frame,
/// and the caption `nz = <count>`. Stored entries count even when their
/// value is zero.
void spy_svg(std::ostream& out, const SparseComplexMatrix& a, const std::string& title = {});

/// Throws std::runtime_error if the file cannot be written.
void spy_svg(const std::filesystem::path& path, const SparseComplexMatrix& a, const std::string& title = {});

}  // namespace helmdg
