#pragma once

#include <complex>
#include <cstdint>

namespace helmdg {

using Complex = std::complex<double>;

/// Row/column/vertex index. 32 bits covers every matrix this library builds.
using Index = std::int32_t;

/// Offsets into compressed storage; factor fill can exceed 2^31 on large meshes.
using Offset = std::int64_t;

}  // namespace helmdg
