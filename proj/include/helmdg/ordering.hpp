#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "helmdg/sparse.hpp"

namespace helmdg {

/// Rooted breadth-first level structure of one connected component.
struct LevelStructure {
  std::vector<std::vector<Index>> levels;

  int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
  std::size_t vertex_count() const;
};

LevelStructure level_structure(const AdjacencyGraph& g, Index root);

/// Iterated BFS: re-root at a minimum-degree vertex (lowest index on ties)
/// of the last level until the eccentricity stops growing.
Index pseudo_peripheral_vertex(const AdjacencyGraph& g, Index start);

/// Reverse Cuthill-McKee. Components are handled in ascending order of their
/// smallest vertex, each started from a pseudo-peripheral vertex found from
/// its minimum-degree vertex; neighbours are visited by ascending degree,
/// then index. The concatenated Cuthill-McKee order is reversed.
Permutation rcm(const AdjacencyGraph& g);

struct AmdOptions {
  /// Absorb every element whose variable set is covered by the new pivot's.
  bool aggressive_absorption = true;
  /// After every pivot, recompute exact external degrees from the quotient
  /// graph and throw std::logic_error if an approximate degree undershoots.
  /// Quadratic; meant for tests.
  bool check_degree_bounds = false;
};

struct AmdStats {
  Index pivots = 0;
  Index supervariables_merged = 0;
  Index elements_absorbed = 0;
  Index degree_checks = 0;
};

/// Approximate minimum degree ordering on a quotient graph with
/// supervariables and element absorption. Ties go to the lowest vertex
/// index; supervariable members follow their principal variable.
Permutation amd(const AdjacencyGraph& g, const AmdOptions& options = {}, AmdStats* stats = nullptr);

inline constexpr Index kDefaultLeafThreshold = 32;

/// Nested dissection with level-structure vertex separators. Pieces of at
/// most `leaf_threshold` vertices, and pieces without a useful separator,
/// are ordered by amd(). Each piece emits its first part, its second part,
/// then its separator.
Permutation nested_dissection(const AdjacencyGraph& g, Index leaf_threshold = kDefaultLeafThreshold);

struct BandwidthProfile {
  Index bandwidth = 0;
  Offset profile = 0;
};

/// bandwidth = max |i - j| over stored entries;
/// profile = Σ_i (i - min{j <= i : A(i, j) stored}).
BandwidthProfile bandwidth_profile(const SparseComplexMatrix& a);

enum class OrderingMethod { Natural, Amd, NestedDissection, Rcm };

std::string_view method_name(OrderingMethod method);
OrderingMethod method_from_name(std::string_view name);

/// Dispatch helper; Natural returns the identity.
Permutation compute_ordering(const AdjacencyGraph& g, OrderingMethod method,
                             Index leaf_threshold = kDefaultLeafThreshold);

}  // namespace helmdg
