#include <algorithm>
#include <stdexcept>
#include <string>

#include "helmdg/ordering.hpp"

namespace helmdg {

std::size_t LevelStructure::vertex_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.size();
  return n;
}

LevelStructure level_structure(const AdjacencyGraph& g, Index root) {
  if (root < 0 || root >= g.size()) throw std::out_of_range("level_structure: root out of range");
  std::vector<char> seen(g.size(), 0);
  LevelStructure ls;
  ls.levels.push_back({root});
  seen[root] = 1;
  while (true) {
    std::vector<Index> next;
    for (Index v : ls.levels.back()) {
      for (Index w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    ls.levels.push_back(std::move(next));
  }
  return ls;
}

Index pseudo_peripheral_vertex(const AdjacencyGraph& g, Index start) {
  Index root = start;
  LevelStructure ls = level_structure(g, root);
  while (true) {
    const auto& last = ls.levels.back();
    const Index candidate = *std::min_element(last.begin(), last.end(), [&g](Index a, Index b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    LevelStructure trial = level_structure(g, candidate);
    if (trial.eccentricity() <= ls.eccentricity()) return root;
    root = candidate;
    ls = std::move(trial);
  }
}

BandwidthProfile bandwidth_profile(const SparseComplexMatrix& a) {
  BandwidthProfile bp;
  std::vector<Index> first(a.size(), -1);
  for (Index j = 0; j < a.size(); ++j) {
    for (Index i : a.column_rows(j)) {
      bp.bandwidth = std::max(bp.bandwidth, static_cast<Index>(i > j ? i - j : j - i));
      if (j <= i && first[i] < 0) first[i] = j;
    }
  }
  for (Index i = 0; i < a.size(); ++i) {
    if (first[i] >= 0) bp.profile += i - first[i];
  }
  return bp;
}

std::string_view method_name(OrderingMethod method) {
  switch (method) {
    case OrderingMethod::Natural: return "natural";
    case OrderingMethod::Amd: return "amd";
    case OrderingMethod::NestedDissection: return "nd";
    case OrderingMethod::Rcm: return "rcm";
  }
  return "?";
}

OrderingMethod method_from_name(std::string_view name) {
  if (name == "natural") return OrderingMethod::Natural;
  if (name == "amd") return OrderingMethod::Amd;
  if (name == "nd") return OrderingMethod::NestedDissection;
  if (name == "rcm") return OrderingMethod::Rcm;
  throw std::invalid_argument("unknown ordering method '" + std::string(name) + "'");
}

Permutation compute_ordering(const AdjacencyGraph& g, OrderingMethod method, Index leaf_threshold) {
  switch (method) {
    case OrderingMethod::Natural: return Permutation::identity(g.size());
    case OrderingMethod::Amd: return amd(g);
    case OrderingMethod::NestedDissection: return nested_dissection(g, leaf_threshold);
    case OrderingMethod::Rcm: return rcm(g);
  }
  throw std::invalid_argument("unknown ordering method");
}

}  // namespace helmdg
