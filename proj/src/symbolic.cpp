#include <algorithm>
#include <stdexcept>

#include "helmdg/lu.hpp"

namespace helmdg {

// Column j of L has pattern {i > j : A(i,j) != 0} merged with the patterns
// of its elimination-tree children, minus j. The parent of j is the smallest
// row of that pattern.
Offset symbolic_fill(const AdjacencyGraph& pattern, const Permutation& order) {
  if (pattern.size() != order.size()) throw std::invalid_argument("symbolic_fill: dimension mismatch");
  const Index n = pattern.size();
  const AdjacencyGraph g = pattern.permuted(order);

  std::vector<std::vector<Index>> column(n);
  std::vector<std::vector<Index>> children(n);
  std::vector<Index> mark(n, -1);
  Offset below = 0;

  for (Index j = 0; j < n; ++j) {
    std::vector<Index> s;
    mark[j] = j;
    for (Index i : g.neighbors(j)) {
      if (i > j && mark[i] != j) {
        mark[i] = j;
        s.push_back(i);
      }
    }
    for (Index c : children[j]) {
      for (Index i : column[c]) {
        if (mark[i] != j) {
          mark[i] = j;
          s.push_back(i);
        }
      }
      std::vector<Index>().swap(column[c]);
    }
    std::vector<Index>().swap(children[j]);
    if (!s.empty()) children[*std::min_element(s.begin(), s.end())].push_back(j);
    below += static_cast<Offset>(s.size());
    column[j] = std::move(s);
  }
  return n + 2 * below;
}

}  // namespace helmdg
