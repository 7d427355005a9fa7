#include <algorithm>
#include <deque>

#include "helmdg/ordering.hpp"

namespace helmdg {

Permutation rcm(const AdjacencyGraph& g) {
  const Index n = g.size();
  std::vector<Index> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  std::vector<char> in_component(n, 0);

  auto by_degree = [&g](Index a, Index b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  };

  for (Index seed = 0; seed < n; ++seed) {
    if (placed[seed]) continue;

    // Minimum-degree vertex of the component containing `seed`.
    Index start = seed;
    {
      std::vector<Index> stack{seed};
      std::vector<Index> members;
      in_component[seed] = 1;
      while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        members.push_back(v);
        if (by_degree(v, start)) start = v;
        for (Index w : g.neighbors(v)) {
          if (!in_component[w]) {
            in_component[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }

    const Index root = pseudo_peripheral_vertex(g, start);
    std::deque<Index> queue{root};
    placed[root] = 1;
    std::vector<Index> next;
    while (!queue.empty()) {
      const Index v = queue.front();
      queue.pop_front();
      order.push_back(v);
      next.clear();
      for (Index w : g.neighbors(v)) {
        if (!placed[w]) {
          placed[w] = 1;
          next.push_back(w);
        }
      }
      std::sort(next.begin(), next.end(), by_degree);
      queue.insert(queue.end(), next.begin(), next.end());
    }
  }

  std::reverse(order.begin(), order.end());
  return Permutation(std::move(order));
}

}  // namespace helmdg
