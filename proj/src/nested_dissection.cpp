#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "helmdg/ordering.hpp"

namespace helmdg {

namespace {

class Dissector {
 public:
  Dissector(const AdjacencyGraph& g, Index leaf) : g_(g), leaf_(leaf) { order_.reserve(g.size()); }

  std::vector<Index> run() {
    std::vector<char> all(g_.size(), 1);
    std::vector<Index> vertices(g_.size());
    for (Index v = 0; v < g_.size(); ++v) vertices[v] = v;
    for (auto& comp : components(g_, vertices, all)) dissect(std::move(comp));
    return std::move(order_);
  }

 private:
  // Connected components of the vertices of `sub` flagged in `keep`, in
  // ascending order of smallest member; members are returned as entries of
  // `global` and sorted.
  static std::vector<std::vector<Index>> components(const AdjacencyGraph& sub, const std::vector<Index>& global,
                                                    const std::vector<char>& keep) {
    std::vector<std::vector<Index>> out;
    std::vector<char> seen(sub.size(), 0);
    for (Index s = 0; s < sub.size(); ++s) {
      if (!keep[s] || seen[s]) continue;
      std::vector<Index> comp;
      std::vector<Index> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        comp.push_back(global[v]);
        for (Index w : sub.neighbors(v)) {
          if (keep[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  }

  void leaf(const std::vector<Index>& vertices, const AdjacencyGraph& sub) {
    const Permutation local = amd(sub);
    for (Index k = 0; k < local.size(); ++k) order_.push_back(vertices[local[k]]);
  }

  void dissect(std::vector<Index> vertices) {
    const AdjacencyGraph sub = g_.induced(vertices);
    const Index n = sub.size();
    if (n <= leaf_) {
      leaf(vertices, sub);
      return;
    }

    Index start = 0;
    for (Index v = 1; v < n; ++v) {
      if (sub.degree(v) < sub.degree(start)) start = v;
    }
    const LevelStructure ls = level_structure(sub, pseudo_peripheral_vertex(sub, start));
    const int m = ls.eccentricity();
    if (m < 1) {
      leaf(vertices, sub);
      return;
    }

    std::vector<int> level_of(n, 0);
    for (int l = 0; l <= m; ++l) {
      for (Index v : ls.levels[l]) level_of[v] = l;
    }

    // First level of the second part: count(levels < cut) closest to n/2.
    int cut = 1;
    long best = -1;
    long below = 0;
    for (int l = 1; l <= m; ++l) {
      below += static_cast<long>(ls.levels[l - 1].size());
      const long gap = std::labs(2 * below - n);
      if (best < 0 || gap < best) {
        best = gap;
        cut = l;
      }
    }
    long size_a = 0;
    for (int l = 0; l < cut; ++l) size_a += static_cast<long>(ls.levels[l].size());
    const long size_b = n - size_a;

    std::vector<Index> sep_a;  // level cut-1 vertices with a neighbour in level cut
    for (Index v : ls.levels[cut - 1]) {
      for (Index w : sub.neighbors(v)) {
        if (level_of[w] == cut) {
          sep_a.push_back(v);
          break;
        }
      }
    }
    const std::vector<Index>& sep_b = ls.levels[cut];  // all have a neighbour in level cut-1

    bool take_a;
    if (sep_a.size() != sep_b.size()) {
      take_a = sep_a.size() < sep_b.size();
    } else {
      take_a = size_a > size_b;
    }
    const std::vector<Index>& sep = take_a ? sep_a : sep_b;

    std::vector<char> in_sep(n, 0);
    for (Index v : sep) in_sep[v] = 1;
    std::vector<char> part_a(n, 0), part_b(n, 0);
    bool any_a = false, any_b = false;
    for (Index v = 0; v < n; ++v) {
      if (in_sep[v]) continue;
      if (level_of[v] < cut) {
        part_a[v] = 1;
        any_a = true;
      } else {
        part_b[v] = 1;
        any_b = true;
      }
    }
    if (!any_a || !any_b) {
      leaf(vertices, sub);
      return;
    }

    std::vector<Index> sep_global;
    sep_global.reserve(sep.size());
    for (Index v : sep) sep_global.push_back(vertices[v]);
    std::sort(sep_global.begin(), sep_global.end());

    auto comps_a = components(sub, vertices, part_a);
    auto comps_b = components(sub, vertices, part_b);
    for (auto& c : comps_a) dissect(std::move(c));
    for (auto& c : comps_b) dissect(std::move(c));
    order_.insert(order_.end(), sep_global.begin(), sep_global.end());
  }

  const AdjacencyGraph& g_;
  Index leaf_;
  std::vector<Index> order_;
};

}  // namespace

Permutation nested_dissection(const AdjacencyGraph& g, Index leaf_threshold) {
  if (leaf_threshold < 1) throw std::invalid_argument("nested_dissection: leaf threshold must be >= 1");
  return Permutation(Dissector(g, leaf_threshold).run());
}

}  // namespace helmdg
