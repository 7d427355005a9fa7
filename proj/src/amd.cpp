#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "helmdg/ordering.hpp"

namespace helmdg {

namespace {

enum class Status : std::uint8_t { Variable, Merged, Element, Dead };

class QuotientGraph {
 public:
  QuotientGraph(const AdjacencyGraph& g, const AmdOptions& options, AmdStats& stats)
      : n_(g.size()),
        options_(options),
        stats_(stats),
        status_(n_, Status::Variable),
        weight_(n_, 1),
        degree_(n_, 0),
        elem_weight_(n_, 0),
        var_adj_(n_),
        elem_adj_(n_),
        elem_vars_(n_),
        members_(n_),
        mark_(n_, 0),
        w_(n_, 0),
        w_stamp_(n_, 0) {
    for (Index v = 0; v < n_; ++v) {
      const auto nb = g.neighbors(v);
      for (Index u : nb) {
        if (u != v) var_adj_[v].push_back(u);
      }
      std::sort(var_adj_[v].begin(), var_adj_[v].end());
      var_adj_[v].erase(std::unique(var_adj_[v].begin(), var_adj_[v].end()), var_adj_[v].end());
      degree_[v] = static_cast<Index>(var_adj_[v].size());
      queue_.insert({degree_[v], v});
    }
  }

  std::vector<Index> run() {
    std::vector<Index> order;
    order.reserve(n_);
    Index remaining = n_;
    while (!queue_.empty()) {
      const Index p = queue_.begin()->second;
      queue_.erase(queue_.begin());
      ++stats_.pivots;

      const std::vector<Index> lp = form_element(p);
      order.push_back(p);
      order.insert(order.end(), members_[p].begin(), members_[p].end());
      remaining -= weight_[p];

      Index degme = 0;
      for (Index i : lp) degme += weight_[i];
      for (Index i : lp) queue_.erase({degree_[i], i});

      update_lists(p, lp);
      update_degrees(p, lp, degme, remaining);
      detect_supervariables(lp);
      if (options_.check_degree_bounds) check_bounds(lp);
      for (Index i : lp) {
        if (status_[i] == Status::Variable) queue_.insert({degree_[i], i});
      }
    }
    if (static_cast<Index>(order.size()) != n_) throw std::logic_error("amd: incomplete ordering");
    return order;
  }

 private:
  std::uint32_t next_stamp() {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    return stamp_;
  }

  // Turns p into an element; returns Lp sorted ascending. Lp stays marked
  // with lp_stamp_ until the next call.
  std::vector<Index> form_element(Index p) {
    lp_stamp_ = next_stamp();
    mark_[p] = lp_stamp_;
    std::vector<Index> lp;
    for (Index i : var_adj_[p]) {
      if (status_[i] == Status::Variable && mark_[i] != lp_stamp_) {
        mark_[i] = lp_stamp_;
        lp.push_back(i);
      }
    }
    for (Index e : elem_adj_[p]) {
      if (status_[e] != Status::Element) continue;
      for (Index i : elem_vars_[e]) {
        if (status_[i] == Status::Variable && mark_[i] != lp_stamp_) {
          mark_[i] = lp_stamp_;
          lp.push_back(i);
        }
      }
      status_[e] = Status::Dead;
      elem_vars_[e] = {};
      ++stats_.elements_absorbed;
    }
    std::sort(lp.begin(), lp.end());
    status_[p] = Status::Element;
    elem_vars_[p] = lp;
    var_adj_[p] = {};
    elem_adj_[p] = {};
    Index total = 0;
    for (Index i : lp) total += weight_[i];
    elem_weight_[p] = total;
    return lp;
  }

  void update_lists(Index p, const std::vector<Index>& lp) {
    for (Index i : lp) {
      auto& ea = elem_adj_[i];
      ea.erase(std::remove_if(ea.begin(), ea.end(), [&](Index e) { return status_[e] != Status::Element; }),
               ea.end());
      ea.insert(std::lower_bound(ea.begin(), ea.end(), p), p);
      auto& va = var_adj_[i];
      va.erase(std::remove_if(va.begin(), va.end(),
                              [&](Index j) { return status_[j] != Status::Variable || mark_[j] == lp_stamp_; }),
               va.end());
    }
  }

  void update_degrees(Index p, const std::vector<Index>& lp, Index degme, Index remaining) {
    // w(e) = |Le \ Lp| for every element touching Lp, other than p.
    ++w_epoch_;
    for (Index i : lp) {
      for (Index e : elem_adj_[i]) {
        if (e == p) continue;
        if (w_stamp_[e] != w_epoch_) {
          w_stamp_[e] = w_epoch_;
          w_[e] = elem_weight_[e];
        }
        w_[e] -= weight_[i];
      }
    }
    bool absorbed = false;
    for (Index i : lp) {
      Index ext = 0;
      for (Index e : elem_adj_[i]) {
        if (e == p || status_[e] != Status::Element) continue;
        if (options_.aggressive_absorption && w_[e] == 0) {
          status_[e] = Status::Dead;
          elem_vars_[e] = {};
          ++stats_.elements_absorbed;
          absorbed = true;
        } else {
          ext += w_[e];
        }
      }
      Index a_part = 0;
      for (Index j : var_adj_[i]) a_part += weight_[j];
      const Index others = degme - weight_[i];
      const Index approx = a_part + others + ext;
      degree_[i] = std::min({approx, degree_[i] + others, remaining - weight_[i]});
    }
    if (absorbed) {
      for (Index i : lp) {
        auto& ea = elem_adj_[i];
        ea.erase(std::remove_if(ea.begin(), ea.end(), [&](Index e) { return status_[e] != Status::Element; }),
                 ea.end());
      }
    }
  }

  void detect_supervariables(const std::vector<Index>& lp) {
    std::unordered_map<std::uint64_t, std::vector<Index>> buckets;
    std::vector<std::uint64_t> keys;
    for (Index i : lp) {
      std::uint64_t h = elem_adj_[i].size() * 1315423911ULL + var_adj_[i].size();
      for (Index e : elem_adj_[i]) h += static_cast<std::uint64_t>(e);
      for (Index j : var_adj_[i]) h += static_cast<std::uint64_t>(j) * 31ULL;
      auto [it, inserted] = buckets.try_emplace(h);
      if (inserted) keys.push_back(h);
      it->second.push_back(i);
    }
    for (std::uint64_t key : keys) {
      const auto& bucket = buckets[key];
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        const Index i = bucket[a];
        if (status_[i] != Status::Variable) continue;
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          const Index j = bucket[b];
          if (status_[j] != Status::Variable) continue;
          if (elem_adj_[i] != elem_adj_[j] || var_adj_[i] != var_adj_[j]) continue;
          degree_[i] -= weight_[j];
          weight_[i] += weight_[j];
          members_[i].push_back(j);
          members_[i].insert(members_[i].end(), members_[j].begin(), members_[j].end());
          members_[j] = {};
          status_[j] = Status::Merged;
          var_adj_[j] = {};
          elem_adj_[j] = {};
          ++stats_.supervariables_merged;
        }
      }
    }
  }

  // Exact external degree |(A_i ∪ ⋃ Le) \ i|, weighted by supervariable size.
  void check_bounds(const std::vector<Index>& lp) {
    for (Index i : lp) {
      if (status_[i] != Status::Variable) continue;
      const std::uint32_t s = next_stamp();
      mark_[i] = s;
      Index exact = 0;
      auto visit = [&](Index j) {
        if (status_[j] == Status::Variable && mark_[j] != s) {
          mark_[j] = s;
          exact += weight_[j];
        }
      };
      for (Index j : var_adj_[i]) visit(j);
      for (Index e : elem_adj_[i]) {
        for (Index j : elem_vars_[e]) visit(j);
      }
      ++stats_.degree_checks;
      if (degree_[i] < exact) {
        throw std::logic_error("amd: approximate degree " + std::to_string(degree_[i]) + " of variable " +
                               std::to_string(i) + " is below exact degree " + std::to_string(exact));
      }
    }
    lp_stamp_ = 0;
  }

  Index n_;
  AmdOptions options_;
  AmdStats& stats_;
  std::vector<Status> status_;
  std::vector<Index> weight_;
  std::vector<Index> degree_;
  std::vector<Index> elem_weight_;
  std::vector<std::vector<Index>> var_adj_;
  std::vector<std::vector<Index>> elem_adj_;
  std::vector<std::vector<Index>> elem_vars_;
  std::vector<std::vector<Index>> members_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::uint32_t lp_stamp_ = 0;
  std::vector<Index> w_;
  std::vector<std::uint32_t> w_stamp_;
  std::uint32_t w_epoch_ = 0;
  std::set<std::pair<Index, Index>> queue_;
};

}  // namespace

Permutation amd(const AdjacencyGraph& g, const AmdOptions& options, AmdStats* stats) {
  AmdStats local;
  AmdStats& s = stats ? *stats : local;
  s = {};
  QuotientGraph qg(g, options, s);
  return Permutation(qg.run());
}

}  // namespace helmdg
