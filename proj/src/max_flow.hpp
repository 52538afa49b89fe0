#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace specfactor::detail {

// Dinic's blocking-flow max flow with integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  /// Returns the arc id, usable with flow_on().
  int add_arc(int from, int to, long capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    arcs_.push_back({from, 0, 0});
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  long flow_on(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }

  long run(int source, int sink) {
    long total = 0;
    while (levels(source, sink)) {
      next_.assign(adj_.size(), 0);
      while (long pushed = push(source, sink, std::numeric_limits<long>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    long capacity;
    long flow;
  };

  bool levels(int source, int sink) {
    level_.assign(adj_.size(), -1);
    level_[static_cast<std::size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.flow < a.capacity && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  long push(int v, int sink, long limit) {
    if (v == sink) return limit;
    auto& i = next_[static_cast<std::size_t>(v)];
    for (; i < adj_[static_cast<std::size_t>(v)].size(); ++i) {
      const int id = adj_[static_cast<std::size_t>(v)][i];
      Arc& a = arcs_[static_cast<std::size_t>(id)];
      if (a.flow >= a.capacity || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (long got = push(a.to, sink, std::min(limit, a.capacity - a.flow))) {
        a.flow += got;
        arcs_[static_cast<std::size_t>(id ^ 1)].flow -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace specfactor::detail
