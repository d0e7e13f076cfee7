#pragma once

// Dinic's max-flow over an arbitrary exact capacity type.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace younggraph {

template <class Capacity>
class MaxFlow {
 public:
  struct Edge {
    std::size_t to;
    std::size_t rev;
    Capacity cap;
    Capacity original;
  };

  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  /// Returns (node, index) of the forward edge so callers can read its flow.
  std::pair<std::size_t, std::size_t> add_edge(std::size_t from, std::size_t to, Capacity cap) {
    graph_[from].push_back({to, graph_[to].size(), cap, cap});
    graph_[to].push_back({from, graph_[from].size() - 1, Capacity(0), Capacity(0)});
    return {from, graph_[from].size() - 1};
  }

  Capacity run(std::size_t source, std::size_t sink) {
    Capacity total(0);
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        Capacity pushed = dfs(source, sink, Capacity(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  Capacity flow_on(std::pair<std::size_t, std::size_t> handle) const {
    const Edge& e = graph_[handle.first][handle.second];
    return e.original - e.cap;
  }

 private:
  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[source] = 0;
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (const Edge& e : graph_[v])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue.push(e.to);
        }
    }
    return level_[sink] >= 0;
  }

  // `limit` < 0 stands for "unbounded".
  Capacity dfs(std::size_t v, std::size_t sink, Capacity limit) {
    if (v == sink) return limit;
    for (std::size_t& k = next_[v]; k < graph_[v].size(); ++k) {
      Edge& e = graph_[v][k];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      Capacity want = (limit < 0 || e.cap < limit) ? Capacity(e.cap) : Capacity(limit);
      Capacity got = dfs(e.to, sink, want);
      if (got > 0) {
        e.cap -= got;
        graph_[e.to][e.rev].cap += got;
        return got;
      }
    }
    return Capacity(0);
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace younggraph
