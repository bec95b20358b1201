#include "paratop/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace paratop {

MaxFlow::MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  graph_[from].push_back(Arc{to, graph_[to].size() + (from == to ? 1 : 0), capacity, capacity});
  graph_[to].push_back(Arc{from, graph_[from].size() - 1, 0, 0});
  edges_.emplace_back(from, graph_[from].size() - 1);
  return edges_.size() - 1;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : graph_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t node, std::size_t sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < graph_[node].size(); ++i) {
    Arc& a = graph_[node][i];
    if (a.cap <= 0 || level_[a.to] != level_[node] + 1) continue;
    const std::int64_t got = push(a.to, sink, std::min(limit, a.cap));
    if (got > 0) {
      a.cap -= got;
      graph_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (const std::int64_t f = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow_on(std::size_t edge_id) const {
  const auto [from, index] = edges_.at(edge_id);
  const Arc& a = graph_[from][index];
  return a.initial - a.cap;
}

std::vector<bool> MaxFlow::source_side(std::size_t source) const {
  std::vector<bool> seen(graph_.size(), false);
  std::queue<std::size_t> queue;
  seen[source] = true;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : graph_[v]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = true;
        queue.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace paratop
