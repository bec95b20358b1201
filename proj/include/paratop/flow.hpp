#pragma once

#include <cstdint>
#include <vector>

namespace paratop {

/// Integer max-flow (Dinic). Small and allocation-light; built once per query.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  /// Returns an edge id usable with flow_on().
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);

  std::int64_t run(std::size_t source, std::size_t sink);

  std::int64_t flow_on(std::size_t edge_id) const;

  /// Nodes reachable from `source` in the residual graph after run(): the
  /// source side of a minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
    std::int64_t initial;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace paratop
