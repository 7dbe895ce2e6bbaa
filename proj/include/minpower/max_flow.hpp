#pragma once

#include <vector>

namespace minpower {

/// Dinic's algorithm on real capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes) : adjacency_(num_nodes) {}

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  void add_arc(int from, int to, double capacity);

  /// Maximum flow from source to sink. Residual state is kept so that
  /// source_side() reports a minimum cut afterwards.
  double max_flow(int source, int sink);

  /// Nodes reachable from the last source in the residual network.
  std::vector<char> source_side() const;

 private:
  struct Arc {
    int to;
    int reverse;
    double residual;
  };

  bool layer(int source, int sink);
  double push(int node, int sink, double limit);

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  int source_ = 0;
};

}  // namespace minpower
