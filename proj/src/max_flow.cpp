#include "minpower/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace minpower {

namespace {
constexpr double kResidualEps = 1e-12;
}

void FlowNetwork::add_arc(int from, int to, double capacity) {
  adjacency_[from].push_back({to, static_cast<int>(adjacency_[to].size()), capacity});
  adjacency_[to].push_back({from, static_cast<int>(adjacency_[from].size()) - 1, 0.0});
}

bool FlowNetwork::layer(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    for (const Arc& a : adjacency_[x]) {
      if (a.residual > kResidualEps && level_[a.to] < 0) {
        level_[a.to] = level_[x] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double FlowNetwork::push(int node, int sink, double limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    Arc& a = adjacency_[node][i];
    if (a.residual <= kResidualEps || level_[a.to] != level_[node] + 1) continue;
    double pushed = push(a.to, sink, std::min(limit, a.residual));
    if (pushed > 0.0) {
      a.residual -= pushed;
      adjacency_[a.to][a.reverse].residual += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double FlowNetwork::max_flow(int source, int sink) {
  source_ = source;
  double total = 0.0;
  while (layer(source, sink)) {
    cursor_.assign(adjacency_.size(), 0);
    while (double pushed = push(source, sink, std::numeric_limits<double>::infinity()))
      total += pushed;
  }
  return total;
}

std::vector<char> FlowNetwork::source_side() const {
  std::vector<char> side(adjacency_.size(), 0);
  std::vector<int> stack{source_};
  side[source_] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Arc& a : adjacency_[x]) {
      if (a.residual > kResidualEps && !side[a.to]) {
        side[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return side;
}

}  // namespace minpower
