#include "minpower/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace minpower {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Vertices reachable from 0 along `out` (or along reversed arcs).
std::vector<char> reach_from_zero(const std::vector<std::vector<Vertex>>& out) {
  std::vector<char> seen(out.size(), 0);
  if (out.empty()) return seen;
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : out[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

Instance::Instance(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)), incident_(std::max(num_vertices, 0)) {
  if (n_ < 1) throw std::invalid_argument("instance needs at least one vertex");
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge " + edge_name(e) + " has an endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.cost) || e.cost < 0.0)
      throw std::invalid_argument("edge " + edge_name(e) + " has a negative or non-finite cost");
    if (!index_.emplace(key(e.u, e.v), i).second)
      throw std::invalid_argument("duplicate edge " + edge_name(e));
    incident_[e.u].push_back({e.v, e.cost});
    incident_[e.v].push_back({e.u, e.cost});
  }
  for (auto& list : incident_) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return a.cost < b.cost || (a.cost == b.cost && a.neighbor < b.neighbor);
    });
  }

  DisjointSets sets(n_);
  int components = n_;
  for (const Edge& e : edges_)
    if (sets.unite(e.u, e.v)) --components;
  if (components != 1) throw std::invalid_argument("instance not connected");
}

std::uint64_t Instance::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::optional<double> Instance::cost(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return edges_[it->second].cost;
}

bool ArcSet::includes(const ArcSet& other) const {
  return std::includes(arcs_.begin(), arcs_.end(), other.arcs_.begin(), other.arcs_.end());
}

Tree::Tree(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices),
      edges_(std::move(edges)),
      parent_(num_vertices, -1),
      parent_edge_(num_vertices, -1),
      depth_(num_vertices, 0),
      adjacent_(num_vertices) {
  if (n_ < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (edges_.size() + 1 != static_cast<std::size_t>(n_))
    throw std::invalid_argument("a spanning tree on n vertices has n-1 edges");

  std::vector<std::vector<std::pair<Vertex, int>>> adj(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
      throw std::invalid_argument("invalid tree edge " + edge_name(e));
    adj[e.u].emplace_back(e.v, static_cast<int>(i));
    adj[e.v].emplace_back(e.u, static_cast<int>(i));
    adjacent_[e.u].push_back(e.v);
    adjacent_[e.v].push_back(e.u);
  }

  std::vector<char> seen(n_, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (auto [y, idx] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      ++visited;
      parent_[y] = x;
      parent_edge_[y] = idx;
      depth_[y] = depth_[x] + 1;
      frontier.push(y);
    }
  }
  if (visited != n_) throw std::invalid_argument("tree edges do not span the vertex set");
}

double Tree::cost() const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.cost;
  return total;
}

int Tree::edge_between(Vertex a, Vertex b) const {
  if (parent_[a] == b) return parent_edge_[a];
  if (parent_[b] == a) return parent_edge_[b];
  return -1;
}

std::vector<Vertex> Tree::path(Vertex from, Vertex to) const {
  std::vector<Vertex> head{from};
  std::vector<Vertex> tail{to};
  Vertex a = from;
  Vertex b = to;
  while (depth_[a] > depth_[b]) head.push_back(a = parent_[a]);
  while (depth_[b] > depth_[a]) tail.push_back(b = parent_[b]);
  while (a != b) {
    head.push_back(a = parent_[a]);
    tail.push_back(b = parent_[b]);
  }
  // `a` now ends both halves.
  head.pop_back();
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

double PowerAssignment::total() const {
  double sum = 0.0;
  for (double p : levels_) sum += p;
  return sum;
}

Tree minimum_spanning_tree(const Instance& inst) {
  std::vector<Edge> sorted(inst.edges().begin(), inst.edges().end());
  auto ordered = [](const Edge& e) {
    return std::tuple(e.cost, std::min(e.u, e.v), std::max(e.u, e.v));
  };
  std::sort(sorted.begin(), sorted.end(),
            [&](const Edge& a, const Edge& b) { return ordered(a) < ordered(b); });

  DisjointSets sets(inst.num_vertices());
  std::vector<Edge> chosen;
  chosen.reserve(inst.num_vertices() - 1);
  for (const Edge& e : sorted)
    if (sets.unite(e.u, e.v)) chosen.push_back(e);
  if (chosen.size() + 1 != static_cast<std::size_t>(inst.num_vertices()))
    throw std::invalid_argument("instance not connected");
  return Tree(inst.num_vertices(), std::move(chosen));
}

ArcSet bidirect(const Tree& tree) {
  ArcSet arcs;
  for (const Edge& e : tree.edges()) {
    arcs.insert({e.u, e.v});
    arcs.insert({e.v, e.u});
  }
  return arcs;
}

bool is_strongly_connected(const Instance& inst, const ArcSet& arcs) {
  const int n = inst.num_vertices();
  std::vector<std::vector<Vertex>> out(n), in(n);
  for (Arc a : arcs) {
    out[a.tail].push_back(a.head);
    in[a.head].push_back(a.tail);
  }
  auto forward = reach_from_zero(out);
  auto backward = reach_from_zero(in);
  return std::all_of(forward.begin(), forward.end(), [](char c) { return c; }) &&
         std::all_of(backward.begin(), backward.end(), [](char c) { return c; });
}

PowerAssignment power_of(const Instance& inst, const ArcSet& arcs) {
  PowerAssignment p(inst.num_vertices());
  for (Arc a : arcs) {
    auto c = inst.cost(a.tail, a.head);
    if (!c)
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + ") is not an instance edge");
    p[a.tail] = std::max(p[a.tail], *c);
  }
  return p;
}

ArcSet induced_arcs(const Instance& inst, const PowerAssignment& p) {
  ArcSet arcs;
  for (const Edge& e : inst.edges()) {
    if (p[e.u] >= e.cost) arcs.insert({e.u, e.v});
    if (p[e.v] >= e.cost) arcs.insert({e.v, e.u});
  }
  return arcs;
}

PowerAssignment mst_baseline(const Instance& inst) {
  return power_of(inst, bidirect(minimum_spanning_tree(inst)));
}

}  // namespace minpower
