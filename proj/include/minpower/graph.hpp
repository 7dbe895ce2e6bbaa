#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace minpower {

using Vertex = int;

/// Undirected edge of the input graph. Both orientations share `cost`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double cost = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed edge; `tail` transmits to `head`.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Incidence {
  Vertex neighbor;
  double cost;
};

/// Connected simple undirected graph with non-negative symmetric costs.
///
/// Construction validates the graph; a self-loop, duplicate pair, negative or
/// non-finite cost, out-of-range endpoint, or a disconnected graph throws
/// std::invalid_argument.
class Instance {
 public:
  Instance(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edges of `u`, ordered by (cost, neighbor id).
  std::span<const Incidence> incident(Vertex u) const { return incident_[u]; }

  std::optional<double> cost(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return cost(u, v).has_value(); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incident_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Set of arcs, each drawn from an instance edge in either orientation.
class ArcSet {
 public:
  using const_iterator = std::set<Arc>::const_iterator;

  ArcSet() = default;
  ArcSet(std::initializer_list<Arc> arcs) : arcs_(arcs) {}

  bool insert(Arc a) { return arcs_.insert(a).second; }
  bool erase(Arc a) { return arcs_.erase(a) > 0; }
  bool contains(Arc a) const { return arcs_.count(a) > 0; }
  void merge(const ArcSet& other) { arcs_.insert(other.begin(), other.end()); }

  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  const_iterator begin() const { return arcs_.begin(); }
  const_iterator end() const { return arcs_.end(); }

  bool includes(const ArcSet& other) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::set<Arc> arcs_;
};

/// Spanning tree rooted at vertex 0, with parent pointers for path queries.
class Tree {
 public:
  /// Builds the tree from `n - 1` edges; throws std::invalid_argument unless
  /// they form a spanning tree on `n` vertices.
  Tree(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  double cost() const;

  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacent_[v]; }

  /// Index of the tree edge joining `a` and `b`, or -1 if they are not adjacent.
  int edge_between(Vertex a, Vertex b) const;

  /// Vertices of the tree path from `from` to `to`, both included.
  std::vector<Vertex> path(Vertex from, Vertex to) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Vertex> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> adjacent_;
};

/// Per-vertex power levels.
class PowerAssignment {
 public:
  PowerAssignment() = default;
  explicit PowerAssignment(int num_vertices) : levels_(num_vertices, 0.0) {}
  explicit PowerAssignment(std::vector<double> levels) : levels_(std::move(levels)) {}

  int num_vertices() const { return static_cast<int>(levels_.size()); }
  double& operator[](Vertex v) { return levels_[v]; }
  double operator[](Vertex v) const { return levels_[v]; }
  std::span<const double> levels() const { return levels_; }

  /// Sum over vertices in id order.
  double total() const;

  friend bool operator==(const PowerAssignment&, const PowerAssignment&) = default;

 private:
  std::vector<double> levels_;
};

/// Kruskal with edges ordered by (cost, min endpoint, max endpoint).
Tree minimum_spanning_tree(const Instance& inst);

/// Both orientations of every tree edge.
ArcSet bidirect(const Tree& tree);

bool is_strongly_connected(const Instance& inst, const ArcSet& arcs);

/// p(u) = max cost of an arc leaving u, 0 when u has none. Throws
/// std::invalid_argument for an arc with no underlying instance edge.
PowerAssignment power_of(const Instance& inst, const ArcSet& arcs);

/// The arc set H(p): xy whenever {x,y} is an edge and p(x) >= c(xy).
ArcSet induced_arcs(const Instance& inst, const PowerAssignment& p);

/// Power of the bidirected minimum spanning tree, the 2-approximation baseline.
PowerAssignment mst_baseline(const Instance& inst);

}  // namespace minpower
