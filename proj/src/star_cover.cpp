#include "minpower/star_cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minpower {

namespace {

// Visits the arcs of Q-hat(S) in walk order: for each leaf, the tree path is
// walked from the leaf toward the center until a vertex already reached.
template <typename Visit>
void walk_cover(const Tree& tree, const Star& s, Visit&& visit) {
  std::vector<char> reached(tree.num_vertices(), 0);
  reached[s.center] = 1;
  for (Vertex leaf : s.leaves) {
    if (reached[leaf]) continue;
    auto route = tree.path(leaf, s.center);
    for (std::size_t i = 0; i + 1 < route.size() && !reached[route[i]]; ++i) {
      reached[route[i]] = 1;
      visit(Arc{route[i + 1], route[i]});
    }
  }
}

}  // namespace

Star make_star(const Instance& inst, Vertex center, double radius) {
  Star s{center, radius, {}};
  for (const Incidence& inc : inst.incident(center)) {
    if (inc.cost > radius) break;
    s.leaves.push_back(inc.neighbor);
  }
  return s;
}

ArcSet star_arcs(const Star& s) {
  ArcSet arcs;
  for (Vertex v : s.leaves) arcs.insert({s.center, v});
  return arcs;
}

std::vector<Star> enumerate_stars(const Instance& inst) {
  std::vector<Star> stars;
  for (Vertex u = 0; u < inst.num_vertices(); ++u) {
    Star current{u, 0.0, {}};
    auto incident = inst.incident(u);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      current.leaves.push_back(incident[i].neighbor);
      current.radius = incident[i].cost;
      if (i + 1 == incident.size() || incident[i + 1].cost != incident[i].cost)
        stars.push_back(current);
    }
  }
  return stars;
}

std::vector<int> covered_edges(const Tree& tree, const Star& s) {
  std::vector<int> edges;
  walk_cover(tree, s, [&](Arc a) { edges.push_back(tree.edge_between(a.tail, a.head)); });
  std::sort(edges.begin(), edges.end());
  return edges;
}

ArcSet directed_cover(const Tree& tree, const Star& s) {
  ArcSet arcs;
  walk_cover(tree, s, [&](Arc a) { arcs.insert(a); });
  return arcs;
}

CoverState::CoverState(Tree tree)
    : tree_(std::move(tree)),
      covered_(tree_.num_edges(), 0),
      alive_(tree_.num_edges(), {1, 1}),
      uncovered_(tree_.num_edges()) {}

int CoverState::slot(Arc a, int edge) const {
  const Edge& e = tree_.edges()[edge];
  return (a.tail == e.u && a.head == e.v) ? 0 : 1;
}

bool CoverState::survives(Arc a) const {
  int edge = tree_.edge_between(a.tail, a.head);
  return edge >= 0 && alive_[edge][slot(a, edge)];
}

ArcSet CoverState::surviving_arcs() const {
  ArcSet arcs;
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    const Edge& e = tree_.edges()[i];
    if (alive_[i][0]) arcs.insert({e.u, e.v});
    if (alive_[i][1]) arcs.insert({e.v, e.u});
  }
  return arcs;
}

MarginalGain marginal_gain(const CoverState& state, const Star& s) {
  MarginalGain result;
  const Tree& tree = state.tree();
  walk_cover(tree, s, [&](Arc a) {
    int edge = tree.edge_between(a.tail, a.head);
    if (state.is_covered(edge)) return;
    result.gain += tree.edges()[edge].cost;
    result.new_arcs.insert(a);
  });
  return result;
}

void apply_star(CoverState& state, const Star& s, const ArcSet& new_arcs) {
  for (Arc a : new_arcs) {
    int edge = state.tree_.edge_between(a.tail, a.head);
    if (edge < 0 || state.covered_[edge] || !state.alive_[edge][state.slot(a, edge)])
      throw std::logic_error("stale arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ") passed to apply_star");
  }
  for (Arc a : new_arcs) {
    int edge = state.tree_.edge_between(a.tail, a.head);
    state.alive_[edge][state.slot(a, edge)] = 0;
    state.covered_[edge] = 1;
    --state.uncovered_;
    state.covered_cost_ += state.tree_.edges()[edge].cost;
  }
  state.chosen_.push_back(s);
}

std::vector<StarGain> all_star_gains(const Instance& inst, const CoverState& state) {
  const Tree& tree = state.tree();
  const int n = tree.num_vertices();
  std::vector<StarGain> gains;
  std::vector<Vertex> toward(n);
  std::vector<char> reached(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (Vertex u = 0; u < n; ++u) {
    // Next hop toward u for every vertex.
    order.assign(1, u);
    toward[u] = u;
    for (std::size_t i = 0; i < order.size(); ++i) {
      Vertex x = order[i];
      for (Vertex y : tree.neighbors(x)) {
        if (y == toward[x] && x != u) continue;
        toward[y] = x;
        order.push_back(y);
      }
    }

    std::fill(reached.begin(), reached.end(), 0);
    reached[u] = 1;
    double gain = 0.0;
    auto incident = inst.incident(u);
    for (std::size_t i = 0; i < incident.size(); ++i) {
      for (Vertex x = incident[i].neighbor; !reached[x]; x = toward[x]) {
        reached[x] = 1;
        int edge = tree.edge_between(toward[x], x);
        if (!state.is_covered(edge)) gain += tree.edges()[edge].cost;
      }
      if (i + 1 == incident.size() || incident[i + 1].cost != incident[i].cost)
        gains.push_back({u, incident[i].cost, gain});
    }
  }
  return gains;
}

}  // namespace minpower
