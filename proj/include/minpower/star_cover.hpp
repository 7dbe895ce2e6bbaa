#pragma once

#include <array>
#include <span>
#include <vector>

#include "minpower/graph.hpp"

namespace minpower {

/// Directed star S(center, radius): every arc center->v with c(center,v) <= radius.
struct Star {
  Vertex center = 0;
  double radius = 0.0;
  /// Ordered by (cost from center, id); coverage walks follow this order.
  std::vector<Vertex> leaves;

  double power() const { return radius; }

  friend bool operator==(const Star&, const Star&) = default;
};

/// S(center, radius) over the instance's incident costs.
Star make_star(const Instance& inst, Vertex center, double radius);

/// Arcs of the star itself, E(S).
ArcSet star_arcs(const Star& s);

/// One star per (center, distinct incident cost), ordered by center then radius.
std::vector<Star> enumerate_stars(const Instance& inst);

/// Q(S): indices of tree edges on some center-to-leaf tree path, ascending.
std::vector<int> covered_edges(const Tree& tree, const Star& s);

/// Q-hat(S): tree arcs on the directed paths from the center to each leaf.
ArcSet directed_cover(const Tree& tree, const Star& s);

/// Star collection A with its tree-edge coverage and the surviving arcs M of
/// the bidirected tree. An edge is covered iff at most one of its two arcs
/// survives.
class CoverState {
 public:
  explicit CoverState(Tree tree);

  const Tree& tree() const { return tree_; }
  std::span<const Star> chosen() const { return chosen_; }

  bool is_covered(int tree_edge) const { return covered_[tree_edge]; }
  std::size_t uncovered_count() const { return uncovered_; }
  bool fully_covered() const { return uncovered_ == 0; }

  /// f(A), accumulated as stars are applied.
  double covered_cost() const { return covered_cost_; }

  bool survives(Arc a) const;
  ArcSet surviving_arcs() const;

  friend void apply_star(CoverState& state, const Star& s, const ArcSet& new_arcs);

 private:
  // Slot 0 is the arc oriented as the stored tree edge (u->v), slot 1 is v->u.
  int slot(Arc a, int edge) const;

  Tree tree_;
  std::vector<Star> chosen_;
  std::vector<char> covered_;
  std::vector<std::array<char, 2>> alive_;
  std::size_t uncovered_;
  double covered_cost_ = 0.0;
};

struct MarginalGain {
  double gain = 0.0;
  /// I_A(S): arcs of Q-hat(S) whose undirected edge is not yet covered.
  ArcSet new_arcs;
};

/// f_A(S), summed along the center-to-leaf walk in leaf order.
MarginalGain marginal_gain(const CoverState& state, const Star& s);

/// Removes `new_arcs` from M, marks their edges covered and appends `s` to A.
/// Throws std::logic_error if an arc is not a surviving arc of an uncovered
/// edge, i.e. `new_arcs` was computed against a different state.
void apply_star(CoverState& state, const Star& s, const ArcSet& new_arcs);

struct StarGain {
  Vertex center;
  double radius;
  double gain;
};

/// f_A of every canonical star, in enumerate_stars order, by one incremental
/// sweep per center. Each gain equals marginal_gain(state, star).gain exactly.
std::vector<StarGain> all_star_gains(const Instance& inst, const CoverState& state);

}  // namespace minpower
