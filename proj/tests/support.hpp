#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "minpower/graph.hpp"
#include "minpower/simplex.hpp"
#include "minpower/star_cover.hpp"

namespace minpower::testing {

// a=0, b=1, c=2 with ab=3, bc=4, ac=5.
inline Instance triangle() { return Instance(3, {{0, 1, 3.0}, {1, 2, 4.0}, {0, 2, 5.0}}); }

// a-b-c with ab=1, bc=2, plus the chord ac=3.
inline Instance path_abc() { return Instance(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}); }

// Random connected graph: a random recursive tree plus extra pairs with
// probability `density`. Small integer costs when `ties`, so equal costs occur.
inline Instance random_graph(std::mt19937_64& rng, int n, double density, bool ties) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(1, 4);
  auto draw = [&] { return ties ? double(small(rng)) : 0.05 + unit(rng); };
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    used[u][v] = 1;
    edges.push_back({u, v, draw()});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[u][v] && unit(rng) < density) edges.push_back({u, v, draw()});
  return Instance(n, edges);
}

inline std::vector<std::vector<char>> closure(int n, const ArcSet& arcs) {
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) r[v][v] = 1;
  for (Arc a : arcs) r[a.tail][a.head] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  return r;
}

inline bool closure_strongly_connected(int n, const ArcSet& arcs) {
  auto r = closure(n, arcs);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

inline std::vector<char> subset(int n, std::uint32_t mask) {
  std::vector<char> inside(n);
  for (int v = 0; v < n; ++v) inside[v] = (mask >> v) & 1;
  return inside;
}

inline bool star_enters(const Star& s, const std::vector<char>& inside) {
  if (inside[s.center]) return false;
  for (Vertex v : s.leaves)
    if (inside[v]) return true;
  return false;
}

// Min load over all 2^n - 2 cuts, by direct summation.
inline double exhaustive_min_load(int n, const std::vector<Star>& stars, const Eigen::VectorXd& y) {
  double best = INFINITY;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    auto inside = subset(n, mask);
    double load = 0.0;
    for (std::size_t s = 0; s < stars.size(); ++s)
      if (star_enters(stars[s], inside)) load += y(s);
    best = std::min(best, load);
  }
  return best;
}

// Cut relaxation with every cut written out, solved in primal form:
// min p'y  s.t.  sum_{S enters X} y_S >= 1, y >= 0.
inline double full_cut_lp(const Instance& inst) {
  const int n = inst.num_vertices();
  auto stars = enumerate_stars(inst);
  const auto k = static_cast<Eigen::Index>(stars.size());
  const Eigen::Index rows = (Eigen::Index{1} << n) - 2;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, k);
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    auto inside = subset(n, mask);
    for (Eigen::Index s = 0; s < k; ++s)
      if (star_enters(stars[s], inside)) A(mask - 1, s) = -1.0;
  }
  Eigen::VectorXd p(k);
  for (Eigen::Index s = 0; s < k; ++s) p(s) = -stars[s].power();
  auto res = lp::maximize(A, Eigen::VectorXd::Constant(rows, -1.0), p);
  return res.status == lp::Status::optimal ? -res.objective : NAN;
}

}  // namespace minpower::testing
