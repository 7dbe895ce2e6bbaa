#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "minpower/graph.hpp"
#include "minpower/star_cover.hpp"

namespace minpower {

/// Raised when the restricted LP cannot be solved or cut generation stalls.
class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Star variables y_S of the cut relaxation, over the canonical stars.
struct FractionalSolution {
  std::vector<Star> stars;
  Eigen::VectorXd y;
  double value = 0.0;  // sum of y_S p(S)
  int rounds = 0;
  std::size_t cuts = 0;
};

/// A vertex set X (neither empty nor everything) whose entering stars carry
/// total weight `load` < 1.
struct CutViolation {
  std::vector<char> inside;
  double load = 0.0;
};

/// S enters X iff its center is outside X and one of its leaves is inside.
bool enters(const Star& s, const std::vector<char>& inside);

/// Sum of y_S over the stars entering X, by direct summation.
double cut_load(std::span<const Star> stars, const Eigen::VectorXd& y,
                const std::vector<char>& inside);

/// Most violated cut constraint, found by min-cuts between vertex 0 and every
/// other vertex in both directions of the star-expanded flow network.
std::optional<CutViolation> separate(const Instance& inst, std::span<const Star> stars,
                                     const Eigen::VectorXd& y, double tol = 1e-7);
std::optional<CutViolation> separate(const Instance& inst, const FractionalSolution& sol,
                                     double tol = 1e-7);

/// opt*, the optimum of the cut relaxation over star variables, by lazy cut
/// generation. Throws LpError on LP failure or when the round budget runs out.
FractionalSolution lp_lower_bound(const Instance& inst, double tol = 1e-7, int max_rounds = 500);

struct GreedyLpReport {
  double greedy_total = 0.0;
  double opt_star = 0.0;
  double ratio = 1.0;
  bool passed = false;
};

/// greedy / opt* and whether it lies within [1, beta(1/2)] up to `tol`.
GreedyLpReport check_greedy_vs_lp(const Instance& inst, double tol = 1e-6);

}  // namespace minpower
