#include "minpower/lp_bound.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "minpower/greedy.hpp"
#include "minpower/max_flow.hpp"
#include "minpower/simplex.hpp"

namespace minpower {

namespace {

const char* status_name(lp::Status s) {
  switch (s) {
    case lp::Status::optimal: return "optimal";
    case lp::Status::infeasible: return "infeasible";
    case lp::Status::unbounded: return "unbounded";
    case lp::Status::iteration_limit: return "iteration limit";
  }
  return "unknown";
}

// Vertex nodes 0..n-1, then one node per star in the support. center -> star
// carries y_S; star -> leaf is effectively uncapacitated.
FlowNetwork star_network(int n, std::span<const Star> stars, const Eigen::VectorXd& y) {
  const double unbounded = n * (y.size() ? y.maxCoeff() : 0.0) + 1.0;
  int support = 0;
  for (Eigen::Index s = 0; s < y.size(); ++s) support += y(s) > 0.0;
  FlowNetwork net(n + support);
  int node = n;
  for (std::size_t s = 0; s < stars.size(); ++s) {
    if (!(y(s) > 0.0)) continue;
    net.add_arc(stars[s].center, node, y(s));
    for (Vertex leaf : stars[s].leaves) net.add_arc(node, leaf, unbounded);
    ++node;
  }
  return net;
}

std::vector<CutViolation> find_violations(const Instance& inst, std::span<const Star> stars,
                                          const Eigen::VectorXd& y, double tol,
                                          bool every_root) {
  const int n = inst.num_vertices();
  std::vector<CutViolation> found;
  std::set<std::vector<char>> seen;
  auto probe = [&](Vertex source, Vertex sink) {
    FlowNetwork net = star_network(n, stars, y);
    if (net.max_flow(source, sink) >= 1.0 - tol) return;
    auto side = net.source_side();
    std::vector<char> inside(n);
    for (Vertex v = 0; v < n; ++v) inside[v] = !side[v];
    double load = cut_load(stars, y, inside);
    if (load < 1.0 - tol && seen.insert(inside).second) found.push_back({inside, load});
  };
  const Vertex last_root = every_root ? n - 1 : 0;
  for (Vertex root = 0; root <= last_root; ++root) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == root) continue;
      probe(root, t);
      probe(t, root);
    }
  }
  return found;
}

}  // namespace

bool enters(const Star& s, const std::vector<char>& inside) {
  if (inside[s.center]) return false;
  return std::any_of(s.leaves.begin(), s.leaves.end(), [&](Vertex v) { return inside[v]; });
}

double cut_load(std::span<const Star> stars, const Eigen::VectorXd& y,
                const std::vector<char>& inside) {
  double load = 0.0;
  for (std::size_t s = 0; s < stars.size(); ++s)
    if (enters(stars[s], inside)) load += y(s);
  return load;
}

std::optional<CutViolation> separate(const Instance& inst, std::span<const Star> stars,
                                     const Eigen::VectorXd& y, double tol) {
  auto found = find_violations(inst, stars, y, tol, false);
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end(),
                           [](const auto& a, const auto& b) { return a.load < b.load; });
}

std::optional<CutViolation> separate(const Instance& inst, const FractionalSolution& sol,
                                     double tol) {
  return separate(inst, sol.stars, sol.y, tol);
}

FractionalSolution lp_lower_bound(const Instance& inst, double tol, int max_rounds) {
  const int n = inst.num_vertices();
  FractionalSolution sol;
  sol.stars = enumerate_stars(inst);
  const auto k = static_cast<Eigen::Index>(sol.stars.size());
  sol.y = Eigen::VectorXd::Zero(k);
  if (n == 1) return sol;

  Eigen::VectorXd power(k);
  for (Eigen::Index s = 0; s < k; ++s) power(s) = sol.stars[s].power();

  std::vector<std::vector<char>> cuts;
  std::set<std::vector<char>> known;
  auto add_cut = [&](std::vector<char> inside) {
    if (known.insert(inside).second) cuts.push_back(std::move(inside));
  };
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> single(n, 0);
    single[v] = 1;
    add_cut(single);
    for (auto& c : single) c = !c;
    add_cut(single);
  }

  // Solved through the dual: max sum z_X  s.t.  sum_{X : S enters X} z_X <= p(S),
  // whose row prices are the star variables y_S.
  lp::DenseSimplex<double> simplex;
  for (int round = 1; round <= max_rounds; ++round) {
    const auto num_cuts = static_cast<Eigen::Index>(cuts.size());
    Eigen::MatrixXd entering = Eigen::MatrixXd::Zero(k, num_cuts);
    for (Eigen::Index s = 0; s < k; ++s)
      for (Eigen::Index c = 0; c < num_cuts; ++c)
        entering(s, c) = enters(sol.stars[s], cuts[c]) ? 1.0 : 0.0;

    auto result = simplex.maximize(entering, power, Eigen::VectorXd::Ones(num_cuts));
    if (result.status != lp::Status::optimal)
      throw LpError(std::string("restricted LP ended ") + status_name(result.status) + " after " +
                    std::to_string(result.iterations) + " pivots (" + std::to_string(k) +
                    " star rows, " + std::to_string(num_cuts) + " cut columns)");
    sol.y = result.duals.cwiseMax(0.0);
    sol.rounds = round;
    sol.cuts = cuts.size();

    auto violated = find_violations(inst, sol.stars, sol.y, tol, false);
    if (violated.empty()) violated = find_violations(inst, sol.stars, sol.y, tol, true);
    if (violated.empty()) {
      sol.value = sol.y.dot(power);
      return sol;
    }
    for (auto& v : violated) {
      if (known.count(v.inside))
        throw LpError("cut generation stalled: an existing cut is violated with load " +
                      std::to_string(v.load));
      add_cut(std::move(v.inside));
    }
  }
  throw LpError("cut generation did not converge within " + std::to_string(max_rounds) +
                " rounds");
}

GreedyLpReport check_greedy_vs_lp(const Instance& inst, double tol) {
  GreedyLpReport report;
  report.greedy_total = greedy_solve(inst).total_power;
  report.opt_star = lp_lower_bound(inst).value;
  report.ratio = report.opt_star > 0.0 ? report.greedy_total / report.opt_star : 1.0;
  report.passed = report.ratio >= 1.0 - tol && report.ratio <= ratio_beta(0.5) + tol;
  return report;
}

}  // namespace minpower
